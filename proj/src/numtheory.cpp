#include "regclass/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace regclass {

std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Less: return "Less";
        case Verdict::Equal: return "Equal";
        case Verdict::Greater: return "Greater";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

Verdict to_verdict(Cmp c) {
    switch (c) {
        case Cmp::Less: return Verdict::Less;
        case Cmp::Equal: return Verdict::Equal;
        case Cmp::Greater: return Verdict::Greater;
    }
    return Verdict::Indeterminate;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: argument not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : small) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<std::uint64_t, unsigned> found;
    auto strip = [&](std::uint64_t p) {
        while (n % p == 0) {
            n /= p;
            ++found[p];
        }
    };
    strip(2);
    strip(3);
    const std::uint64_t trial_limit = 1u << 20;
    for (std::uint64_t p = 5; p <= trial_limit && p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
        if (n > 1 && is_prime(n)) break;
    }
    if (n > 1) factor_into(n, found);
    Factorization f;
    for (auto [p, m] : found) f.push_back({p, m});
    return f;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& pp : factorize(n)) {
        std::size_t cur = ds.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < pp.mult; ++i) {
            pk *= pp.prime;
            for (std::size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
    return r;
}

int mobius(std::uint64_t n) {
    int s = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.mult > 1) return 0;
        s = -s;
    }
    return s;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return {f[0].prime, f[0].mult};
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (gcd_u64(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    if (m == 1) return 1;
    std::uint64_t ord = euler_phi(m);
    for (const auto& pp : factorize(ord)) {
        for (unsigned i = 0; i < pp.mult && ord % pp.prime == 0; ++i) {
            if (powmod(a, ord / pp.prime, m) == 1) {
                ord /= pp.prime;
            } else {
                break;
            }
        }
    }
    return ord;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto ps = prime_divisors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t r : ps) {
            if (powmod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::invalid_argument("least_primitive_root: p must be prime");
}

BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt s = isqrt(n);
    return s * s == n;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return ceil_q(Rational(a, b));
}

BigInt floor_q(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

BigInt ceil_q(const Rational& x) {
    return -floor_q(-x);
}

BigInt cyclotomic_value(unsigned n, const BigInt& q) {
    if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be positive");
    if (q < 2) throw std::invalid_argument("cyclotomic_value: q must be at least 2");
    BigInt num = 1, den = 1;
    for (std::uint64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        BigInt term = ipow(q, static_cast<unsigned>(d)) - 1;
        if (mu > 0) {
            num *= term;
        } else {
            den *= term;
        }
    }
    if (num % den != 0) throw std::logic_error("cyclotomic_value: inexact quotient");
    return num / den;
}

namespace {

// Returns m when q = base^{2m+1}; throws otherwise.
unsigned odd_exponent_half(const BigInt& q, unsigned base) {
    if (q < base) throw std::invalid_argument("twisted_cyclotomic: q too small");
    BigInt v = q;
    unsigned e = 0;
    while (v % base == 0) {
        v /= base;
        ++e;
    }
    if (v != 1 || e % 2 == 0) {
        throw std::invalid_argument("twisted_cyclotomic: q must be " + std::to_string(base) +
                                    "^(2m+1)");
    }
    return (e - 1) / 2;
}

}  // namespace

BigInt twisted_cyclotomic(Twist kind, int sign, const BigInt& q) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twisted_cyclotomic: sign must be +-1");
    switch (kind) {
        case Twist::Phi4: {
            unsigned m = odd_exponent_half(q, 2);
            BigInt s = ipow(2, m + 1);  // sqrt(2q)
            return q + sign * s + 1;
        }
        case Twist::Phi6: {
            unsigned m = odd_exponent_half(q, 3);
            BigInt s = ipow(3, m + 1);  // sqrt(3q)
            return q + sign * s + 1;
        }
        case Twist::Phi12: {
            unsigned m = odd_exponent_half(q, 2);
            BigInt s1 = ipow(2, 3 * m + 2);  // sqrt(2q^3)
            BigInt s2 = ipow(2, m + 1);      // sqrt(2q)
            return q * q + sign * s1 + q + sign * s2 + 1;
        }
    }
    throw std::invalid_argument("twisted_cyclotomic: unknown kind");
}

namespace {

std::vector<BigInt> partition_table(unsigned n, bool odd_only) {
    std::vector<BigInt> t(n + 1, 0);
    t[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        if (odd_only && part % 2 == 0) continue;
        for (unsigned s = part; s <= n; ++s) t[s] += t[s - part];
    }
    return t;
}

struct PartitionCache {
    std::mutex mu;
    std::vector<BigInt> all, odd;
};

PartitionCache& partition_cache() {
    static PartitionCache c;
    return c;
}

BigInt cached_partition(unsigned n, bool odd_only) {
    auto& c = partition_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto& t = odd_only ? c.odd : c.all;
    if (t.size() <= n) t = partition_table(std::max(n, 2 * static_cast<unsigned>(t.size())), odd_only);
    return t[n];
}

}  // namespace

BigInt partition_count(unsigned n) { return cached_partition(n, false); }

BigInt odd_partition_count(unsigned n) { return cached_partition(n, true); }

bool is_primitive_prime_divisor(std::uint64_t p, std::uint64_t q, unsigned n) {
    if (n == 0 || q < 2 || !is_prime(p)) return false;
    if (q % p == 0) return false;
    return multiplicative_order(q % p, p) == n;
}

Cmp cmp_threshold(std::uint64_t k, std::uint64_t p, Root root) {
    if (p < 2) throw std::invalid_argument("cmp_threshold: p must be at least 2");
    BigInt lhs = k;
    BigInt rhs = BigInt(p - 1);
    if (root == Root::Half) {
        lhs = lhs * lhs;
        rhs *= 4;
    } else {
        lhs = lhs * lhs * lhs * lhs;
        rhs *= 16;
    }
    if (lhs < rhs) return Cmp::Less;
    if (lhs > rhs) return Cmp::Greater;
    return Cmp::Equal;
}

Cmp compare(const Rational& a, const Rational& b) {
    if (a < b) return Cmp::Less;
    if (a > b) return Cmp::Greater;
    return Cmp::Equal;
}

Cmp cmp_with_sqrt(const Rational& lhs, const Rational& c, const Rational& x) {
    if (c < 0 || x < 0) throw std::invalid_argument("cmp_with_sqrt: c and x must be nonnegative");
    if (lhs < 0) return Cmp::Less;
    return compare(lhs * lhs, c * c * x);
}

Enclosure::Enclosure(const Rational& l, const Rational& h) : lo(l), hi(h) {
    if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("Enclosure: division by an interval containing 0");
    Enclosure inv{Rational(1) / b.hi, Rational(1) / b.lo};
    return a * inv;
}

Enclosure euler_e() {
    return {Rational(2718281828, 1000000000), Rational(2718281829, 1000000000)};
}

Enclosure sqrt_enclosure(const Rational& x, unsigned bits) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    BigInt a = boost::multiprecision::numerator(x);
    BigInt b = boost::multiprecision::denominator(x);
    // sqrt(a/b) = sqrt(a*b)/b
    BigInt ab = a * b;
    if (is_square(ab)) return Enclosure(Rational(isqrt(ab), b));
    BigInt scale = BigInt(1) << bits;
    BigInt s = isqrt(ab * scale * scale);
    return {Rational(s, b * scale), Rational(s + 1, b * scale)};
}

Enclosure sqrt_enclosure(const Enclosure& x, unsigned bits) {
    if (x.lo < 0) throw std::domain_error("sqrt_enclosure: interval reaches below 0");
    return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

Verdict certify(const Enclosure& a, const Enclosure& b) {
    if (a.lo > b.hi) return Verdict::Greater;
    if (a.hi < b.lo) return Verdict::Less;
    if (a.is_exact() && b.is_exact() && a.lo == b.lo) return Verdict::Equal;
    return Verdict::Indeterminate;
}

std::string to_string(const Rational& x) {
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace regclass
