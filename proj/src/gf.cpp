#include "regclass/gf.hpp"

#include <stdexcept>

#include "regclass/numtheory.hpp"

namespace regclass {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b over GF(ell); b nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned ell) {
    Poly bb = b;
    trim(bb);
    trim(a);
    const unsigned lead_inv = static_cast<unsigned>(invmod(bb.back(), ell));
    while (a.size() >= bb.size()) {
        unsigned c = a.back() * lead_inv % ell;
        std::size_t shift = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) {
            a[shift + i] = (a[shift + i] + ell - c * bb[i] % ell) % ell;
        }
        trim(a);
    }
    return a;
}

Poly poly_from_index(std::uint64_t idx, unsigned ell, unsigned len) {
    Poly p(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        p[i] = idx % ell;
        idx /= ell;
    }
    return p;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& poly, unsigned ell) {
    Poly p = poly;
    trim(p);
    if (p.size() < 2) return false;
    const unsigned deg = static_cast<unsigned>(p.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= ell;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly div = poly_from_index(idx, ell, d);
            div.push_back(1);
            if (poly_mod(p, div, ell).empty()) return false;
        }
    }
    return true;
}

Field::Field(unsigned ell, unsigned f) : ell_(ell), f_(f) {
    if (!is_prime(ell)) throw std::invalid_argument("Field: characteristic must be prime");
    if (f < 1 || f > 12) throw std::invalid_argument("Field: degree must lie in 1..12");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f; ++i) q *= ell;
    if (q > 65536) throw std::invalid_argument("Field: size cap 2^16 exceeded");
    q_ = static_cast<unsigned>(q);

    // Least monic irreducible when the lower coefficients are read as a base-ell
    // number (leading digits most significant); for GF(16) this is x^4+x+1.
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        Poly cand = poly_from_index(idx, ell, f);
        cand.push_back(1);
        if (is_irreducible(cand, ell)) {
            modulus_ = cand;
            break;
        }
    }
    if (modulus_.empty()) throw std::logic_error("Field: no irreducible polynomial found");

    for (Elem g = 1; g < q_; ++g) {
        if (order(g) == q_ - 1) {
            primitive_ = g;
            break;
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (unsigned i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_poly(x, primitive_);
    }
    if (x != 1) throw std::logic_error("Field: primitive element check failed");
}

std::string Field::modulus_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    return s + "]";
}

Field::Elem Field::generator_x() const {
    if (f_ == 1) return static_cast<Elem>((ell_ - modulus_[0]) % ell_);
    return ell_;
}

Field::Elem Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(ell_);
    if (r < 0) r += ell_;
    return static_cast<Elem>(r);
}

std::vector<unsigned> Field::coeffs(Elem a) const { return poly_from_index(a, ell_, f_); }

Field::Elem Field::from_coeffs(const std::vector<unsigned>& c) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < f_; ++i) {
        unsigned v = i < c.size() ? c[i] % ell_ : 0;
        r += v * scale;
        scale *= ell_;
    }
    return r;
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (f_ == 1) return (a + b) % ell_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < f_; ++i) {
        r += ((a % ell_ + b % ell_) % ell_) * scale;
        a /= ell_;
        b /= ell_;
        scale *= ell_;
    }
    return r;
}

Field::Elem Field::neg(Elem a) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < f_; ++i) {
        r += ((ell_ - a % ell_) % ell_) * scale;
        a /= ell_;
        scale *= ell_;
    }
    return r;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

Field::Elem Field::frobenius(Elem a, unsigned k) const {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k % f_; ++i) e *= ell_;
    return pow(a, e);
}

Field::Elem Field::mul_poly(Elem a, Elem b) const {
    Poly pa = coeffs(a), pb = coeffs(b);
    Poly prod(2 * f_, 0);
    for (unsigned i = 0; i < f_; ++i) {
        for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % ell_;
    }
    Poly r = poly_mod(prod, modulus_, ell_);
    return from_coeffs(r);
}

Field::Elem Field::inv_euclid(Elem a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    // Invariant: s*a = r (mod modulus).
    auto sub_mul = [&](const Poly& x, const Poly& y, const Poly& qt) {
        Poly prod(y.size() + qt.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < qt.size(); ++j) prod[i + j] = (prod[i + j] + y[i] * qt[j]) % ell_;
        Poly out(std::max(x.size(), prod.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            unsigned xv = i < x.size() ? x[i] : 0;
            unsigned pv = i < prod.size() ? prod[i] : 0;
            out[i] = (xv + ell_ - pv) % ell_;
        }
        trim(out);
        return out;
    };
    Poly r0 = modulus_, r1 = coeffs(a), s0{}, s1{1};
    trim(r1);
    while (!r1.empty() && r1.size() > 1) {
        // quotient of r0 by r1
        Poly rem = r0, qt(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        trim(rem);
        const unsigned lead_inv = static_cast<unsigned>(invmod(r1.back(), ell_));
        while (rem.size() >= r1.size() && !rem.empty()) {
            unsigned c = rem.back() * lead_inv % ell_;
            std::size_t shift = rem.size() - r1.size();
            qt[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + ell_ - c * r1[i] % ell_) % ell_;
            trim(rem);
        }
        Poly s2 = sub_mul(s0, s1, qt);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r1 is a nonzero constant c; the inverse is s1 / c.
    unsigned cinv = static_cast<unsigned>(invmod(r1[0], ell_));
    for (auto& c : s1) c = c * cinv % ell_;
    Poly red = poly_mod(s1, modulus_, ell_);
    return from_coeffs(red);
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw std::domain_error("Field: zero has no multiplicative order");
    std::uint64_t n = 1;
    Elem x = a;
    while (x != 1) {
        x = mul_poly(x, a);
        ++n;
    }
    return n;
}

}  // namespace regclass
