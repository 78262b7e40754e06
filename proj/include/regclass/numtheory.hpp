#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Cmp { Less, Equal, Greater };
// Verdict of a possibly inconclusive comparison.
enum class Verdict { Less, Equal, Greater, Indeterminate };

std::string to_string(Cmp c);
std::string to_string(Verdict v);
Verdict to_verdict(Cmp c);

struct PrimePower {
    std::uint64_t prime;
    unsigned mult;
    bool operator==(const PrimePower&) const = default;
};
// Primes strictly increasing, multiplicities >= 1.
using Factorization = std::vector<PrimePower>;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
// Returns (ell, f) when n = ell^f with f >= 1, otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
std::uint64_t least_primitive_root(std::uint64_t p);

BigInt ipow(const BigInt& base, unsigned exp);
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor_q(const Rational& x);
BigInt ceil_q(const Rational& x);

BigInt cyclotomic_value(unsigned n, const BigInt& q);

enum class Twist { Phi4, Phi6, Phi12 };
// Phi4^{+-}(q) = q +- sqrt(2q) + 1 and Phi12^{+-} for q = 2^{2m+1};
// Phi6^{+-}(q) = q +- sqrt(3q) + 1 for q = 3^{2m+1}.
BigInt twisted_cyclotomic(Twist kind, int sign, const BigInt& q);

BigInt partition_count(unsigned n);
BigInt odd_partition_count(unsigned n);

bool is_primitive_prime_divisor(std::uint64_t p, std::uint64_t q, unsigned n);

enum class Root { Half, Quarter };
// Compares k with 2(p-1)^{1/2} (Half) or 2(p-1)^{1/4} (Quarter).
Cmp cmp_threshold(std::uint64_t k, std::uint64_t p, Root root);

Cmp compare(const Rational& a, const Rational& b);
// Compares lhs with c * sqrt(x) exactly, for c >= 0 and x >= 0.
Cmp cmp_with_sqrt(const Rational& lhs, const Rational& c, const Rational& x);

// Closed interval [lo, hi] of rationals.
struct Enclosure {
    Rational lo;
    Rational hi;

    Enclosure() = default;
    explicit Enclosure(const Rational& exact) : lo(exact), hi(exact) {}
    Enclosure(const Rational& l, const Rational& h);

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);

// 2.718281828 < e < 2.718281829.
Enclosure euler_e();
// Encloses sqrt(x) for x >= 0 with width at most 2^-bits relative to the
// denominator scale; exact when x is a rational square.
Enclosure sqrt_enclosure(const Rational& x, unsigned bits = 64);
Enclosure sqrt_enclosure(const Enclosure& x, unsigned bits = 64);

// Greater only if a.lo > b.hi; Less only if a.hi < b.lo; Equal only if both
// are the same exact point.
Verdict certify(const Enclosure& a, const Enclosure& b);

std::string to_string(const Rational& x);
double to_double(const Rational& x);

}  // namespace regclass
