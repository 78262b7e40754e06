#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace regclass {

// Finite field GF(ell^f). Elements are encoded as integers 0..q-1 whose base-ell
// digits are the polynomial coefficients, constant term first.
class Field {
public:
    using Elem = std::uint32_t;

    Field(unsigned ell, unsigned f);

    unsigned ell() const { return ell_; }
    unsigned degree() const { return f_; }
    unsigned size() const { return q_; }
    // Monic, length f+1, constant term first.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // The element x (the class of the indeterminate); equals an integer when f = 1.
    Elem generator_x() const;
    Elem from_int(std::int64_t n) const;
    Elem primitive() const { return primitive_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    // a^(ell^k)
    Elem frobenius(Elem a, unsigned k) const;

    // Multiplication by schoolbook polynomial product and reduction; independent of
    // the log tables used by mul().
    Elem mul_poly(Elem a, Elem b) const;
    // Inverse by the extended Euclidean algorithm on polynomials.
    Elem inv_euclid(Elem a) const;

    std::vector<unsigned> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<unsigned>& c) const;
    std::uint64_t order(Elem a) const;

private:
    unsigned ell_, f_, q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    Elem primitive_ = 1;
};

// Monic irreducibility over GF(ell) by trial division; coefficients constant term first.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned ell);

}  // namespace regclass
