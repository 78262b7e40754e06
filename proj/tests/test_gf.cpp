#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "regclass/gf.hpp"
#include "regclass/numtheory.hpp"

using namespace regclass;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 3}, {2, 4},
    {7, 2}, {2, 5}, {2, 6}, {3, 4}, {2, 7}, {3, 5}, {2, 8}, {2, 12}, {127, 1}};

}  // namespace

TEST_CASE("modulus choice") {
    CHECK(Field(2, 1).modulus() == std::vector<unsigned>{0, 1});
    CHECK(Field(3, 2).modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(Field(2, 4).modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
    CHECK(Field(2, 2).modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK_THROWS(Field(4, 1));
    CHECK_THROWS(Field(2, 17));
    CHECK_THROWS(Field(257, 2));
    for (auto [ell, f] : kFields) CHECK(is_irreducible(Field(ell, f).modulus(), ell));
}

TEST_CASE("small arithmetic facts") {
    Field f4(2, 2);
    const auto x = f4.generator_x();
    CHECK(f4.add(x, x) == 0);
    CHECK(f4.frobenius(x, 1) == f4.add(x, 1));
    Field f9(3, 2);
    const auto y = f9.generator_x();
    CHECK(f9.mul(y, y) == 2);
    CHECK_THROWS(f9.inv(0));
}

TEST_CASE("field axioms exhaustively for q <= 64") {
    for (auto [ell, f] : kFields) {
        Field F(ell, f);
        const unsigned q = F.size();
        if (q > 64) continue;
        for (unsigned a = 0; a < q; ++a) {
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.inv(a) == F.inv_euclid(a));
            }
            CHECK(F.add(a, F.neg(a)) == 0);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.mul(a, b) == F.mul_poly(a, b));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms sampled for larger q") {
    std::mt19937_64 rng(3);
    for (auto [ell, f] : kFields) {
        Field F(ell, f);
        const unsigned q = F.size();
        if (q <= 64) continue;
        for (int i = 0; i < 3000; ++i) {
            unsigned a = rng() % q, b = rng() % q, c = rng() % q;
            CHECK(F.mul(a, b) == F.mul_poly(a, b));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            if (a != 0) CHECK(F.inv(a) == F.inv_euclid(a));
        }
    }
}

TEST_CASE("multiplicative group is cyclic and Fermat holds") {
    for (auto [ell, f] : kFields) {
        Field F(ell, f);
        const unsigned q = F.size();
        if (q > 8192) continue;
        CHECK(F.order(F.primitive()) == q - 1);
        for (unsigned a = 0; a < q; ++a) CHECK(F.pow(a, q) == a);
    }
}

TEST_CASE("frobenius fixed sets are subfields") {
    for (auto [ell, f] : kFields) {
        Field F(ell, f);
        const unsigned q = F.size();
        if (q > 8192) continue;
        for (unsigned k = 0; k <= f; ++k) {
            unsigned fixed = 0;
            for (unsigned a = 0; a < q; ++a) {
                if (F.frobenius(a, k) == a) ++fixed;
                if (k == 1 && a < 50) {
                    for (unsigned b = 0; b < std::min(q, 50u); ++b)
                        CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
                }
            }
            unsigned expect = 1;
            for (unsigned i = 0; i < gcd_u64(k, f); ++i) expect *= ell;
            if (k == 0) expect = q;
            CHECK(fixed == expect);
        }
    }
}
