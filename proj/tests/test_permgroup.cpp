#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "regclass/permgroup.hpp"

using namespace regclass;

namespace {

PermGroup cyc(unsigned n) {
    std::vector<unsigned> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = i;
    return PermGroup(n, {perm_from_cycles(n, {c})});
}

PermGroup dihedral(unsigned n) {
    std::vector<unsigned> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = i;
    std::vector<std::vector<unsigned>> refl;
    for (unsigned i = 1; i < n - i; ++i) refl.push_back({i, n - i});
    return PermGroup(n, {perm_from_cycles(n, {c}), perm_from_cycles(n, refl)});
}

PermGroup sym(unsigned n) {
    std::vector<unsigned> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = i;
    return PermGroup(n, {perm_from_cycles(n, {c}), perm_from_cycles(n, {{0, 1}})});
}

PermGroup alt(unsigned n) {
    std::vector<Perm> gens;
    for (unsigned i = 2; i < n; ++i) gens.push_back(perm_from_cycles(n, {{0, 1, i}}));
    return PermGroup(n, gens);
}

std::multiset<std::pair<std::uint64_t, std::uint64_t>> size_order(const ClassTable& T) {
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> s;
    for (const auto& c : T.classes()) s.insert({c.size, c.order});
    return s;
}

// Number of classes by Burnside: average over h of |{g : g h = h g}|.
std::uint64_t burnside_class_count(const PermGroup& G) {
    auto elems = enumerate_elements_bfs(G, 20000);
    const auto& sc = G.chain();
    std::vector<Point> base(sc.length());
    for (std::size_t i = 0; i < base.size(); ++i) base[i] = sc.base_point(i);
    std::uint64_t fixed = 0;
    for (const auto& h : elems)
        for (const auto& g : elems) {
            // elements agree iff they agree on the base
            bool commute = true;
            for (Point b : base)
                if (h[g[b]] != g[h[b]]) {
                    commute = false;
                    break;
                }
            fixed += commute;
        }
    return fixed / elems.size();
}

void check_table_invariants(const ClassTable& T) {
    std::uint64_t total = 0;
    for (const auto& c : T.classes()) {
        CHECK(T.group_order() % c.size == 0);
        CHECK(perm_order(c.rep) == c.order);
        total += c.size;
    }
    CHECK(total == T.group_order());
    CHECK(T[0].order == 1);
    CHECK(T[0].size == 1);
    for (std::size_t i = 1; i < T.size(); ++i) {
        const auto& a = T[i - 1];
        const auto& b = T[i];
        CHECK(std::tie(a.order, a.size, a.rep) < std::tie(b.order, b.size, b.rep));
    }
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(group_order(PermGroup(5, {})) == 1);
    CHECK(group_order(alt(5)) == 60);
    CHECK(group_order(sym(7)) == 5040);
    CHECK(group_order(dihedral(5)) == 10);
    CHECK(group_order(alt(8)) == 20160);
    // Mathieu M11 on 11 points
    PermGroup m11(11, {perm_from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                       perm_from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
    CHECK(group_order(m11) == 7920);
    CHECK(enumerate_elements_bfs(m11, 10000).size() == 7920);
    CHECK_THROWS_AS(enumerate_elements_bfs(m11, 100), ResourceError);
    for (unsigned n = 2; n <= 6; ++n) CHECK(enumerate_elements_bfs(sym(n), 1000).size() == group_order(sym(n)));
}

TEST_CASE("rank and unrank are inverse bijections") {
    for (const auto& G : {alt(5), sym(5), dihedral(9), alt(6)}) {
        const auto& sc = G.chain();
        const std::uint64_t n = G.order_u64();
        std::set<Perm> seen;
        for (std::uint64_t r = 0; r < n; ++r) {
            Perm g = sc.unrank(r);
            CHECK(G.contains(g));
            CHECK(sc.rank(g) == r);
            seen.insert(g);
        }
        CHECK(seen.size() == n);
    }
    CHECK_FALSE(alt(5).contains(perm_from_cycles(5, {{0, 1}})));
}

TEST_CASE("class enumeration examples") {
    auto a5 = conjugacy_classes(alt(5));
    CHECK(a5.size() == 5);
    CHECK(size_order(a5) == std::multiset<std::pair<std::uint64_t, std::uint64_t>>{
                                {1, 1}, {15, 2}, {20, 3}, {12, 5}, {12, 5}});
    auto c6 = conjugacy_classes(cyc(6));
    CHECK(c6.size() == 6);
    for (const auto& c : c6.classes()) CHECK(c.size == 1);
    auto d10 = conjugacy_classes(dihedral(5));
    CHECK(size_order(d10) ==
          std::multiset<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {5, 2}, {2, 5}, {2, 5}});
    check_table_invariants(a5);
    check_table_invariants(d10);
    CHECK_THROWS_AS(conjugacy_classes(sym(7), EnumOptions{1000}), ResourceError);
}

TEST_CASE("class enumeration agrees with Burnside and closure search") {
    std::vector<PermGroup> groups = {cyc(12), dihedral(8), dihedral(15), sym(4), sym(5), alt(6), sym(6), alt(7)};
    for (const auto& G : groups) {
        auto T = conjugacy_classes(G);
        check_table_invariants(T);
        CHECK(T.size() == burnside_class_count(G));
        std::mt19937_64 rng(5);
        for (int i = 0; i < 30; ++i) {
            Perm g = G.chain().unrank(rng() % G.order_u64());
            auto [rep, size] = class_closure_min(G, g);
            const std::size_t c = T.class_of(g);
            CHECK(T[c].rep == rep);
            CHECK(T[c].size == size);
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    auto a = conjugacy_classes(sym(6));
    auto b = conjugacy_classes(sym(6));
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].rep == b[i].rep);
}

TEST_CASE("p-part split") {
    Perm g = perm_from_cycles(5, {{0, 1}, {2, 3, 4}});
    auto s = p_part_split(g, 2);
    CHECK(s.p_part == power(g, 3));
    CHECK(s.p_prime_part == power(g, 4));
    auto t = p_part_split(perm_from_cycles(4, {{0, 1, 2, 3}}), 2);
    CHECK(t.p_prime_part == identity_perm(4));
    auto u = p_part_split(perm_from_cycles(3, {{0, 1, 2}}), 2);
    CHECK(u.p_part == identity_perm(3));

    PermGroup S = sym(9);
    std::mt19937_64 rng(17);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 10000; ++i) {
        Perm x = S.chain().unrank(rng() % S.order_u64());
        const std::uint64_t p = primes[i % 4];
        auto sp = p_part_split(x, p);
        const std::uint64_t m = perm_order(x);
        CHECK(compose(sp.p_part, sp.p_prime_part) == x);
        CHECK(compose(sp.p_part, sp.p_prime_part) == compose(sp.p_prime_part, sp.p_part));
        CHECK(perm_order(sp.p_part) == p_part(m, p));
        CHECK(perm_order(sp.p_prime_part) == m / p_part(m, p));
    }
}

TEST_CASE("class counts") {
    auto a5 = conjugacy_classes(alt(5));
    auto cc = class_counts(a5, 5);
    CHECK(cc.k_p == 2);
    CHECK(cc.k_p_prime == 3);
    auto d10 = conjugacy_classes(dihedral(5));
    auto cd = class_counts(d10, 5);
    CHECK(cd.k_p == 2);
    CHECK(cd.k_p_prime == 2);
    auto s4 = conjugacy_classes(sym(4));
    auto c2 = class_counts(s4, 2);
    CHECK(c2.k_p == 3);
    CHECK(c2.k_p_prime == 2);
    auto c6 = class_counts(conjugacy_classes(cyc(6)), 2);
    CHECK(c6.k_p + c6.k_p_prime < c6.k);
}

TEST_CASE("power maps and Galois action") {
    auto a5 = conjugacy_classes(alt(5));
    auto m1 = power_class_map(a5, 1);
    for (std::size_t c = 0; c < m1.size(); ++c) CHECK(m1[c] == c);
    // 7 acts as squaring on 5-elements and trivially on 2- and 3-elements
    auto m2 = power_class_map(a5, 7);
    CHECK(m2[3] == 4);
    CHECK(m2[4] == 3);
    for (std::size_t c = 0; c < 3; ++c) CHECK(m2[c] == c);
    CHECK(power_class_map(a5, 7) == power_class_map(a5, 67));
    CHECK(power_class_map(a5, 7) == power_class_map(a5, -23));
    CHECK_THROWS(power_class_map(a5, 3));

    auto s6 = conjugacy_classes(sym(6));
    const auto e = static_cast<std::int64_t>(s6.exponent());
    for (std::int64_t k = 1; k < e; ++k) {
        if (gcd_u64(k, e) != 1) continue;
        for (std::int64_t l = 1; l < e; ++l) {
            if (gcd_u64(l, e) != 1) continue;
            auto mk = power_class_map(s6, k), ml = power_class_map(s6, l), mkl = power_class_map(s6, k * l % e);
            for (std::size_t c = 0; c < mk.size(); ++c) CHECK(mk[ml[c]] == mkl[c]);
        }
    }

    CHECK(galois_fixed_class_count(conjugacy_classes(dihedral(5)), 5) == 2);
    CHECK(galois_fixed_class_count(conjugacy_classes(cyc(7)), 7) == 1);
    CHECK(galois_fixed_class_count(a5, 5) == 3);
    CHECK_THROWS(galois_fixed_class_count(a5, 2));
    CHECK_THROWS(galois_fixed_class_count(a5, 7));
}

TEST_CASE("quotients") {
    PermGroup s4 = sym(4);
    std::vector<Perm> v4 = {perm_from_cycles(4, {{0, 1}, {2, 3}}), perm_from_cycles(4, {{0, 2}, {1, 3}})};
    auto Q = quotient_group(s4, v4);
    CHECK(group_order(Q) == 6);
    CHECK(conjugacy_classes(Q).size() == 3);
    CHECK(group_order(quotient_group(s4, {})) == 24);
    CHECK(group_order(quotient_group(s4, s4.generators())) == 1);
    try {
        quotient_group(s4, {perm_from_cycles(4, {{0, 1}})});
        CHECK(false);
    } catch (const NotNormalError& err) {
        CHECK_FALSE(PermGroup(4, {perm_from_cycles(4, {{0, 1}})}).contains(err.witness()));
    }
}

TEST_CASE("derived series") {
    CHECK(group_order(derived_subgroup(sym(4))) == 12);
    CHECK(group_order(derived_subgroup(alt(5))) == 60);
    CHECK(is_solvable(sym(4)));
    CHECK_FALSE(is_solvable(alt(5)));
    CHECK(is_solvable(dihedral(15)));
    CHECK(group_order(normal_closure(sym(5), {perm_from_cycles(5, {{0, 1, 2}})})) == 60);
}

TEST_CASE("class cache round trip") {
    auto T = conjugacy_classes(alt(6));
    std::stringstream ss;
    write_class_cache(T, ss);
    auto U = read_class_cache(ss);
    REQUIRE(U.size() == T.size());
    CHECK_FALSE(U.has_dense_index());
    for (std::size_t i = 0; i < T.size(); ++i) {
        CHECK(U[i].rep == T[i].rep);
        CHECK(U[i].size == T[i].size);
    }
    for (std::size_t c = 0; c < T.size(); ++c) CHECK(U.power_table(c) == T.power_table(c));

    std::stringstream out;
    write_class_cache(T, out);
    std::string text = out.str();
    // corrupt one class size
    auto pos = text.find("\n45 ");
    if (pos == std::string::npos) pos = text.find("\n40 ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos + 1, 2, "44");
    std::stringstream bad(text);
    CHECK_THROWS(read_class_cache(bad));
}
