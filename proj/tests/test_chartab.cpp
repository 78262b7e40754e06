#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "regclass/catalog.hpp"
#include "regclass/chartab.hpp"

using namespace regclass;

namespace {

struct Built {
    PermGroup group;
    ClassTable table;
    CharacterTable chars;
};

Built table_of(const std::string& id) {
    auto b = build(parse_entry(id));
    ClassTable T = conjugacy_classes(b.group);
    CharacterTable X = character_table(T);
    return {b.group, std::move(T), std::move(X)};
}

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& X) {
    auto d = X.degrees;
    std::sort(d.begin(), d.end());
    return d;
}

// Brute-force product count for a(i,j,l).
std::uint64_t brute_constant(const ClassTable& T, const std::vector<Perm>& elems, std::size_t i, std::size_t j,
                             std::size_t l) {
    std::uint64_t n = 0;
    for (const auto& x : elems) {
        if (T.class_of(x) != i) continue;
        // y = x^-1 z_l
        Perm y = compose(inverse(x), T[l].rep);
        n += T.class_of(y) == j;
    }
    return n;
}

}  // namespace

TEST_CASE("cyclotomic values: Galois action and conjugation") {
    CycValue v{{{0, 1}, {3, 2}}};
    CHECK(galois_image(v, 1, 5) == v);
    CHECK(galois_image(v, 2, 5) == CycValue{{{0, 1}, {1, 2}}});
    CHECK(complex_conjugate(v, 5) == CycValue{{{0, 1}, {2, 2}}});
    CHECK(v.multiplicity_sum() == 3);
    // collisions merge multiplicities
    CHECK(galois_image(CycValue{{{1, 1}, {4, 1}}}, 5, 6) == CycValue{{{2, 1}, {5, 1}}});
    CHECK(to_string(CycValue{}, 5) == "0");
    CHECK(to_string(CycValue{{{0, 2}}}, 5) == "2");
}

TEST_CASE("unit subgroup generators generate the right subgroup") {
    for (std::uint64_t e : {1u, 2u, 4u, 8u, 12u, 16u, 30u, 40u, 60u, 63u, 120u, 168u, 360u, 720u}) {
        for (std::uint64_t m : divisors(e)) {
            auto gens = unit_subgroup_generators(e, m);
            // closure of the generators
            std::vector<char> in(e, 0);
            std::vector<std::uint64_t> todo{1 % e};
            in[1 % e] = 1;
            while (!todo.empty()) {
                auto k = todo.back();
                todo.pop_back();
                for (auto g : gens) {
                    auto n = mulmod(k, g, e);
                    if (!in[n]) in[n] = 1, todo.push_back(n);
                }
            }
            for (std::uint64_t k = 0; k < e; ++k) {
                const bool expected = gcd_u64(k, e) == 1 && k % m == 1 % m;
                CHECK_MESSAGE((in[k] != 0) == expected, "e=", e, " m=", m, " k=", k);
            }
        }
    }
}

TEST_CASE("class algebra constants") {
    auto b = build(parse_entry("sym(3)"));
    auto T = conjugacy_classes(b.group);
    ClassAlgebra A(T);
    REQUIRE(T.size() == 3);
    REQUIRE(T[1].size == 3);
    REQUIRE(T[2].size == 2);
    CHECK(A.at(1, 1, 0) == 3);
    CHECK(A.at(1, 1, 2) == 3);

    for (const char* id : {"alt(5)", "frobenius(7,3)", "sym(4)", "dihedral(8)"}) {
        auto g = build(parse_entry(id));
        auto TT = conjugacy_classes(g.group);
        ClassAlgebra AA(TT);
        auto elems = enumerate_elements_bfs(g.group, 1000);
        const std::size_t k = TT.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::uint64_t s = 0;
                for (std::size_t l = 0; l < k; ++l) {
                    s += AA.at(i, j, l) * TT[l].size;
                    CHECK(AA.at(i, j, l) == brute_constant(TT, elems, i, j, l));
                    if (i == 0) CHECK(AA.at(0, j, l) == (j == l ? 1u : 0u));
                }
                CHECK(s == TT[i].size * TT[j].size);
            }
    }
}

TEST_CASE("small character tables") {
    auto c3 = table_of("cyclic(3)");
    CHECK(sorted_degrees(c3.chars) == std::vector<std::uint64_t>{1, 1, 1});
    // values on a generator class are the three cube roots of unity
    std::set<CycValue> vals;
    for (const auto& row : c3.chars.rows) vals.insert(row[1]);
    CHECK(vals == std::set<CycValue>{CycValue{{{0, 1}}}, CycValue{{{1, 1}}}, CycValue{{{2, 1}}}});

    auto d10 = table_of("frobenius(5,2)");
    CHECK(sorted_degrees(d10.chars) == std::vector<std::uint64_t>{1, 1, 2, 2});
    for (std::size_t c = 0; c < d10.chars.size(); ++c) {
        if (d10.chars.degrees[c] != 2) continue;
        for (std::size_t l = 0; l < d10.table.size(); ++l)
            if (d10.table[l].order == 5)
                for (auto [j, m] : d10.chars.rows[c][l].terms) CHECK(j % (d10.chars.exponent / 5) == 0);
    }

    auto a5 = table_of("alt(5)");
    CHECK(sorted_degrees(a5.chars) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
    CHECK(a5.chars.degrees == sorted_degrees(a5.chars));  // canonical ordering starts with degree
    CHECK(a5.chars.modulus % a5.chars.exponent == 1);
}

TEST_CASE("character tables satisfy the identity-column relation and rationality consistency") {
    for (const char* id : {"sym(5)", "psl2(7)", "frobenius(13,3)", "sl2(5)", "alt(6)", "cyclic(12)", "pgl2(5)"}) {
        auto t = table_of(id);
        const auto& X = t.chars;
        const auto& T = t.table;
        CHECK(X.size() == T.size());
        std::uint64_t sumsq = 0;
        for (auto d : X.degrees) sumsq += d * d;
        CHECK(sumsq == T.group_order());
        for (auto p : prime_divisors(T.group_order())) {
            for (const auto& f : classify_rationality(X, T, p)) CHECK(f.rational == (f.p_rational && f.p_prime_rational));
            auto flags = classify_rationality(X, T, p);
            CHECK(flags[0].rational);
        }
        CHECK(brauer_cross_check(T, X).ok);
    }
}

TEST_CASE("rationality flags on D10 and S3") {
    auto d10 = table_of("frobenius(5,2)");
    auto flags = classify_rationality(d10.chars, d10.table, 5);
    for (std::size_t c = 0; c < d10.chars.size(); ++c) {
        if (d10.chars.degrees[c] == 1) {
            CHECK(flags[c].rational);
        } else {
            CHECK(flags[c].p_prime_rational);
            CHECK(flags[c].qp_valued);
            CHECK_FALSE(flags[c].p_rational);
        }
    }
    auto s3 = table_of("sym(3)");
    for (std::uint64_t p : {2u, 3u})
        for (const auto& f : classify_rationality(s3.chars, s3.table, p)) CHECK(f.rational);
}

TEST_CASE("character count reports") {
    auto d10 = table_of("frobenius(5,2)");
    auto r = character_count_report(d10.chars, d10.table, 5);
    CHECK(r.union_count == 4);
    CHECK(r.union_vs_threshold == Cmp::Equal);

    auto c5 = table_of("cyclic(5)");
    r = character_count_report(c5.chars, c5.table, 5);
    CHECK(r.union_count == 5);
    CHECK(r.union_vs_threshold == Cmp::Greater);

    auto a5 = table_of("alt(5)");
    r = character_count_report(a5.chars, a5.table, 5);
    CHECK(r.union_vs_threshold == Cmp::Greater);
    CHECK_THROWS(character_count_report(a5.chars, a5.table, 7));
}

TEST_CASE("Brauer permutation lemma cross-check") {
    auto a5 = table_of("alt(5)");
    CHECK(fixed_character_count(a5.chars, a5.table, 1) == 5);
    // k=7 swaps the two order-5 classes and the two degree-3 characters
    CHECK(fixed_character_count(a5.chars, a5.table, 7) == 3);
    auto pm = power_class_map(a5.table, 7);
    std::size_t fixed = 0;
    for (std::size_t l = 0; l < pm.size(); ++l) fixed += pm[l] == l;
    CHECK(fixed == 3);
    auto chk = brauer_cross_check(a5.table, a5.chars);
    CHECK(chk.ok);
    CHECK(chk.galois_elements == euler_phi(30));

    auto d10 = table_of("frobenius(5,2)");
    CHECK(character_count_report(d10.chars, d10.table, 5).p_rational == 2);
    CHECK(galois_fixed_class_count(d10.table, 5) == 2);
}

TEST_CASE("character table cache round trip and corruption") {
    auto t = table_of("psl2(8)");
    std::stringstream ss;
    write_character_table(t.chars, "psl2(8)", ss);
    const std::string text = ss.str();
    std::istringstream in(text);
    auto back = read_character_table(in, t.table);
    CHECK(back.rows == t.chars.rows);
    CHECK(back.degrees == t.chars.degrees);

    // change one multiplicity in the last row
    std::string bad = text;
    auto pos = bad.rfind(":1");
    REQUIRE(pos != std::string::npos);
    bad[pos + 1] = '2';
    std::istringstream in2(bad);
    CHECK_THROWS(read_character_table(in2, t.table));
}

TEST_CASE("feasibility limits") {
    CHECK(chartab_feasible(80, 3'000'000));
    CHECK_FALSE(chartab_feasible(81, 100));
    CHECK_FALSE(chartab_feasible(10, 3'000'001));
    auto b = build(parse_entry("cyclic(30)"));
    auto T = conjugacy_classes(b.group);
    CHECK(T.size() == 30);
    CHECK_NOTHROW(character_table(T));
}
