#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "regclass/autorbits.hpp"
#include "regclass/catalog.hpp"

using namespace regclass;

namespace {

struct Fused {
    ClassTable table;
    OrbitPartition part;
};

Fused fused(const std::string& id) {
    auto b = build(parse_entry(id));
    ClassTable T = conjugacy_classes(b.group);
    OrbitPartition part = fuse_classes(T, b.aut_conjugators);
    return {std::move(T), std::move(part)};
}

}  // namespace

TEST_CASE("no conjugators leaves every class alone") {
    auto b = build(parse_entry("alt(5)"));
    auto T = conjugacy_classes(b.group);
    auto part = fuse_classes(T, {});
    CHECK(part.count() == T.size());
    for (std::size_t i = 0; i < T.size(); ++i) CHECK(part.orbits[part.orbit_of[i]] == std::vector<std::size_t>{i});
}

TEST_CASE("A6 under the semilinear group fuses its paired classes") {
    auto f = fused("psl2(9)");
    const auto& T = f.table;
    REQUIRE(T.size() == 7);
    // classes of order 3 and of order 5 each come in fused pairs
    for (std::uint64_t o : {3u, 5u}) {
        std::vector<std::size_t> cls;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (T[i].order == o) cls.push_back(i);
        REQUIRE(cls.size() == 2);
        CHECK(f.part.orbit_of[cls[0]] == f.part.orbit_of[cls[1]]);
    }
    CHECK(f.part.count() == 5);
}

TEST_CASE("orbit partition is a partition and respects element order") {
    for (const char* id : {"psl2(16)", "psl2(27)", "psl3_with_duality(3)", "sym(6)", "pgammal2(8)"}) {
        auto f = fused(id);
        std::vector<int> seen(f.table.size(), 0);
        for (const auto& orb : f.part.orbits) {
            CHECK(std::is_sorted(orb.begin(), orb.end()));
            for (auto c : orb) {
                ++seen[c];
                CHECK(f.table[c].order == f.table[orb.front()].order);
                CHECK(f.table[c].size == f.table[orb.front()].size);
            }
        }
        for (int s : seen) CHECK(s == 1);
        for (std::size_t i = 1; i < f.part.orbits.size(); ++i) CHECK(f.part.orbits[i - 1].front() < f.part.orbits[i].front());
    }
}

TEST_CASE("orbit counts on small simple groups") {
    auto a5 = fused("alt(5)");
    auto c = orbit_counts(a5.part, a5.table, 5);
    CHECK(c.n_pregular == 3);
    CHECK(c.n_union == 4);

    auto l16 = fused("psl2(16)");
    c = orbit_counts(l16.part, l16.table, 17);
    CHECK(c.n_pregular == 5);
    CHECK(c.n_pelement == 2);
    CHECK(c.n_union == 7);

    auto l11 = fused("psl2(11)");
    c = orbit_counts(l11.part, l11.table, 11);
    CHECK(c.n_pregular == 6);

    // bounds against the unfused counts
    for (auto* f : {&a5, &l16, &l11})
        for (std::uint64_t p : {2u, 3u, 5u}) {
            auto cc = class_counts(f->table, p);
            auto oc = orbit_counts(f->part, f->table, p);
            CHECK(oc.n_pregular <= cc.k_p_prime);
            CHECK(oc.n_union <= f->table.size());
        }
}

TEST_CASE("orbit count does not depend on the conjugator order") {
    auto b = build(parse_entry("pgammal2(9)"));
    auto T = conjugacy_classes(b.group);
    auto fwd = fuse_classes(T, b.aut_conjugators);
    auto rev_conj = b.aut_conjugators;
    std::reverse(rev_conj.begin(), rev_conj.end());
    auto rev = fuse_classes(T, rev_conj);
    CHECK(fwd.orbit_of == rev.orbit_of);
}

TEST_CASE("non-normalizing conjugator is rejected with a witness") {
    auto b = build(parse_entry("alt(5)"));
    auto T = conjugacy_classes(b.group);
    Perm c = perm_from_cycles(5, {{0, 1}});
    // a transposition normalizes A5 in S5; move to a degree where it does not
    auto d = build(parse_entry("dihedral(5)"));
    auto TD = conjugacy_classes(d.group);
    Perm bad = perm_from_cycles(d.group.degree(), {{0, 1}});
    try {
        fuse_classes(TD, {bad});
        FAIL("expected NotNormalError");
    } catch (const NotNormalError& err) {
        CHECK_FALSE(d.group.contains(err.witness()));
    }
    CHECK(fuse_classes(T, {c}).count() == 4);
}
