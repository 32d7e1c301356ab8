#include <doctest.h>

#include <set>

#include "simkern/groups.hpp"
#include "simkern/partition.hpp"

using namespace simkern;

namespace {

Partition parts(std::size_t n, std::vector<std::vector<std::size_t>> blocks_1based) {
    for (auto& b : blocks_1based)
        for (auto& i : b) --i;
    return {n, std::move(blocks_1based)};
}

GaussianRational gr(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }

}  // namespace

TEST_CASE("partition canonical form and validation") {
    Partition p(5, {{4, 3}, {0, 1}, {2}});
    CHECK(p.to_string() == "{{1,2},{3},{4,5}}");
    CHECK(p.num_blocks() == 3);
    CHECK(p.block_of(3) == 2);
    CHECK(p.same_block(3, 4));
    CHECK_FALSE(p.same_block(0, 2));
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), ShapeError);          // does not cover
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), ShapeError);  // overlap
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), ShapeError);   // empty block
    CHECK_THROWS_AS(Partition(2, {{0, 5}}), ShapeError);          // out of range
}

TEST_CASE("meet via the union-graph construction") {
    Partition a = parts(3, {{1, 2}, {3}});
    Partition b = parts(3, {{1}, {2, 3}});
    CHECK(partition_meet(a, b) == Partition::single_block(3));
    CHECK(partition_meet(a, a) == a);
    Partition c = parts(5, {{1, 2}, {3, 4}, {5}});
    Partition d = parts(5, {{1}, {2}, {3}, {4, 5}});
    CHECK(partition_meet(c, d) == parts(5, {{1, 2}, {3, 4, 5}}));
    CHECK_THROWS_AS(partition_meet(a, Partition::singletons(4)), ShapeError);
}

TEST_CASE("refinement is a partial order; meet is the greatest lower bound") {
    auto all4 = all_partitions(4);
    CHECK(all4.size() == 15);  // Bell(4)
    CHECK(all_partitions(5).size() == 52);
    for (const auto& p : all4) {
        CHECK(is_refinement(p, p));
        CHECK(is_refinement(Partition::singletons(4), p));
        CHECK(is_refinement(p, Partition::single_block(4)));
    }
    for (const auto& p : all4)
        for (const auto& q : all4) {
            if (is_refinement(p, q) && is_refinement(q, p)) CHECK(p == q);
            Partition m = partition_meet(p, q);
            CHECK(is_refinement(p, m));
            CHECK(is_refinement(q, m));
            for (const auto& s : all4)
                if (is_refinement(p, s) && is_refinement(q, s)) CHECK(is_refinement(m, s));
        }
}

TEST_CASE("coarsenings enumerate exactly the partitions coarsened from p") {
    CHECK(coarsenings(Partition::singletons(3)).size() == 5);  // Bell(3)
    Partition p = parts(4, {{1, 2}, {3}, {4}});
    auto cs = coarsenings(p);
    std::set<Partition> got(cs.begin(), cs.end());
    CHECK(got.size() == cs.size());  // no duplicates
    std::set<Partition> expected;
    for (const auto& q : all_partitions(4))
        if (is_refinement(p, q)) expected.insert(q);
    CHECK(got == expected);
}

TEST_CASE("group spec normalization and round-trip") {
    CHECK(GroupSpec::roots_of_unity(1) == GroupSpec::trivial());
    CHECK(GroupSpec::cyclic(gr(1)) == GroupSpec::trivial());
    CHECK(GroupSpec::cyclic(gr(-1)) == GroupSpec::roots_of_unity(2));
    CHECK(GroupSpec::cyclic(GaussianRational::i()) == GroupSpec::roots_of_unity(4));
    CHECK(GroupSpec::cyclic(-GaussianRational::i()) == GroupSpec::roots_of_unity(4));
    CHECK_THROWS_AS(GroupSpec::cyclic(gr(0)), UnsupportedGroup);
    CHECK_THROWS_AS(GroupSpec::roots_of_unity(0), UnsupportedGroup);

    for (const char* text : {"trivial", "roots:4", "circle", "nonzero", "cyclic:2",
                             "cyclic:-2/3", "cyclic:3/5+4/5i", "cyclic:1/2-1/3i"}) {
        GroupSpec g = GroupSpec::parse(text);
        CHECK(GroupSpec::parse(g.to_string()) == g);
    }
    CHECK(GroupSpec::parse("roots:1") == GroupSpec::trivial());
    CHECK(GroupSpec::parse("cyclic:0/1+1/1i") == GroupSpec::roots_of_unity(4));
    CHECK_THROWS_AS(GroupSpec::parse("dihedral:3"), ParseError);
    CHECK_THROWS_AS(GroupSpec::parse("roots:x"), ParseError);
}

TEST_CASE("orbit equivalence: trivial group") {
    CHECK(orbit_equivalent(gr(2), gr(2), GroupSpec::trivial()));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(-2), GroupSpec::trivial()));
}

TEST_CASE("orbit equivalence: roots of unity") {
    // the worked example merges 2 and -2i under {1,-1,i,-i}
    CHECK(orbit_equivalent(gr(2), gr(0, -2), GroupSpec::roots_of_unity(4)));
    CHECK(orbit_equivalent(gr(2), gr(-2), GroupSpec::roots_of_unity(2)));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(0, 2), GroupSpec::roots_of_unity(2)));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(3), GroupSpec::roots_of_unity(4)));
    CHECK(orbit_equivalent(gr(0), gr(0), GroupSpec::roots_of_unity(4)));
    CHECK_FALSE(orbit_equivalent(gr(0), gr(1), GroupSpec::roots_of_unity(4)));
}

TEST_CASE("orbit equivalence: unit circle") {
    CHECK(orbit_equivalent(GaussianRational{Rational(3, 5), Rational(4, 5)}, gr(1),
                           GroupSpec::unit_circle()));
    CHECK(orbit_equivalent(gr(2), gr(0, -2), GroupSpec::unit_circle()));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(3), GroupSpec::unit_circle()));
    CHECK(orbit_equivalent(gr(0), gr(0), GroupSpec::unit_circle()));
}

TEST_CASE("orbit equivalence: nonzero complex numbers") {
    CHECK(orbit_equivalent(gr(7), gr(0, -3), GroupSpec::nonzero_complex()));
    CHECK_FALSE(orbit_equivalent(gr(0), gr(1), GroupSpec::nonzero_complex()));
    CHECK(orbit_equivalent(gr(0), gr(0), GroupSpec::nonzero_complex()));
}

TEST_CASE("orbit equivalence: cyclic groups") {
    GroupSpec two = GroupSpec::cyclic(gr(2));
    CHECK(orbit_equivalent(gr(2), gr(8), two));
    CHECK(orbit_equivalent(gr(3), gr(6), two));
    CHECK(orbit_equivalent(GaussianRational{Rational(1, 4), Rational(0)}, gr(8), two));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(5), two));
    CHECK_FALSE(orbit_equivalent(gr(2), gr(-2), two));
    CHECK(orbit_equivalent(gr(0), gr(0), two));
    CHECK_FALSE(orbit_equivalent(gr(1), gr(0), two));

    // complex generator 1+i, |g|^2 = 2: (1+i)^3 = -2+2i
    GroupSpec one_plus_i = GroupSpec::cyclic(gr(1, 1));
    CHECK(orbit_equivalent(gr(-2, 2), gr(1, 1), one_plus_i));
    CHECK(orbit_equivalent(gr(1, 1), gr(-2, 2), one_plus_i));
    CHECK_FALSE(orbit_equivalent(gr(2, 2), gr(1, 1), one_plus_i));

    // modulus-1 generator that is not a root of unity is undecidable
    GroupSpec bad = GroupSpec::cyclic(GaussianRational{Rational(3, 5), Rational(4, 5)});
    CHECK_THROWS_AS(orbit_equivalent(gr(1), gr(2), bad), UnsupportedGroup);
}

TEST_CASE("orbit equivalence is an equivalence relation") {
    std::vector<GaussianRational> pool = {gr(0),     gr(1),     gr(-1),    gr(0, 1), gr(2),
                                          gr(0, -2), gr(4),     gr(-8),    gr(3),    gr(1, 1),
                                          gr(-2, 2), gr(2, -2), {Rational(1, 2), Rational(0)}};
    std::vector<GroupSpec> groups = {GroupSpec::trivial(),         GroupSpec::roots_of_unity(2),
                                     GroupSpec::roots_of_unity(4), GroupSpec::unit_circle(),
                                     GroupSpec::nonzero_complex(), GroupSpec::cyclic(gr(2)),
                                     GroupSpec::cyclic(gr(1, 1))};
    for (const auto& g : groups) {
        for (const auto& a : pool) CHECK(orbit_equivalent(a, a, g));
        for (const auto& a : pool)
            for (const auto& b : pool)
                CHECK(orbit_equivalent(a, b, g) == orbit_equivalent(b, a, g));
        for (const auto& a : pool)
            for (const auto& b : pool)
                for (const auto& c : pool)
                    if (orbit_equivalent(a, b, g) && orbit_equivalent(b, c, g))
                        CHECK(orbit_equivalent(a, c, g));
    }
}

TEST_CASE("orbit equivalence: float backend") {
    CHECK(orbit_equivalent(ComplexFloat(2.0), ComplexFloat(0.0, -2.0),
                           GroupSpec::roots_of_unity(4)));
    CHECK_FALSE(orbit_equivalent(ComplexFloat(2.0), ComplexFloat(0.0, -2.0),
                                 GroupSpec::roots_of_unity(2)));
    CHECK(orbit_equivalent(ComplexFloat(2.0), ComplexFloat(8.0), GroupSpec::cyclic(gr(2))));
    CHECK(orbit_equivalent(ComplexFloat(0.6, 0.8), ComplexFloat(1.0), GroupSpec::unit_circle()));
    CHECK_FALSE(orbit_equivalent(ComplexFloat(0.0), ComplexFloat(1.0),
                                 GroupSpec::nonzero_complex()));
}
