#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glatt/cohomology.hpp"
#include "glatt/isomorphism.hpp"

#include "oracle.hpp"

#include <memory>
#include <random>

using namespace glatt;

namespace {

GroupPtr make_group(std::size_t dim, std::vector<IntMatrix> gens) {
    return std::make_shared<FiniteMatrixGroup>(FiniteMatrixGroup::close(dim, std::move(gens)));
}

GroupPtr c2() { return make_group(1, {IntMatrix{{-1}}}); }
GroupPtr v4() {
    return make_group(2, {IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}});
}
GroupPtr s3() {
    return make_group(2, {IntMatrix{{0, -1}, {1, -1}}, IntMatrix{{0, 1}, {1, 0}}});
}

GLattice sign_lattice(GroupPtr g) { return GLattice(g, {IntMatrix{{1}}, IntMatrix{{-1}}}); }

FiniteAbelianGroup z2() { return FiniteAbelianGroup{0, {Int(2)}}; }

std::vector<Int> oracle_h1(const GLattice& l) {
    return oracle::h1_invariants(l.actions(), l.group().mul_table());
}
std::vector<Int> oracle_tate(const GLattice& l) {
    return oracle::tate_minus1_invariants(l.actions(), l.group().mul_table());
}

} // namespace

TEST_CASE("the one-dimensional C2 table, against frozen values and the oracle") {
    auto g = c2();
    auto triv = trivial_lattice(g, 1);
    auto sgn = sign_lattice(g);
    auto reg = coset_lattice(g, g->trivial_subgroup());

    CHECK(h1(triv).is_trivial());
    CHECK(h1(sgn) == z2());
    CHECK(h1(reg).is_trivial());
    CHECK(tate_minus1(triv).is_trivial());
    CHECK(tate_minus1(sgn) == z2());
    CHECK(tate_minus1(reg).is_trivial());

    for (const auto& l : {triv, sgn, reg}) {
        CHECK(h1(l).torsion == oracle_h1(l));
        CHECK(tate_minus1(l).torsion == oracle_tate(l));
    }
}

TEST_CASE("profiles on the worked examples") {
    auto g = c2();
    SUBCASE("trivial lattice over V4: all entries trivial") {
        auto p = h1_profile(trivial_lattice(v4(), 1));
        CHECK(p.entries.size() == 5);
        CHECK(p.all_trivial());
    }
    SUBCASE("sign lattice over C2") {
        auto p = h1_profile(sign_lattice(g));
        REQUIRE(p.entries.size() == 2);
        CHECK(p.entries[0].first.order() == 1);
        CHECK(p.entries[0].second.is_trivial());
        CHECK(p.entries[1].second == z2());
        auto t = tate_minus1_profile(sign_lattice(g));
        CHECK(t.entries[0].second.is_trivial());
        CHECK(t.entries[1].second == z2());
    }
    SUBCASE("regular C2 lattice: all entries trivial") {
        CHECK(h1_profile(coset_lattice(g, g->trivial_subgroup())).all_trivial());
        CHECK(tate_minus1_profile(coset_lattice(g, g->trivial_subgroup())).all_trivial());
    }
}

TEST_CASE("duality: Tate^-1 of the dual equals H^1, across subgroups") {
    std::vector<GLattice> lattices;
    auto add_cosets = [&](GroupPtr g) {
        auto sc = subgroup_classes(*g);
        for (std::size_t rep : sc.reps)
            lattices.push_back(coset_lattice(g, sc.subgroups[rep]));
    };
    add_cosets(c2());
    add_cosets(v4());
    add_cosets(s3());
    lattices.push_back(sign_lattice(c2()));
    for (const auto& m : lattices) {
        auto lhs = tate_minus1_profile(dual(m));
        auto rhs = h1_profile(m);
        REQUIRE(lhs.entries.size() == rhs.entries.size());
        for (std::size_t i = 0; i < lhs.entries.size(); ++i)
            CHECK(lhs.entries[i].second == rhs.entries[i].second);
    }
}

TEST_CASE("Shapiro vanishing for permutation lattices, all subgroups") {
    for (auto g : {v4(), s3()}) {
        auto sc = subgroup_classes(*g);
        for (std::size_t rep : sc.reps) {
            auto p = coset_lattice(g, sc.subgroups[rep]);
            CHECK(h1_profile(p).all_trivial());
            CHECK(tate_minus1_profile(p).all_trivial());
        }
    }
}

TEST_CASE("both cohomology groups are annihilated by the subgroup order") {
    auto g = s3();
    auto sc = subgroup_classes(*g);
    auto m = direct_sum(coset_lattice(g, sc.subgroups[sc.reps[1]]),
                        coset_lattice(g, g->full_subgroup()));
    for (std::size_t rep : sc.reps) {
        const Subgroup& h = sc.subgroups[rep];
        for (const auto& d : h1(restrict_to(m, h)).torsion)
            CHECK(Int(h.order()) % d == 0);
        for (const auto& d : tate_minus1(restrict_to(m, h)).torsion)
            CHECK(Int(h.order()) % d == 0);
    }
}

TEST_CASE("profiles agree across conjugate subgroups") {
    auto g = s3();
    auto subs = enumerate_subgroups(*g);
    auto m = coset_lattice(g, subs[1]); // rank 3 over a non-normal C2
    std::vector<FiniteAbelianGroup> h1_values;
    std::vector<FiniteAbelianGroup> tate_values;
    for (const auto& h : subs)
        if (h.order() == 2) {
            h1_values.push_back(h1(restrict_to(m, h)));
            tate_values.push_back(tate_minus1(restrict_to(m, h)));
        }
    REQUIRE(h1_values.size() == 3);
    CHECK(h1_values[0] == h1_values[1]);
    CHECK(h1_values[0] == h1_values[2]);
    CHECK(tate_values[0] == tate_values[1]);
    CHECK(tate_values[0] == tate_values[2]);
}

TEST_CASE("order-8 dihedral group: duality and Shapiro hold") {
    // D4 = <rotation by 90, reflection>, the largest group GL(2,Z) offers
    auto d4 = make_group(2, {IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}});
    REQUIRE(d4->order() == 8);
    auto sc = subgroup_classes(*d4);
    CHECK(enumerate_subgroups(*d4).size() == 10);
    std::vector<GLattice> lattices;
    for (std::size_t rep : sc.reps)
        lattices.push_back(coset_lattice(d4, sc.subgroups[rep]));
    GLattice tautological(d4, d4->elements());
    lattices.push_back(tautological);
    lattices.push_back(direct_sum(tautological, trivial_lattice(d4, 1)));
    for (const auto& m : lattices) {
        auto lhs = tate_minus1_profile(dual(m));
        auto rhs = h1_profile(m);
        REQUIRE(lhs.entries.size() == rhs.entries.size());
        for (std::size_t i = 0; i < lhs.entries.size(); ++i)
            CHECK(lhs.entries[i].second == rhs.entries[i].second);
    }
    for (std::size_t rep : sc.reps) {
        auto p = coset_lattice(d4, sc.subgroups[rep]);
        CHECK(h1_profile(p).all_trivial());
        CHECK(tate_minus1_profile(p).all_trivial());
    }
}

TEST_CASE("order-8 cyclic group from the degree-4 cyclotomic action") {
    // companion matrix of x^4 + 1 has order 8
    IntMatrix c8m(4, 4);
    c8m(0, 3) = -1;
    c8m(1, 0) = 1;
    c8m(2, 1) = 1;
    c8m(3, 2) = 1;
    auto c8 = make_group(4, {c8m});
    REQUIRE(c8->order() == 8);
    CHECK(enumerate_subgroups(*c8).size() == 4); // 1, C2, C4, C8
    GLattice taut(c8, c8->elements());
    auto lhs = tate_minus1_profile(dual(taut));
    auto rhs = h1_profile(taut);
    for (std::size_t i = 0; i < lhs.entries.size(); ++i)
        CHECK(lhs.entries[i].second == rhs.entries[i].second);
    auto sc = subgroup_classes(*c8);
    for (std::size_t rep : sc.reps) {
        auto p = coset_lattice(c8, sc.subgroups[rep]);
        CHECK(h1_profile(p).all_trivial());
        CHECK(tate_minus1_profile(p).all_trivial());
    }
}

TEST_CASE("randomized lattices agree with the oracle") {
    std::vector<GroupPtr> groups = {c2(), v4(), s3()};
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int iter = 0; iter < 12; ++iter) {
        const GroupPtr& g = groups[static_cast<std::size_t>(iter) % groups.size()];
        auto sc = subgroup_classes(*g);
        // random sum of two coset lattices, possibly dualized and twisted
        std::uniform_int_distribution<std::size_t> pick(0, sc.reps.size() - 1);
        GLattice m = direct_sum(coset_lattice(g, sc.subgroups[sc.reps[pick(rng)]]),
                                coset_lattice(g, sc.subgroups[sc.reps[pick(rng)]]));
        if (m.rank() > 6)
            continue;
        if (coin(rng) == 0)
            m = dual(m);
        if (coin(rng) == 1) {
            // unimodular shear twist
            IntMatrix t = IntMatrix::identity(m.rank());
            t(0, m.rank() - 1) += 1;
            IntMatrix tinv = IntMatrix::identity(m.rank());
            tinv(0, m.rank() - 1) -= 1;
            std::vector<IntMatrix> action;
            for (std::size_t e = 0; e < g->order(); ++e)
                action.push_back(t * m.action(e) * tinv);
            m = GLattice(g, std::move(action));
        }
        CHECK(h1(m).torsion == oracle::h1_invariants(m.actions(), g->mul_table()));
        CHECK(tate_minus1(m).torsion ==
              oracle::tate_minus1_invariants(m.actions(), g->mul_table()));
    }
}

TEST_CASE("nonabelian cross-check against the independent oracle") {
    auto g = s3();
    auto sc = subgroup_classes(*g);
    std::vector<GLattice> lattices;
    for (std::size_t rep : sc.reps)
        lattices.push_back(coset_lattice(g, sc.subgroups[rep]));
    lattices.push_back(direct_sum(lattices[1], lattices[2]));
    lattices.push_back(dual(lattices[1]));
    for (const auto& l : lattices) {
        CHECK(h1(l).torsion == oracle_h1(l));
        CHECK(tate_minus1(l).torsion == oracle_tate(l));
    }
}

TEST_CASE("isomorphic lattices have equal profiles") {
    auto g = c2();
    // [[1,2],[0,-1]] is conjugate to diag(1,-1) by [[1,1],[0,1]]
    GLattice a(g, {IntMatrix::identity(2), IntMatrix{{1, 2}, {0, -1}}});
    GLattice b(g, {IntMatrix::identity(2), IntMatrix{{1, 0}, {0, -1}}});
    auto v = lattices_isomorphic(a, b);
    REQUIRE(v.status == Status::Yes);
    auto pa = h1_profile(a);
    auto pb = h1_profile(b);
    for (std::size_t i = 0; i < pa.entries.size(); ++i)
        CHECK(pa.entries[i].second == pb.entries[i].second);
}
