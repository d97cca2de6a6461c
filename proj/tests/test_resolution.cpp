#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glatt/resolution.hpp"

#include "oracle.hpp"

#include <memory>

using namespace glatt;

namespace {

GroupPtr make_group(std::size_t dim, std::vector<IntMatrix> gens) {
    return std::make_shared<FiniteMatrixGroup>(FiniteMatrixGroup::close(dim, std::move(gens)));
}

GroupPtr c2() { return make_group(1, {IntMatrix{{-1}}}); }

GLattice sign_lattice(GroupPtr g) { return GLattice(g, {IntMatrix{{1}}, IntMatrix{{-1}}}); }

GLattice norm_one_v4() {
    IntMatrix a{{0, 1, -1}, {1, 0, -1}, {0, 0, -1}};
    IntMatrix b{{0, -1, 1}, {0, -1, 0}, {1, -1, 0}};
    auto g = make_group(3, {a, b});
    std::vector<IntMatrix> action;
    for (std::size_t e = 0; e < g->order(); ++e)
        action.push_back(g->element(e));
    return GLattice(g, std::move(action));
}

} // namespace

TEST_CASE("resolution of the sign lattice: 0 -> Z_sign -> Z[C2] -> Z_triv -> 0") {
    auto res = flabby_resolution(sign_lattice(c2()));
    CHECK(res.middle.rank() == 2);
    CHECK(res.quotient.rank() == 1);
    // P is the regular C2 lattice, F the trivial one
    CHECK(res.middle.action(1) == IntMatrix{{0, 1}, {1, 0}});
    CHECK(res.quotient.action(1).is_identity());
    CHECK(verify_resolution(res));
    // the embedding sends the generator to (1,-1) up to the coset order
    CHECK(res.embedding.rows() == 2);
    CHECK(res.embedding(0, 0) + res.embedding(1, 0) == 0);
}

TEST_CASE("resolution of the trivial C2 lattice") {
    auto g = c2();
    auto res = flabby_resolution(trivial_lattice(g, 1));
    CHECK(res.middle.rank() == 3); // Z[C2] + Z
    CHECK(res.quotient.rank() == 2);
    CHECK(verify_resolution(res));
    CHECK(tate_minus1(res.quotient).is_trivial());
}

TEST_CASE("resolution of the regular C2 lattice") {
    auto g = c2();
    auto res = flabby_resolution(coset_lattice(g, g->trivial_subgroup()));
    CHECK(res.middle.rank() == 5); // Z[C2]^2 + Z
    CHECK(res.quotient.rank() == 3);
    CHECK(verify_resolution(res));
}

TEST_CASE("rank-0 lattice resolves to the empty resolution") {
    auto res = flabby_resolution(trivial_lattice(c2(), 0));
    CHECK(res.middle.rank() == 0);
    CHECK(res.quotient.rank() == 0);
    CHECK(res.middle_description.empty());
    CHECK(verify_resolution(res));
}

TEST_CASE("tampered resolutions are rejected") {
    auto res = flabby_resolution(sign_lattice(c2()));
    REQUIRE(verify_resolution(res));
    SUBCASE("zeroed projection row breaks surjectivity") {
        Resolution bad = res;
        for (std::size_t j = 0; j < bad.projection.cols(); ++j)
            bad.projection(0, j) = 0;
        CHECK_FALSE(verify_resolution(bad));
    }
    SUBCASE("non-equivariant embedding column breaks intertwining") {
        Resolution bad = res;
        bad.embedding(0, 0) += 1;
        CHECK_FALSE(verify_resolution(bad));
    }
    SUBCASE("wrong rank arithmetic is rejected") {
        Resolution bad = res;
        bad.quotient = trivial_lattice(bad.source.group_ptr(), 5);
        CHECK_FALSE(verify_resolution(bad));
    }
    SUBCASE("doubled embedding column loses saturation") {
        Resolution bad = res;
        for (std::size_t i = 0; i < bad.embedding.rows(); ++i)
            bad.embedding(i, 0) *= 2;
        CHECK_FALSE(verify_resolution(bad));
    }
    SUBCASE("non-flabby quotient is rejected") {
        // same ranks, equivariant maps intact only if the action matches;
        // swapping F for the sign lattice breaks one check or the other
        Resolution bad = res;
        bad.quotient = GLattice(bad.source.group_ptr(), {IntMatrix{{1}}, IntMatrix{{-1}}});
        CHECK_FALSE(verify_resolution(bad));
    }
}

TEST_CASE("flabby class of the sign lattice is trivial with F = Z_triv") {
    auto v = flabby_class_trivial(sign_lattice(c2()));
    REQUIRE(v.status == Status::Yes);
    // F has rank 1 and trivial action, so Q = Z[G/G]
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->p_summands.empty());
    REQUIRE(v.certificate->q_summands.size() == 1);
    CHECK(v.certificate->q_summands[0].order() == 2);
    CHECK(flabby_class_obstruction(sign_lattice(c2())).all_trivial());
}

TEST_CASE("flabby class of a permutation lattice is trivial") {
    auto g = make_group(2, {IntMatrix{{0, 1}, {1, 0}}});
    std::vector<IntMatrix> action;
    for (std::size_t e = 0; e < g->order(); ++e)
        action.push_back(g->element(e));
    GLattice swap(g, std::move(action));
    CHECK(flabby_class_trivial(swap).status == Status::Yes);
    CHECK(flabby_class_obstruction(swap).all_trivial());
}

TEST_CASE("V4 norm-one lattice: obstruction Z/2 exactly at the full group") {
    auto m = norm_one_v4();
    auto res = flabby_resolution(m);
    CHECK(verify_resolution(res));
    CHECK(flabby_class_trivial(m).status == Status::No);
    auto profile = flabby_class_obstruction(m);
    REQUIRE(profile.entries.size() == 5);
    std::size_t nontrivial = 0;
    for (const auto& [h, v] : profile.entries) {
        if (!v.is_trivial()) {
            ++nontrivial;
            CHECK(h.order() == 4);
            CHECK(v == FiniteAbelianGroup{0, {Int(2)}});
        }
    }
    CHECK(nontrivial == 1);

    // cross-check the obstruction with the independent oracle on F
    const GLattice& f = res.quotient;
    auto ov = oracle::h1_invariants(f.actions(), f.group().mul_table());
    REQUIRE(ov.size() == 1);
    CHECK(ov[0] == 2);
}

TEST_CASE("resolutions verify over mixed-group coset sums") {
    auto s3 = make_group(2, {IntMatrix{{0, -1}, {1, -1}}, IntMatrix{{0, 1}, {1, 0}}});
    auto sc = subgroup_classes(*s3);
    // rank-5 sum over S3: Z[S3/C2] + Z[S3/C3]
    auto m = direct_sum(coset_lattice(s3, sc.subgroups[sc.reps[1]]),
                        coset_lattice(s3, sc.subgroups[sc.reps[2]]));
    auto res = flabby_resolution(m);
    CHECK(verify_resolution(res));
}
