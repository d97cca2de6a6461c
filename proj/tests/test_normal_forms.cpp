#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glatt/normal_forms.hpp"

#include <random>

using namespace glatt;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 6) {
    std::uniform_int_distribution<int> dim(0, static_cast<int>(max_dim));
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = entry(rng);
    return m;
}

bool divisibility_chain(const IntMatrix& d) {
    const std::size_t lim = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i + 1 < lim; ++i) {
        if (d(i, i) < 0 || d(i + 1, i + 1) < 0)
            return false;
        if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0)
            return false;
        if (d(i, i) == 0 && d(i + 1, i + 1) != 0)
            return false;
    }
    return true;
}

bool is_diagonal(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    return true;
}

} // namespace

TEST_CASE("snf on the worked examples") {
    SUBCASE("[[2,4],[6,8]] has diagonal (2,4)") {
        auto s = snf(IntMatrix{{2, 4}, {6, 8}});
        CHECK(s.d == IntMatrix{{2, 0}, {0, 4}});
        CHECK(s.u * IntMatrix{{2, 4}, {6, 8}} * s.v == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
    }
    SUBCASE("identity") {
        auto s = snf(IntMatrix::identity(2));
        CHECK(s.d == IntMatrix::identity(2));
    }
    SUBCASE("zero matrix") {
        auto s = snf(IntMatrix(2, 2));
        CHECK(s.d == IntMatrix(2, 2));
    }
    SUBCASE("empty shapes are legal") {
        auto s = snf(IntMatrix(0, 3));
        CHECK(s.d.rows() == 0);
        CHECK(s.v == IntMatrix::identity(3));
    }
}

TEST_CASE("hnf on the worked examples") {
    SUBCASE("row swap normalizes to the identity") {
        auto h = hnf(IntMatrix{{0, 1}, {1, 0}});
        CHECK(h.h == IntMatrix::identity(2));
        CHECK(h.u * IntMatrix{{0, 1}, {1, 0}} == h.h);
    }
    SUBCASE("[[2,4],[6,8]]") {
        auto h = hnf(IntMatrix{{2, 4}, {6, 8}});
        CHECK(h.h == IntMatrix{{2, 0}, {0, 4}});
        CHECK(is_unimodular(h.u));
    }
    SUBCASE("1x1") { CHECK(hnf(IntMatrix{{3}}).h == IntMatrix{{3}}); }
}

TEST_CASE("kernel_basis on the worked examples") {
    SUBCASE("[[1,-1]]") {
        CHECK(kernel_basis(IntMatrix{{1, -1}}) == IntMatrix{{1}, {1}});
    }
    SUBCASE("identity has empty kernel") {
        CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    }
    SUBCASE("[[2,-4]]") {
        CHECK(kernel_basis(IntMatrix{{2, -4}}) == IntMatrix{{2}, {1}});
    }
}

TEST_CASE("cokernel on the worked examples") {
    SUBCASE("diag(2,3) gives Z/6") {
        auto g = cokernel(IntMatrix{{2, 0}, {0, 3}}, 2);
        CHECK(g.free_rank == 0);
        REQUIRE(g.torsion.size() == 1);
        CHECK(g.torsion[0] == 6);
    }
    SUBCASE("identity image is trivial") {
        CHECK(cokernel(IntMatrix::identity(4), 4).is_trivial());
    }
    SUBCASE("empty image of rank-1 ambient") {
        auto g = cokernel(IntMatrix(1, 0), 1);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion.empty());
    }
}

TEST_CASE("solve_exact on the worked examples") {
    SUBCASE("2x = 4") {
        auto x = solve_exact(IntMatrix{{2}}, {Int(4)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 2);
    }
    SUBCASE("2x = 3 has no integer solution") {
        CHECK_FALSE(solve_exact(IntMatrix{{2}}, {Int(3)}).has_value());
    }
    SUBCASE("two-column system") {
        IntMatrix a{{1, 1}, {1, -1}};
        auto x = solve_exact(a, {Int(2), Int(0)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 1);
        CHECK((*x)[1] == 1);
    }
}

TEST_CASE("randomized normal-form invariants") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix a = random_matrix(rng);

        auto s = snf(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        CHECK(is_diagonal(s.d));
        CHECK(divisibility_chain(s.d));

        auto h = hnf(a);
        CHECK(h.u * a == h.h);
        CHECK(is_unimodular(h.u));
        for (std::size_t i = 0; i < h.pivot_cols.size(); ++i) {
            const Int& p = h.h(i, h.pivot_cols[i]);
            CHECK(p > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.h(k, h.pivot_cols[i]) >= 0);
                CHECK(h.h(k, h.pivot_cols[i]) < p);
            }
            // echelon: nothing to the left of the pivot, nothing below it
            for (std::size_t c = 0; c < h.pivot_cols[i]; ++c)
                CHECK(h.h(i, c) == 0);
            for (std::size_t r2 = i + 1; r2 < a.rows(); ++r2)
                CHECK(h.h(r2, h.pivot_cols[i]) == 0);
        }
        for (std::size_t r2 = h.pivot_cols.size(); r2 < a.rows(); ++r2)
            for (std::size_t c = 0; c < a.cols(); ++c)
                CHECK(h.h(r2, c) == 0);

        IntMatrix k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(rank(a) + k.cols() == a.cols());
        CHECK(spans_saturated_sublattice(k));
        CHECK(canonical_columns(k) == k);

        // cokernel is invariant under a unimodular change of image basis
        if (a.cols() > 0 && a.cols() <= 4) {
            IntMatrix t = IntMatrix::identity(a.cols());
            // shear + swap keeps |det| = 1
            if (a.cols() >= 2) {
                t(0, 1) = 3;
                t.swap_cols(0, a.cols() - 1);
            }
            CHECK(cokernel(a, a.rows()) == cokernel(a * t, a.rows()));
        }

        // solvable systems solve exactly; unsolvable ones certify via SNF
        if (a.cols() > 0) {
            std::uniform_int_distribution<int> entry(-4, 4);
            std::vector<Int> x0(a.cols());
            for (auto& e : x0)
                e = entry(rng);
            auto sol = solve_exact(a, a.apply(x0));
            REQUIRE(sol.has_value());
            CHECK(a.apply(*sol) == a.apply(x0));
        }
        if (a.rows() > 0) {
            std::uniform_int_distribution<int> entry(-9, 9);
            std::vector<Int> b(a.rows());
            for (auto& e : b)
                e = entry(rng);
            auto sol = solve_exact(a, b);
            if (sol) {
                CHECK(a.apply(*sol) == b);
            } else {
                // SNF certificate: u*a*v = d, so a x = b is solvable iff
                // d y = u b is, i.e. each pivot divides and zero rows match
                std::vector<Int> ub = s.u.apply(b);
                bool solvable = true;
                const std::size_t lim = std::min(a.rows(), a.cols());
                for (std::size_t i = 0; i < a.rows(); ++i) {
                    if (i < lim && s.d(i, i) != 0) {
                        if (ub[i] % s.d(i, i) != 0)
                            solvable = false;
                    } else if (ub[i] != 0) {
                        solvable = false;
                    }
                }
                CHECK_FALSE(solvable);
            }
        }
    }
}

TEST_CASE("cokernel of a wide random image equals cokernel of its canonical basis") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix a = random_matrix(rng, 4);
        IntMatrix wide = IntMatrix::hstack(a, a); // redundant generators
        CHECK(cokernel(wide, a.rows()) == cokernel(a, a.rows()));
    }
}
