// Benchmark for the unimodular-witness search: the serial reference kernel
// against the OpenMP kernel, on hom bases from real lattices and on a
// synthetic full-scan workload (no witness exists, so every candidate is
// visited).

#include "glatt/hom_search.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <memory>
#include <random>

using namespace glatt;

namespace {

template <typename F> double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

GroupPtr make_group(std::size_t dim, std::vector<IntMatrix> gens) {
    return std::make_shared<FiniteMatrixGroup>(FiniteMatrixGroup::close(dim, std::move(gens)));
}

std::vector<IntMatrix> synthetic_basis(std::size_t k, std::size_t r, unsigned seed) {
    // even entries only: no combination is unimodular, forcing a full scan
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<IntMatrix> basis;
    for (std::size_t b = 0; b < k; ++b) {
        IntMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                m(i, j) = 2 * entry(rng);
        basis.push_back(std::move(m));
    }
    return basis;
}

void run_case(const char* label, const std::vector<IntMatrix>& basis, SearchLimits limits) {
    std::optional<WitnessHit> s, p;
    double ts = time_of([&] { s = find_unimodular_combination_serial(basis, limits); });
    double tp = time_of([&] { p = find_unimodular_combination_parallel(basis, limits); });
    const bool agree = s.has_value() == p.has_value() &&
                       (!s || (s->coeffs == p->coeffs && s->witness == p->witness));
    std::printf("%-28s k=%zu bound=%ld  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n",
                label, basis.size(), limits.coeff_bound, ts * 1e3, tp * 1e3,
                tp > 0 ? ts / tp : 0.0, agree ? "agree" : "DISAGREE");
}

} // namespace

int main() {
    std::printf("witness search benchmark, %d OpenMP threads\n", omp_get_max_threads());

    // real hom bases: endomorphisms of the regular S3 lattice (no witness at
    // small shells other than +/- permutations, so several shells are walked)
    auto s3 = make_group(2, {IntMatrix{{0, -1}, {1, -1}}, IntMatrix{{0, 1}, {1, 0}}});
    auto reg = coset_lattice(s3, s3->trivial_subgroup());
    auto end_basis = equivariant_homs(reg, reg);
    run_case("End(Z[S3]) first witness", end_basis, {3, 50'000'000});

    // synthetic full scans at increasing size
    run_case("full scan k=6 r=4", synthetic_basis(6, 4, 1), {2, 50'000'000});
    run_case("full scan k=7 r=5", synthetic_basis(7, 5, 2), {2, 50'000'000});
    run_case("full scan k=8 r=6", synthetic_basis(8, 6, 1), {1, 50'000'000});
    return 0;
}
