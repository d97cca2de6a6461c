#pragma once

#include "glatt/glattice.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace glatt {

/// Z-basis of {X : X*action_M(g) = action_N(g)*X for all generators g},
/// i.e. the equivariant homomorphisms M -> N, as an integer kernel.
std::vector<IntMatrix> equivariant_homs(const GLattice& m, const GLattice& n);

/// A combination sum_i coeffs[i] * basis[i] together with its position in
/// the canonical enumeration order.
struct WitnessHit {
    std::vector<long> coeffs;
    IntMatrix witness;
};

/// Canonical enumeration order for coefficient vectors: shells of increasing
/// max-norm s = 0..bound, row-major lexicographic inside a shell (first
/// coordinate most significant, values -s..s), vectors interior to the shell
/// skipped. `budget` caps the number of vectors scanned; scanning stops (in
/// canonical order) once it is exhausted, so results stay deterministic.
struct SearchLimits {
    long coeff_bound = 3;
    std::uint64_t budget = 2'000'000;
};

/// First combination (in canonical order) that is unimodular; serial
/// reference implementation.
std::optional<WitnessHit> find_unimodular_combination_serial(const std::vector<IntMatrix>& basis,
                                                             SearchLimits limits);

/// OpenMP kernel; scans shells in parallel chunks and keeps the hit with the
/// smallest canonical index, so the result equals the serial one.
std::optional<WitnessHit> find_unimodular_combination_parallel(const std::vector<IntMatrix>& basis,
                                                               SearchLimits limits);

std::optional<WitnessHit> find_unimodular_combination(const std::vector<IntMatrix>& basis,
                                                      SearchLimits limits);

/// Enumerate combinations in the same canonical order, invoking fn(coeffs,
/// combination) until it returns true; serial, budget-capped. Returns the
/// first accepted hit.
std::optional<WitnessHit>
scan_combinations(const std::vector<IntMatrix>& basis, SearchLimits limits,
                  const std::function<bool(const std::vector<long>&, const IntMatrix&)>& fn);

} // namespace glatt
