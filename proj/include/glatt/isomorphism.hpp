#pragma once

#include "glatt/cohomology.hpp"
#include "glatt/hom_search.hpp"

#include <optional>
#include <string>

namespace glatt {

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

/// Tri-state isomorphism test. Yes carries a unimodular X with
/// X*action_M(g) = action_N(g)*X for every g; No carries a computable
/// invariant mismatch; Unknown records the exhausted search limits.
struct IsoVerdict {
    Status status = Status::Unknown;
    std::optional<IntMatrix> witness;
    std::string obstruction;
    SearchLimits limits;
};

IsoVerdict lattices_isomorphic(const GLattice& m, const GLattice& n,
                               SearchLimits limits = {});

} // namespace glatt
