#pragma once

#include "glatt/abelian_group.hpp"
#include "glatt/glattice.hpp"

#include <utility>
#include <vector>

namespace glatt {

/// Cohomology value per conjugacy class of subgroups, keyed by the class
/// representative and ordered by (order, member indices).
struct CohomologyProfile {
    std::vector<std::pair<Subgroup, FiniteAbelianGroup>> entries;

    bool all_trivial() const {
        for (const auto& [h, v] : entries)
            if (!v.is_trivial())
                return false;
        return true;
    }
    bool operator==(const CohomologyProfile&) const = default;
};

/// First group cohomology of the full group: cocycles f with
/// f(gh) = f(g) + action(g) f(h), modulo coboundaries g -> action(g)m - m.
/// Always finite for a lattice.
FiniteAbelianGroup h1(const GLattice& m);

/// Minus-first Tate cohomology: kernel of the norm endomorphism
/// sum_g action(g), modulo the span of all (action(g) - I)m.
FiniteAbelianGroup tate_minus1(const GLattice& m);

CohomologyProfile h1_profile(const GLattice& m);
CohomologyProfile tate_minus1_profile(const GLattice& m);

} // namespace glatt
