#pragma once

#include "glatt/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace glatt {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank  x  Z/d1 x ... x Z/dk  with 2 <= d1 | d2 | ... | dk.
struct FiniteAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    bool operator==(const FiniteAbelianGroup&) const = default;

    /// "0", "Z/2", "Z/2 x Z/4", "Z^2", "Z/2 x Z^3"
    std::string to_string() const {
        if (is_trivial())
            return "0";
        std::string s;
        for (const auto& d : torsion) {
            if (!s.empty())
                s += " x ";
            s += "Z/" + d.str();
        }
        if (free_rank > 0) {
            if (!s.empty())
                s += " x ";
            s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        }
        return s;
    }
};

} // namespace glatt
