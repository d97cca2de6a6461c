#pragma once

#include "glatt/int_matrix.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace glatt {

/// Sorted element-index set, closed under the parent group's multiplication
/// and inverses; always contains index 0 (the identity).
struct Subgroup {
    std::vector<std::size_t> members;

    std::size_t order() const { return members.size(); }
    bool contains(std::size_t idx) const;
    bool operator==(const Subgroup&) const = default;
    auto operator<=>(const Subgroup&) const = default;
    std::string to_string() const; // "{0,1}"
};

/// Finite subgroup of GL(n, Z), fully enumerated with multiplication and
/// inverse tables. Element 0 is the identity; the remaining order follows
/// breadth-first discovery from the sorted generator list.
class FiniteMatrixGroup {
  public:
    static constexpr std::size_t default_order_cap = 24;

    /// Closes the generators under products. Throws NotInvertibleError for a
    /// non-unimodular generator and OrderCapExceededError when the closure
    /// grows past `cap` (the usual sign of an infinite group).
    static FiniteMatrixGroup close(std::size_t dim, std::vector<IntMatrix> generators,
                                   std::size_t cap = default_order_cap);

    std::size_t dim() const { return dim_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t cap() const { return cap_; }

    const IntMatrix& element(std::size_t i) const { return elements_[i]; }
    const std::vector<IntMatrix>& elements() const { return elements_; }
    const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

    std::size_t mul(std::size_t a, std::size_t b) const { return mul_table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_table_[a]; }
    const std::vector<std::vector<std::size_t>>& mul_table() const { return mul_table_; }

    /// Index of an element matrix; throws if absent.
    std::size_t index_of(const IntMatrix& m) const;

    bool operator==(const FiniteMatrixGroup& o) const {
        return dim_ == o.dim_ && elements_ == o.elements_;
    }

    Subgroup trivial_subgroup() const { return Subgroup{{0}}; }
    Subgroup full_subgroup() const;

    /// Closure of the given indices under multiplication.
    Subgroup generated_subgroup(const std::vector<std::size_t>& seed) const;
    Subgroup conjugate(const Subgroup& s, std::size_t by) const;

  private:
    FiniteMatrixGroup() = default;

    std::size_t dim_ = 0;
    std::size_t cap_ = default_order_cap;
    std::vector<IntMatrix> elements_;
    std::vector<std::size_t> generator_indices_;
    std::vector<std::vector<std::size_t>> mul_table_;
    std::vector<std::size_t> inverse_table_;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// All subgroups, each exactly once, sorted by (order, member indices).
/// Built from the cyclic subgroups by closing under pairwise joins.
std::vector<Subgroup> enumerate_subgroups(const FiniteMatrixGroup& g);

struct SubgroupClasses {
    std::vector<Subgroup> subgroups;       // as enumerate_subgroups
    std::vector<std::size_t> class_rep;    // subgroup index -> representative index
    std::vector<std::size_t> reps;         // sorted representative indices
};

SubgroupClasses subgroup_classes(const FiniteMatrixGroup& g);

} // namespace glatt
