#pragma once

#include "glatt/matrix_group.hpp"

#include <memory>
#include <vector>

namespace glatt {

/// Z^rank with a unimodular action of a finite matrix group: action(g) acts
/// on column vectors from the left, and action(g)*action(h) = action(gh).
/// Rank 0 is legal (all action matrices are 0x0).
class GLattice {
  public:
    GLattice(GroupPtr group, std::vector<IntMatrix> action);

    std::size_t rank() const { return rank_; }
    const FiniteMatrixGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }

    const IntMatrix& action(std::size_t element) const { return action_[element]; }
    const std::vector<IntMatrix>& actions() const { return action_; }

    bool same_group(const GLattice& o) const {
        return group_ == o.group_ || *group_ == *o.group_;
    }
    /// Literal equality of action matrices (and the same group).
    bool same_action(const GLattice& o) const {
        return same_group(o) && action_ == o.action_;
    }

  private:
    GroupPtr group_;
    std::size_t rank_;
    std::vector<IntMatrix> action_;
};

/// Z[G/H]: rank [G:H], basis indexed by left cosets ordered by their minimal
/// element index, G permuting the basis by left translation.
GLattice coset_lattice(GroupPtr g, const Subgroup& h);

/// Minimal coset representatives (element indices), ascending; defines the
/// basis order used by coset_lattice.
std::vector<std::size_t> coset_representatives(const FiniteMatrixGroup& g, const Subgroup& h);

/// Rank-r lattice with every element acting as the identity.
GLattice trivial_lattice(GroupPtr g, std::size_t rank_);

GLattice direct_sum(const GLattice& m, const GLattice& n);

/// M° with g acting by transpose(action(g^{-1})).
GLattice dual(const GLattice& m);

/// Same rank, action restricted to H, which is re-closed as a standalone
/// FiniteMatrixGroup.
GLattice restrict_to(const GLattice& m, const Subgroup& h);

/// HNF-canonical basis of {m : action(h) m = m for all h in H} (columns).
IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h);

} // namespace glatt
