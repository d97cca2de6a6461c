#include "glatt/glattice.hpp"

#include "glatt/errors.hpp"
#include "glatt/normal_forms.hpp"

#include <algorithm>
#include <map>

namespace glatt {

GLattice::GLattice(GroupPtr group, std::vector<IntMatrix> action)
    : group_(std::move(group)), action_(std::move(action)) {
    if (!group_)
        throw ValidationError("GLattice: missing group");
    if (action_.size() != group_->order())
        throw ValidationError("GLattice: one action matrix per group element required");
    rank_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& a : action_) {
        if (a.rows() != rank_ || a.cols() != rank_)
            throw ValidationError("GLattice: action matrices must be square of equal rank");
        if (!is_unimodular(a))
            throw ValidationError("GLattice: non-unimodular action matrix");
    }
    if (!action_[0].is_identity())
        throw ValidationError("GLattice: identity element must act as the identity");
    // generator products pin down the homomorphism property for the whole group
    for (std::size_t gi : group_->generator_indices())
        for (std::size_t j = 0; j < group_->order(); ++j)
            if (action_[gi] * action_[j] != action_[group_->mul(gi, j)])
                throw ValidationError("GLattice: action is not a homomorphism");
}

std::vector<std::size_t> coset_representatives(const FiniteMatrixGroup& g, const Subgroup& h) {
    std::vector<std::size_t> rep_of(g.order(), g.order());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (rep_of[i] != g.order())
            continue;
        for (std::size_t m : h.members)
            rep_of[g.mul(i, m)] = i;
        reps.push_back(i);
    }
    return reps;
}

GLattice coset_lattice(GroupPtr g, const Subgroup& h) {
    const auto reps = coset_representatives(*g, h);
    const std::size_t r = reps.size();
    std::map<std::size_t, std::size_t> coset_index; // min element -> basis index
    std::vector<std::size_t> rep_of(g->order());
    for (std::size_t k = 0; k < r; ++k) {
        coset_index[reps[k]] = k;
        for (std::size_t m : h.members)
            rep_of[g->mul(reps[k], m)] = reps[k];
    }
    std::vector<IntMatrix> action;
    action.reserve(g->order());
    for (std::size_t e = 0; e < g->order(); ++e) {
        IntMatrix p(r, r);
        for (std::size_t k = 0; k < r; ++k)
            p(coset_index.at(rep_of[g->mul(e, reps[k])]), k) = 1;
        action.push_back(std::move(p));
    }
    return GLattice(std::move(g), std::move(action));
}

GLattice trivial_lattice(GroupPtr g, std::size_t rank_) {
    std::vector<IntMatrix> action(g->order(), IntMatrix::identity(rank_));
    return GLattice(std::move(g), std::move(action));
}

GLattice direct_sum(const GLattice& m, const GLattice& n) {
    if (!m.same_group(n))
        throw GroupMismatchError("direct_sum: lattices over different groups");
    std::vector<IntMatrix> action;
    action.reserve(m.group().order());
    for (std::size_t e = 0; e < m.group().order(); ++e)
        action.push_back(IntMatrix::block_diag(m.action(e), n.action(e)));
    return GLattice(m.group_ptr(), std::move(action));
}

GLattice dual(const GLattice& m) {
    std::vector<IntMatrix> action;
    action.reserve(m.group().order());
    for (std::size_t e = 0; e < m.group().order(); ++e)
        action.push_back(m.action(m.group().inverse(e)).transpose());
    return GLattice(m.group_ptr(), std::move(action));
}

GLattice restrict_to(const GLattice& m, const Subgroup& h) {
    std::vector<IntMatrix> gens;
    gens.reserve(h.members.size());
    for (std::size_t idx : h.members)
        gens.push_back(m.group().element(idx));
    auto sub = std::make_shared<FiniteMatrixGroup>(
        FiniteMatrixGroup::close(m.group().dim(), gens, m.group().cap()));
    if (sub->order() != h.order())
        throw InternalInconsistencyError("restrict_to: member set was not closed");
    std::vector<IntMatrix> action;
    action.reserve(sub->order());
    for (std::size_t e = 0; e < sub->order(); ++e)
        action.push_back(m.action(m.group().index_of(sub->element(e))));
    return GLattice(std::move(sub), std::move(action));
}

IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h) {
    IntMatrix stacked(0, m.rank());
    for (std::size_t idx : h.members) {
        if (idx == 0)
            continue;
        stacked = IntMatrix::vstack(stacked, m.action(idx) - IntMatrix::identity(m.rank()));
    }
    return kernel_basis(stacked);
}

} // namespace glatt
