#include "glatt/resolution.hpp"

#include "glatt/errors.hpp"
#include "glatt/normal_forms.hpp"

namespace glatt {

Resolution flabby_resolution(const GLattice& m) {
    const GroupPtr& g = m.group_ptr();
    if (m.rank() == 0) {
        GLattice zero = trivial_lattice(g, 0);
        return Resolution{m, zero, zero, {}, IntMatrix(0, 0), IntMatrix(0, 0)};
    }
    const GLattice d = dual(m);
    const auto sc = subgroup_classes(*g);

    // one summand Z[G/H] per HNF generator of D^H
    struct Summand {
        std::size_t rep;     // class representative index
        IntMatrix generator; // column vector in D
    };
    std::vector<Summand> summands;
    std::vector<std::pair<Subgroup, std::size_t>> description;
    for (std::size_t rep : sc.reps) {
        const Subgroup& h = sc.subgroups[rep];
        IntMatrix fixed = fixed_sublattice(d, h);
        if (fixed.cols() > 0)
            description.emplace_back(h, fixed.cols());
        for (std::size_t c = 0; c < fixed.cols(); ++c)
            summands.push_back({rep, fixed.column(c)});
    }

    GLattice q = trivial_lattice(g, 0);
    for (const auto& s : summands)
        q = direct_sum(q, coset_lattice(g, sc.subgroups[s.rep]));

    // phi: Q -> D, coset basis vector gH of the (H, x) summand -> action_D(g) x
    IntMatrix phi(d.rank(), q.rank());
    std::size_t col = 0;
    for (const auto& s : summands) {
        const auto reps = coset_representatives(*g, sc.subgroups[s.rep]);
        for (std::size_t e : reps) {
            IntMatrix img = d.action(e) * s.generator;
            for (std::size_t i = 0; i < d.rank(); ++i)
                phi(i, col) = img(i, 0);
            ++col;
        }
    }

    // K = ker(phi) with the action induced from Q
    IntMatrix kbasis = kernel_basis(phi);
    ExactSolver ksolve(kbasis);
    std::vector<IntMatrix> kaction;
    kaction.reserve(g->order());
    for (std::size_t e = 0; e < g->order(); ++e) {
        auto sol = ksolve.solve_matrix(q.action(e) * kbasis);
        if (!sol)
            throw InternalInconsistencyError("flabby_resolution: kernel not invariant");
        kaction.push_back(std::move(*sol));
    }
    GLattice k(g, std::move(kaction));

    Resolution res{m,
                   dual(q),
                   dual(k),
                   std::move(description),
                   phi.transpose(),
                   kbasis.transpose()};
    return res;
}

bool verify_resolution(const Resolution& r) {
    const GLattice& m = r.source;
    const GLattice& p = r.middle;
    const GLattice& f = r.quotient;
    if (!m.same_group(p) || !m.same_group(f))
        return false;
    if (p.rank() != m.rank() + f.rank())
        return false;
    if (r.embedding.rows() != p.rank() || r.embedding.cols() != m.rank())
        return false;
    if (r.projection.rows() != f.rank() || r.projection.cols() != p.rank())
        return false;

    // injective embedding with saturated image
    if (rank(r.embedding) != m.rank())
        return false;
    FiniteAbelianGroup coker = cokernel(r.embedding, p.rank());
    if (!coker.torsion.empty())
        return false;

    // surjective projection
    if (!cokernel(r.projection, f.rank()).is_trivial())
        return false;

    // exactness as saturated sublattices, canonical basis against canonical basis
    if (canonical_columns(r.embedding) != kernel_basis(r.projection))
        return false;

    // equivariance of both maps, all elements
    for (std::size_t e = 0; e < m.group().order(); ++e) {
        if (r.embedding * m.action(e) != p.action(e) * r.embedding)
            return false;
        if (r.projection * p.action(e) != f.action(e) * r.projection)
            return false;
    }

    // permutation middle term
    for (std::size_t e = 0; e < p.group().order(); ++e)
        if (!p.action(e).is_permutation_matrix())
            return false;

    return is_flabby(f, Mode::Strict);
}

Verdict flabby_class_trivial(const GLattice& m, SearchOptions opt) {
    return is_stably_permutation(flabby_resolution(m).quotient, opt);
}

CohomologyProfile flabby_class_obstruction(const GLattice& m) {
    return h1_profile(flabby_resolution(m).quotient);
}

} // namespace glatt
