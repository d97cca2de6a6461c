#include "glatt/cohomology.hpp"

#include "glatt/errors.hpp"
#include "glatt/normal_forms.hpp"

namespace glatt {

FiniteAbelianGroup h1(const GLattice& m) {
    const FiniteMatrixGroup& g = m.group();
    const std::size_t n = g.order();
    const std::size_t r = m.rank();
    if (n == 1 || r == 0)
        return {};
    const std::size_t unknowns = (n - 1) * r; // f(g) for g != 1, block (g-1)*r
    // all-pairs cocycle constraints f(ab) - f(a) - action(a) f(b) = 0;
    // pairs involving the identity are trivially satisfied
    IntMatrix c((n - 1) * (n - 1) * r, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 1; a < n; ++a) {
        const IntMatrix& aa = m.action(a);
        for (std::size_t b = 1; b < n; ++b) {
            const std::size_t ab = g.mul(a, b);
            for (std::size_t i = 0; i < r; ++i) {
                if (ab != 0)
                    c(row + i, (ab - 1) * r + i) += 1;
                c(row + i, (a - 1) * r + i) -= 1;
                for (std::size_t j = 0; j < r; ++j)
                    if (aa(i, j) != 0)
                        c(row + i, (b - 1) * r + j) -= aa(i, j);
            }
            row += r;
        }
    }
    IntMatrix z = kernel_basis(c);
    const std::size_t zdim = z.cols();
    if (zdim == 0)
        return {};
    // coboundary generators: m = e_j gives the cocycle g -> (action(g) - I) e_j
    IntMatrix cob(unknowns, r);
    for (std::size_t a = 1; a < n; ++a) {
        const IntMatrix& aa = m.action(a);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                cob((a - 1) * r + i, j) = aa(i, j) - (i == j ? 1 : 0);
    }
    auto coords = solve_exact_matrix(z, cob);
    if (!coords)
        throw InternalInconsistencyError("h1: coboundary outside the cocycle lattice");
    FiniteAbelianGroup res = cokernel(*coords, zdim);
    if (res.free_rank != 0)
        throw InternalInconsistencyError("h1: infinite result for a lattice");
    return res;
}

FiniteAbelianGroup tate_minus1(const GLattice& m) {
    const FiniteMatrixGroup& g = m.group();
    const std::size_t n = g.order();
    const std::size_t r = m.rank();
    if (n == 1 || r == 0)
        return {};
    IntMatrix norm(r, r);
    for (std::size_t e = 0; e < n; ++e)
        norm = norm + m.action(e);
    IntMatrix z = kernel_basis(norm);
    const std::size_t zdim = z.cols();
    if (zdim == 0)
        return {};
    // all elements, not just generators: B^-1 = span of (action(g) - I);
    // column-reduce the span before changing to norm-kernel coordinates
    IntMatrix cob(r, n * r);
    for (std::size_t e = 0; e < n; ++e) {
        const IntMatrix& ae = m.action(e);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                cob(i, e * r + j) = ae(i, j) - (i == j ? 1 : 0);
    }
    cob = canonical_columns(cob);
    auto coords = solve_exact_matrix(z, cob);
    if (!coords)
        throw InternalInconsistencyError("tate_minus1: (g-1) image escapes the norm kernel");
    FiniteAbelianGroup res = cokernel(*coords, zdim);
    if (res.free_rank != 0)
        throw InternalInconsistencyError("tate_minus1: infinite result for a lattice");
    return res;
}

namespace {

template <typename F>
CohomologyProfile profile_over_classes(const GLattice& m, F&& value) {
    const auto sc = subgroup_classes(m.group());
    CohomologyProfile p;
    p.entries.resize(sc.reps.size());
    // independent per-class computations; slots keep the join deterministic
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(sc.reps.size()); ++i) {
        const Subgroup& h = sc.subgroups[sc.reps[static_cast<std::size_t>(i)]];
        p.entries[static_cast<std::size_t>(i)] = {h, value(restrict_to(m, h))};
    }
    return p;
}

} // namespace

CohomologyProfile h1_profile(const GLattice& m) {
    return profile_over_classes(m, [](const GLattice& r) { return h1(r); });
}

CohomologyProfile tate_minus1_profile(const GLattice& m) {
    return profile_over_classes(m, [](const GLattice& r) { return tate_minus1(r); });
}

} // namespace glatt
