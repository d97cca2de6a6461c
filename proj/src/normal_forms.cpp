#include "glatt/normal_forms.hpp"

#include "glatt/errors.hpp"

namespace glatt {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division; remainder lands in [0, |b|) for b > 0
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

RowHermiteForm hnf(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    RowHermiteForm res{a, IntMatrix::identity(m), {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // euclidean elimination below row r, smallest |pivot| first
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, c) == 0)
                    continue;
                if (best == m || abs_int(h(i, c)) < abs_int(h(best, c)))
                    best = i;
            }
            if (best == m)
                break; // column already clear
            if (best != r) {
                h.swap_rows(r, best);
                u.swap_rows(r, best);
            }
            bool residue = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0)
                    continue;
                Int q = h(i, c) / h(r, c);
                if (q != 0) {
                    h.sub_row_multiple(i, r, q);
                    u.sub_row_multiple(i, r, q);
                }
                if (h(i, c) != 0)
                    residue = true;
            }
            if (!residue)
                break;
        }
        if (h(r, c) == 0)
            continue; // no pivot in this column
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.sub_row_multiple(i, r, q);
                u.sub_row_multiple(i, r, q);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

std::size_t rank(const IntMatrix& a) { return hnf(a).pivot_cols.size(); }

SmithForm snf(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm res{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        while (true) {
            // smallest nonzero |entry| in the trailing submatrix,
            // ties by row-major position
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d(i, j) == 0)
                        continue;
                    if (pi == m || abs_int(d(i, j)) < abs_int(d(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m)
                goto done; // trailing submatrix is zero
            if (pi != t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.sub_row_multiple(i, t, q);
                    u.sub_row_multiple(i, t, q);
                }
                if (d(i, t) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.sub_col_multiple(j, t, q);
                    v.sub_col_multiple(j, t, q);
                }
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // enforce the divisibility chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i);
                        u.add_row(t, i);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
done:
    return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    auto hf = hnf(a.transpose()); // u * a^T = h, u is n x n unimodular
    const std::size_t r = hf.pivot_cols.size();
    // rows r..n-1 of u span {x : a*x = 0}
    IntMatrix krows = hf.u.submatrix_rows(r, n - r);
    IntMatrix canon = hnf(krows).h;
    return canon.transpose();
}

IntMatrix canonical_columns(const IntMatrix& basis) {
    auto hf = hnf(basis.transpose());
    const std::size_t r = hf.pivot_cols.size();
    return hf.h.submatrix_rows(0, r).transpose();
}

FiniteAbelianGroup cokernel(const IntMatrix& image_basis, std::size_t ambient_rank) {
    if (image_basis.rows() != ambient_rank)
        throw ValidationError("cokernel: image basis does not live in the ambient lattice");
    IntMatrix img = canonical_columns(image_basis);
    SmithForm s = snf(img);
    FiniteAbelianGroup g;
    std::size_t nonzero = 0;
    const std::size_t lim = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < lim; ++i) {
        const Int& di = s.d(i, i);
        if (di == 0)
            continue;
        ++nonzero;
        if (di >= 2)
            g.torsion.push_back(di);
    }
    g.free_rank = ambient_rank - nonzero;
    return g;
}

bool spans_saturated_sublattice(const IntMatrix& basis) {
    SmithForm s = snf(basis);
    const std::size_t lim = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < lim; ++i)
        if (s.d(i, i) != 0 && s.d(i, i) != 1)
            return false;
    return true;
}

ExactSolver::ExactSolver(const IntMatrix& a) : arows_(a.rows()), acols_(a.cols()) {
    auto hf = hnf(a.transpose()); // u * a^T = h  =>  a * u^T = h^T
    ut_ = hf.u.transpose();
    col_echelon_ = hf.h.transpose();
    pivot_rows_ = hf.pivot_cols;
}

std::optional<std::vector<Int>> ExactSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != arows_)
        throw ValidationError("solve: right-hand side length mismatch");
    std::vector<Int> residual = b;
    std::vector<Int> y(acols_);
    for (std::size_t j = 0; j < pivot_rows_.size(); ++j) {
        const std::size_t p = pivot_rows_[j];
        const Int& piv = col_echelon_(p, j);
        if (residual[p] % piv != 0)
            return std::nullopt;
        y[j] = residual[p] / piv;
        if (y[j] != 0)
            for (std::size_t i = p; i < arows_; ++i)
                residual[i] -= y[j] * col_echelon_(i, j);
    }
    for (const auto& e : residual)
        if (e != 0)
            return std::nullopt;
    return ut_.apply(y);
}

std::optional<IntMatrix> ExactSolver::solve_matrix(const IntMatrix& b) const {
    if (b.rows() != arows_)
        throw ValidationError("solve_matrix: right-hand side shape mismatch");
    IntMatrix x(acols_, b.cols());
    std::vector<Int> col(arows_);
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < arows_; ++i)
            col[i] = b(i, c);
        auto sol = solve(col);
        if (!sol)
            return std::nullopt;
        for (std::size_t i = 0; i < acols_; ++i)
            x(i, c) = (*sol)[i];
    }
    return x;
}

std::optional<std::vector<Int>> solve_exact(const IntMatrix& a, const std::vector<Int>& b) {
    return ExactSolver(a).solve(b);
}

std::optional<IntMatrix> solve_exact_matrix(const IntMatrix& a, const IntMatrix& b) {
    return ExactSolver(a).solve_matrix(b);
}

} // namespace glatt
