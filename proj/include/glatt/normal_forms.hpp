#pragma once

#include "glatt/abelian_group.hpp"
#include "glatt/int_matrix.hpp"

#include <optional>
#include <vector>

namespace glatt {

/// u * a * v = d with u, v unimodular, d diagonal, entries >= 0 and
/// d(i,i) | d(i+1,i+1).
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

SmithForm snf(const IntMatrix& a);

/// u * a = h with u unimodular and h in row Hermite normal form: row echelon,
/// positive pivots, entries above a pivot reduced into [0, pivot).
/// pivot_cols[i] is the pivot column of row i; rows beyond pivot_cols.size()
/// are zero.
struct RowHermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_cols;
};

RowHermiteForm hnf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Columns form a Z-basis of {x : a*x = 0}. The kernel of an integer matrix
/// is saturated by definition; the basis is HNF-canonical so equal kernels
/// compare as equal matrices.
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical basis of the column span (as a sublattice): unimodular column
/// operations to HNF, zero columns dropped. Two bases span the same
/// sublattice iff their canonical forms are literally equal.
IntMatrix canonical_columns(const IntMatrix& basis);

/// Z^ambient_rank / column-span(image_basis), in invariant-factor form.
FiniteAbelianGroup cokernel(const IntMatrix& image_basis, std::size_t ambient_rank);

/// Whether the column span equals its own saturation (all SNF invariant
/// factors are 1).
bool spans_saturated_sublattice(const IntMatrix& basis);

/// Integer solution of a*x = b if one exists; deterministic (forward
/// substitution through the column echelon of a, free coordinates zero).
std::optional<std::vector<Int>> solve_exact(const IntMatrix& a, const std::vector<Int>& b);

/// Shared-factorization solver for repeated right-hand sides against the
/// same matrix.
class ExactSolver {
  public:
    explicit ExactSolver(const IntMatrix& a);

    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    /// Solve a*X = b columnwise; nullopt if any column has no solution.
    std::optional<IntMatrix> solve_matrix(const IntMatrix& b) const;

  private:
    std::size_t arows_;
    std::size_t acols_;
    IntMatrix ut_;              // transpose of the HNF transform of a^T
    IntMatrix col_echelon_;     // a * ut_ (column echelon)
    std::vector<std::size_t> pivot_rows_;
};

std::optional<IntMatrix> solve_exact_matrix(const IntMatrix& a, const IntMatrix& b);

} // namespace glatt
