#pragma once

#include "glatt/classify.hpp"

#include <utility>
#include <vector>

namespace glatt {

/// Explicit exact sequence 0 -> M -> P -> F -> 0 with P permutation and F
/// flabby. Maps act on column vectors: embedding is rank(P) x rank(M),
/// projection is rank(F) x rank(P).
struct Resolution {
    GLattice source;
    GLattice middle;
    GLattice quotient;
    std::vector<std::pair<Subgroup, std::size_t>> middle_description; // (H, multiplicity)
    IntMatrix embedding;
    IntMatrix projection;
};

/// Dual-cover construction: cover the dual D = M° by one coset lattice
/// Z[G/H] per HNF generator of each fixed sublattice D^H (H over class
/// representatives), take the kernel, and dualize back. The quotient is
/// flabby for every subgroup because each D^H is hit by H-fixed basis
/// vectors of the cover.
Resolution flabby_resolution(const GLattice& m);

/// Independent re-check of every Resolution invariant: injective embedding
/// with saturated image, surjective projection, image = kernel as canonical
/// sublattices, equivariance of both maps, permutation action on the middle
/// term, and a Strict flabby quotient.
bool verify_resolution(const Resolution& r);

/// Is the flabby class [M]^fl trivial, i.e. F stably permutation?
Verdict flabby_class_trivial(const GLattice& m, SearchOptions opt = {});

/// H^1 profile of F; any nontrivial entry certifies [M]^fl != 0.
CohomologyProfile flabby_class_obstruction(const GLattice& m);

} // namespace glatt
