#include "glatt/catalog.hpp"

#include "glatt/errors.hpp"

#include <memory>

namespace glatt {

namespace {

GLattice tautological(std::size_t dim, std::vector<IntMatrix> gens) {
    auto g = std::make_shared<FiniteMatrixGroup>(FiniteMatrixGroup::close(dim, std::move(gens)));
    std::vector<IntMatrix> action = g->elements();
    return GLattice(std::move(g), std::move(action));
}

GLattice sign_rank1_lattice() { return tautological(1, {IntMatrix{{-1}}}); }

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "split_1", "norm_one_C2", "weil_restriction_C2", "norm_one_V4", "sign_rank1"};
    return names;
}

TorusDescriptor catalog_get(const std::string& name) {
    if (name == "split_1")
        return TorusDescriptor{
            name,
            "Split one-dimensional torus Gm over the base field: the hyperbola x*y = 1 "
            "with coordinatewise multiplication. Its character lattice is Z with the "
            "trivial Galois action, and its function field k(x) is rational.",
            tautological(1, {}),
            RationalityLevel::Rational,
            "permutation lattice Z[G/G]; split tori are rational"};
    if (name == "norm_one_C2")
        return TorusDescriptor{
            name,
            "Norm-one torus of C/R: the circle x1^2 + x2^2 = 1 with the rotation "
            "product (x1,x2)*(y1,y2) = (x1 y1 - x2 y2, x1 y2 + x2 y1), isomorphic to "
            "SO(2). Over C it becomes Gm via x1 + i x2, and complex conjugation "
            "inverts that coordinate, so the character lattice is Z with the sign "
            "action.",
            sign_rank1_lattice(),
            RationalityLevel::StablyRational,
            "flabby class trivial: F = Z_triv; the sign lattice itself is not permutation"};
    if (name == "weil_restriction_C2")
        return TorusDescriptor{
            name,
            "Weil restriction of Gm from C to R: quadruples with x1 x3 - x2 x4 = 1 and "
            "x1 x4 + x2 x3 = 0, i.e. invertible complex numbers seen as a real group. "
            "Its complex points are (C^x)^2 with coordinates z, w swapped by "
            "conjugation, so the character lattice is Z^2 with the swap action.",
            tautological(2, {IntMatrix{{0, 1}, {1, 0}}}),
            RationalityLevel::Rational,
            "permutation lattice Z[C2]; the invariant field is rational"};
    if (name == "norm_one_V4")
        return TorusDescriptor{
            name,
            "Norm-one torus of a biquadratic extension k(sqrt(a), sqrt(b))/k with "
            "Galois group V4 = <a, b>. The character lattice is Z[V4]/(norm) in the "
            "basis of the images of 1, a, b; the class of ab maps to minus their sum.",
            tautological(3, {IntMatrix{{0, 1, -1}, {1, 0, -1}, {0, 0, -1}},
                             IntMatrix{{0, -1, 1}, {0, -1, 0}, {1, -1, 0}}}),
            RationalityLevel::NotStablyRational,
            "flabby class obstruction H^1(V4, F) = Z/2"};
    if (name == "sign_rank1")
        return TorusDescriptor{
            name,
            "Rank-1 sign lattice: Z with the nontrivial element of C2 acting by -1. "
            "The same G-lattice as norm_one_C2, catalogued under the lattice-centric "
            "name.",
            sign_rank1_lattice(),
            RationalityLevel::StablyRational,
            "alias of norm_one_C2's character lattice"};
    throw ValidationError("catalog: unknown name '" + name + "'");
}

} // namespace glatt
