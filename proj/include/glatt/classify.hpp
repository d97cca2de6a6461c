#pragma once

#include "glatt/isomorphism.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glatt {

/// Strict quantifies flabby/coflabby over all subgroups (the notion the
/// structure theorems need); PaperLiteral tests the full group only.
enum class Mode { Strict, PaperLiteral };

bool is_coflabby(const GLattice& m, Mode mode = Mode::Strict);
bool is_flabby(const GLattice& m, Mode mode = Mode::Strict);

struct SearchOptions {
    std::size_t rank_bound = 0; // 0 = rank(M) + 2|G|
    long coeff_bound = 3;
    std::uint64_t combination_budget = 2'000'000;
    std::uint64_t pair_budget = 512;
};

/// The caps a search actually ran with; recorded on every verdict so an
/// Unknown names what was exhausted.
struct SearchBounds {
    std::size_t rank_bound = 0;
    long coeff_bound = 3;
    std::uint64_t combination_budget = 0;
    std::uint64_t pair_budget = 0;
};

/// Re-verifiable evidence for a Yes: the permutation decompositions involved
/// and the unimodular intertwiner(s).
struct ClassCertificate {
    std::vector<Subgroup> p_summands; // added/containing permutation lattice
    std::vector<Subgroup> q_summands; // decomposition target
    std::optional<IntMatrix> witness;
    std::optional<IntMatrix> section;     // invertible: M -> P
    std::optional<IntMatrix> retraction;  // invertible: P -> M
    std::optional<IntMatrix> complement;  // invertible: basis of ker(retraction)
};

struct Verdict {
    Status status = Status::Unknown;
    std::optional<ClassCertificate> certificate;
    std::string obstruction;
    SearchBounds bounds;
};

/// Is M a direct sum of coset lattices? Candidates are multisets of subgroup
/// class representatives with matching total rank, tried in (summand count,
/// index) order; No requires every candidate refuted by an invariant.
Verdict is_permutation(const GLattice& m, SearchOptions opt = {});

/// Does M (+) P become a permutation lattice Q? No only via a stable
/// obstruction: a nonvanishing H^1/Tate^-1 profile entry of M survives
/// adding permutation summands.
Verdict is_stably_permutation(const GLattice& m, SearchOptions opt = {});

/// Is M a direct summand of a permutation lattice? No when the
/// flabby-and-coflabby necessary condition fails.
Verdict is_invertible(const GLattice& m, SearchOptions opt = {});

enum class RationalityLevel { Rational, StablyRational, NotStablyRational, Undetermined };

std::string to_string(RationalityLevel level);

struct Fact {
    std::string label;
    std::string detail;
};

struct RationalityReport {
    RationalityLevel level = RationalityLevel::Undetermined;
    std::vector<Fact> justification;
};

/// Decision cascade: permutation => Rational; trivial flabby class =>
/// StablyRational; a nonvanishing H^1(H, F) => NotStablyRational; otherwise
/// Undetermined. Permutation is used as a sufficient condition only.
RationalityReport rationality_verdict(const GLattice& m, SearchOptions opt = {});

/// Candidate multisets of class-representative indices whose coset ranks sum
/// to `target`, ordered by (number of summands, lexicographic indices).
std::vector<std::vector<std::size_t>> summand_multisets(const std::vector<std::size_t>& ranks,
                                                        std::size_t target);

/// (+) of Z[G/H] over a multiset of class-representative indices.
GLattice build_permutation_lattice(const GroupPtr& g, const SubgroupClasses& sc,
                                   const std::vector<std::size_t>& multiset);

} // namespace glatt
