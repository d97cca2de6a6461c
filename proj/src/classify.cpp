#include "glatt/classify.hpp"

#include "glatt/errors.hpp"
#include "glatt/normal_forms.hpp"
#include "glatt/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace glatt {

bool is_coflabby(const GLattice& m, Mode mode) {
    if (mode == Mode::PaperLiteral)
        return h1(m).is_trivial();
    return h1_profile(m).all_trivial();
}

bool is_flabby(const GLattice& m, Mode mode) {
    if (mode == Mode::PaperLiteral)
        return tate_minus1(m).is_trivial();
    return tate_minus1_profile(m).all_trivial();
}

std::vector<std::vector<std::size_t>> summand_multisets(const std::vector<std::size_t>& ranks,
                                                        std::size_t target) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto dfs = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < ranks.size(); ++i) {
            if (ranks[i] > remaining)
                continue;
            cur.push_back(i);
            self(self, i, remaining - ranks[i]);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, target);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

GLattice build_permutation_lattice(const GroupPtr& g, const SubgroupClasses& sc,
                                   const std::vector<std::size_t>& multiset) {
    GLattice acc = trivial_lattice(g, 0);
    for (std::size_t idx : multiset)
        acc = direct_sum(acc, coset_lattice(g, sc.subgroups[sc.reps[idx]]));
    return acc;
}

namespace {

SearchBounds resolve_bounds(const GLattice& m, const SearchOptions& opt) {
    SearchBounds b;
    b.rank_bound = opt.rank_bound ? opt.rank_bound : m.rank() + 2 * m.group().order();
    b.coeff_bound = opt.coeff_bound;
    b.combination_budget = opt.combination_budget;
    b.pair_budget = opt.pair_budget;
    return b;
}

std::vector<Subgroup> summand_subgroups(const SubgroupClasses& sc,
                                        const std::vector<std::size_t>& multiset) {
    std::vector<Subgroup> out;
    out.reserve(multiset.size());
    for (std::size_t idx : multiset)
        out.push_back(sc.subgroups[sc.reps[idx]]);
    return out;
}

std::string describe_summands(const std::vector<Subgroup>& summands) {
    if (summands.empty())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i)
            out << " + ";
        out << "Z[G/" << summands[i].to_string() << "]";
    }
    return out.str();
}

// first nontrivial profile entry, if any, rendered for an obstruction string
std::optional<std::string> profile_obstruction(const GLattice& m) {
    auto tp = tate_minus1_profile(m);
    for (const auto& [h, v] : tp.entries)
        if (!v.is_trivial())
            return "Tate^-1(H,M) = " + v.to_string() + " at H=" + h.to_string();
    auto hp = h1_profile(m);
    for (const auto& [h, v] : hp.entries)
        if (!v.is_trivial())
            return "H^1(H,M) = " + v.to_string() + " at H=" + h.to_string();
    return std::nullopt;
}

} // namespace

Verdict is_permutation(const GLattice& m, SearchOptions opt) {
    Verdict v;
    v.bounds = resolve_bounds(m, opt);
    const auto sc = subgroup_classes(m.group());
    std::vector<std::size_t> ranks;
    ranks.reserve(sc.reps.size());
    for (std::size_t rep : sc.reps)
        ranks.push_back(m.group().order() / sc.subgroups[rep].order());
    bool unknown = false;
    std::ostringstream refuted;
    for (const auto& cand : summand_multisets(ranks, m.rank())) {
        GLattice q = build_permutation_lattice(m.group_ptr(), sc, cand);
        IsoVerdict iso =
            lattices_isomorphic(m, q, {v.bounds.coeff_bound, v.bounds.combination_budget});
        if (iso.status == Status::Yes) {
            v.status = Status::Yes;
            ClassCertificate cert;
            cert.q_summands = summand_subgroups(sc, cand);
            cert.witness = std::move(iso.witness);
            v.certificate = std::move(cert);
            return v;
        }
        if (iso.status == Status::Unknown) {
            unknown = true;
        } else {
            if (refuted.tellp() > 0)
                refuted << "; ";
            refuted << describe_summands(summand_subgroups(sc, cand)) << ": " << iso.obstruction;
        }
    }
    if (unknown) {
        v.status = Status::Unknown;
    } else {
        v.status = Status::No;
        v.obstruction = refuted.tellp() > 0 ? refuted.str() : "no candidate of matching rank";
    }
    return v;
}

Verdict is_stably_permutation(const GLattice& m, SearchOptions opt) {
    Verdict v;
    v.bounds = resolve_bounds(m, opt);
    // permutation summands contribute nothing to either profile, so a
    // nonvanishing entry of M survives stabilization while any Q vanishes
    if (auto obst = profile_obstruction(m)) {
        v.status = Status::No;
        v.obstruction = *obst + "; permutation lattices have trivial profiles";
        return v;
    }
    const auto sc = subgroup_classes(m.group());
    std::vector<std::size_t> ranks;
    for (std::size_t rep : sc.reps)
        ranks.push_back(m.group().order() / sc.subgroups[rep].order());
    std::uint64_t pairs = 0;
    for (std::size_t t = m.rank(); t <= v.bounds.rank_bound; ++t) {
        for (const auto& p_cand : summand_multisets(ranks, t - m.rank())) {
            GLattice mp = direct_sum(m, build_permutation_lattice(m.group_ptr(), sc, p_cand));
            for (const auto& q_cand : summand_multisets(ranks, t)) {
                if (pairs++ >= v.bounds.pair_budget) {
                    v.status = Status::Unknown;
                    return v;
                }
                GLattice q = build_permutation_lattice(m.group_ptr(), sc, q_cand);
                IsoVerdict iso = lattices_isomorphic(
                    mp, q, {v.bounds.coeff_bound, v.bounds.combination_budget});
                if (iso.status == Status::Yes) {
                    v.status = Status::Yes;
                    ClassCertificate cert;
                    cert.p_summands = summand_subgroups(sc, p_cand);
                    cert.q_summands = summand_subgroups(sc, q_cand);
                    cert.witness = std::move(iso.witness);
                    v.certificate = std::move(cert);
                    return v;
                }
            }
        }
    }
    v.status = Status::Unknown;
    return v;
}

Verdict is_invertible(const GLattice& m, SearchOptions opt) {
    Verdict v;
    v.bounds = resolve_bounds(m, opt);
    // invertible lattices are flabby and coflabby; failing either refutes
    if (auto obst = profile_obstruction(m)) {
        v.status = Status::No;
        v.obstruction = *obst + "; invertible lattices are flabby and coflabby";
        return v;
    }
    if (m.rank() == 0) {
        v.status = Status::Yes;
        v.certificate = ClassCertificate{};
        return v;
    }
    Verdict perm = is_permutation(m, opt);
    if (perm.status == Status::Yes) {
        // M itself is permutation: P = M, complement 0
        v.status = Status::Yes;
        ClassCertificate cert;
        cert.p_summands = perm.certificate->q_summands;
        cert.section = perm.certificate->witness;
        auto retr = solve_exact_matrix(*perm.certificate->witness, IntMatrix::identity(m.rank()));
        if (!retr)
            throw InternalInconsistencyError("is_invertible: unimodular witness not invertible");
        cert.retraction = std::move(*retr);
        cert.complement = IntMatrix(m.rank(), 0);
        cert.witness = perm.certificate->witness;
        v.certificate = std::move(cert);
        return v;
    }
    const auto sc = subgroup_classes(m.group());
    std::vector<std::size_t> ranks;
    for (std::size_t rep : sc.reps)
        ranks.push_back(m.group().order() / sc.subgroups[rep].order());
    std::uint64_t pairs = 0;
    for (std::size_t t = m.rank(); t <= v.bounds.rank_bound; ++t) {
        for (const auto& p_cand : summand_multisets(ranks, t)) {
            if (pairs++ >= v.bounds.pair_budget) {
                v.status = Status::Unknown;
                return v;
            }
            GLattice p = build_permutation_lattice(m.group_ptr(), sc, p_cand);
            auto sections = equivariant_homs(m, p);
            auto retractions = equivariant_homs(p, m);
            if (sections.empty() || retractions.empty())
                continue;
            // retraction existence is linear in the section: solve
            // sum_j d_j (R_j s) = I over the integers
            std::optional<IntMatrix> found_retraction;
            auto hit = scan_combinations(
                sections, {v.bounds.coeff_bound, v.bounds.combination_budget},
                [&](const std::vector<long>&, const IntMatrix& s) {
                    IntMatrix sys(m.rank() * m.rank(), retractions.size());
                    for (std::size_t j = 0; j < retractions.size(); ++j) {
                        IntMatrix rs = retractions[j] * s;
                        for (std::size_t a = 0; a < m.rank(); ++a)
                            for (std::size_t b = 0; b < m.rank(); ++b)
                                sys(a * m.rank() + b, j) = rs(a, b);
                    }
                    std::vector<Int> id(m.rank() * m.rank());
                    for (std::size_t a = 0; a < m.rank(); ++a)
                        id[a * m.rank() + a] = 1;
                    auto d = solve_exact(sys, id);
                    if (!d)
                        return false;
                    IntMatrix retr(m.rank(), p.rank());
                    for (std::size_t j = 0; j < retractions.size(); ++j)
                        if ((*d)[j] != 0) {
                            for (std::size_t a = 0; a < m.rank(); ++a)
                                for (std::size_t b = 0; b < p.rank(); ++b)
                                    retr(a, b) += (*d)[j] * retractions[j](a, b);
                        }
                    found_retraction = std::move(retr);
                    return true;
                });
            if (hit) {
                v.status = Status::Yes;
                ClassCertificate cert;
                cert.p_summands = summand_subgroups(sc, p_cand);
                cert.section = hit->witness;
                cert.retraction = *found_retraction;
                cert.complement = kernel_basis(*found_retraction);
                cert.witness = IntMatrix::hstack(hit->witness, *cert.complement);
                v.certificate = std::move(cert);
                return v;
            }
        }
    }
    v.status = Status::Unknown;
    return v;
}

std::string to_string(RationalityLevel level) {
    switch (level) {
    case RationalityLevel::Rational:
        return "rational";
    case RationalityLevel::StablyRational:
        return "stably-rational";
    case RationalityLevel::NotStablyRational:
        return "not-stably-rational";
    default:
        return "undetermined";
    }
}

RationalityReport rationality_verdict(const GLattice& m, SearchOptions opt) {
    RationalityReport report;
    Verdict perm = is_permutation(m, opt);
    if (perm.status == Status::Yes) {
        report.justification.push_back(
            {"permutation", "yes: M = " + describe_summands(perm.certificate->q_summands) +
                                " via witness " + perm.certificate->witness->to_string()});
        report.level = RationalityLevel::Rational;
        return report;
    }
    report.justification.push_back(
        {"permutation", to_string(perm.status) +
                            (perm.obstruction.empty() ? "" : ": " + perm.obstruction)});

    Resolution res = flabby_resolution(m);
    report.justification.push_back(
        {"flabby-resolution", "0 -> M -> P -> F -> 0 with P = " +
                                  describe_summands([&] {
                                      std::vector<Subgroup> s;
                                      for (const auto& [h, mult] : res.middle_description)
                                          for (std::size_t i = 0; i < mult; ++i)
                                              s.push_back(h);
                                      return s;
                                  }()) +
                                  ", rank(F) = " + std::to_string(res.quotient.rank())});

    Verdict stably = is_stably_permutation(res.quotient, opt);
    if (stably.status == Status::Yes) {
        report.justification.push_back(
            {"flabby-class", "trivial: F + " + describe_summands(stably.certificate->p_summands) +
                                 " = " + describe_summands(stably.certificate->q_summands)});
        report.level = RationalityLevel::StablyRational;
        return report;
    }
    report.justification.push_back(
        {"flabby-class", "F stably permutation: " + to_string(stably.status) +
                             (stably.obstruction.empty() ? "" : ": " + stably.obstruction)});

    CohomologyProfile obstruction = h1_profile(res.quotient);
    bool nontrivial = false;
    for (const auto& [h, value] : obstruction.entries)
        if (!value.is_trivial()) {
            nontrivial = true;
            report.justification.push_back(
                {"obstruction", "H^1(H,F) = " + value.to_string() + " at H=" + h.to_string() +
                                    "; a stably permutation F would have H^1(H,F) = 0"});
        }
    report.level =
        nontrivial ? RationalityLevel::NotStablyRational : RationalityLevel::Undetermined;
    return report;
}

} // namespace glatt
