#include "glatt/isomorphism.hpp"

#include "glatt/errors.hpp"

#include <sstream>

namespace glatt {

std::string to_string(Status s) {
    switch (s) {
    case Status::Yes:
        return "yes";
    case Status::No:
        return "no";
    default:
        return "unknown";
    }
}

IsoVerdict lattices_isomorphic(const GLattice& m, const GLattice& n, SearchLimits limits) {
    if (!m.same_group(n))
        throw GroupMismatchError("lattices_isomorphic: different groups");
    IsoVerdict v;
    v.limits = limits;
    if (m.rank() != n.rank()) {
        v.status = Status::No;
        v.obstruction = "rank " + std::to_string(m.rank()) + " vs " + std::to_string(n.rank());
        return v;
    }
    if (m.rank() == 0 || m.same_action(n)) {
        v.status = Status::Yes;
        v.witness = IntMatrix::identity(m.rank());
        return v;
    }

    // invariant cascade, cheap to expensive; any mismatch is a proof of No
    const auto sc = subgroup_classes(m.group());
    for (std::size_t rep : sc.reps) {
        const Subgroup& h = sc.subgroups[rep];
        const std::size_t fm = fixed_sublattice(m, h).cols();
        const std::size_t fn = fixed_sublattice(n, h).cols();
        if (fm != fn) {
            v.status = Status::No;
            std::ostringstream out;
            out << "fixed-sublattice rank at H=" << h.to_string() << ": " << fm << " vs " << fn;
            v.obstruction = out.str();
            return v;
        }
    }
    const CohomologyProfile tm = tate_minus1_profile(m);
    const CohomologyProfile tn = tate_minus1_profile(n);
    for (std::size_t i = 0; i < tm.entries.size(); ++i)
        if (tm.entries[i].second != tn.entries[i].second) {
            v.status = Status::No;
            v.obstruction = "Tate^-1 at H=" + tm.entries[i].first.to_string() + ": " +
                            tm.entries[i].second.to_string() + " vs " +
                            tn.entries[i].second.to_string();
            return v;
        }
    const CohomologyProfile hm = h1_profile(m);
    const CohomologyProfile hn = h1_profile(n);
    for (std::size_t i = 0; i < hm.entries.size(); ++i)
        if (hm.entries[i].second != hn.entries[i].second) {
            v.status = Status::No;
            v.obstruction = "H^1 at H=" + hm.entries[i].first.to_string() + ": " +
                            hm.entries[i].second.to_string() + " vs " +
                            hn.entries[i].second.to_string();
            return v;
        }

    auto basis = equivariant_homs(m, n);
    if (!basis.empty())
        if (auto hit = find_unimodular_combination(basis, limits)) {
            v.status = Status::Yes;
            v.witness = std::move(hit->witness);
            return v;
        }
    v.status = Status::Unknown;
    return v;
}

} // namespace glatt
