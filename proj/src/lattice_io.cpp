#include "glatt/lattice_io.hpp"

#include "glatt/errors.hpp"

#include <limits>
#include <memory>
#include <sstream>

namespace glatt {

namespace {

ordered_json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi)
        return static_cast<std::int64_t>(x);
    return x.str(); // decimal string beyond 64 bits
}

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json subgroup_to_json(const Subgroup& h) {
    ordered_json j;
    j["order"] = h.order();
    j["members"] = h.members;
    return j;
}

IntMatrix matrix_from_json(const nlohmann::json& rows, std::size_t rank,
                           const std::string& where) {
    if (!rows.is_array() || rows.size() != rank)
        throw ValidationError(where + ": expected " + std::to_string(rank) + " rows");
    IntMatrix m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != rank)
            throw ValidationError(where + "[" + std::to_string(i) + "]: expected " +
                                  std::to_string(rank) + " integer entries");
        for (std::size_t j = 0; j < rank; ++j) {
            if (!row[j].is_number_integer())
                throw ValidationError(where + "[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "]: non-integer entry");
            m(i, j) = Int(row[j].get<std::int64_t>());
        }
    }
    return m;
}

} // namespace

GLattice parse_lattice_file(const std::string& bytes, std::string* name_out) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("top level: expected an object");
    if (!doc.contains("rank") || !doc["rank"].is_number_integer() ||
        doc["rank"].get<std::int64_t>() < 0)
        throw ValidationError("rank: required non-negative integer");
    const auto rank = static_cast<std::size_t>(doc["rank"].get<std::int64_t>());
    std::size_t cap = FiniteMatrixGroup::default_order_cap;
    if (doc.contains("cap")) {
        if (!doc["cap"].is_number_integer() || doc["cap"].get<std::int64_t>() < 1)
            throw ValidationError("cap: must be a positive integer");
        cap = static_cast<std::size_t>(doc["cap"].get<std::int64_t>());
    }
    std::string name = "lattice";
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ValidationError("name: must be a string");
        name = doc["name"].get<std::string>();
    }
    std::vector<IntMatrix> gens;
    if (doc.contains("generators")) {
        if (!doc["generators"].is_array())
            throw ValidationError("generators: must be an array");
        std::size_t idx = 0;
        for (const auto& gen : doc["generators"]) {
            const std::string where = "generators[" + std::to_string(idx) + "]";
            if (!gen.is_object() || !gen.contains("matrix"))
                throw ValidationError(where + ": expected an object with a matrix");
            gens.push_back(matrix_from_json(gen["matrix"], rank, where + ".matrix"));
            ++idx;
        }
    }
    GroupPtr g;
    try {
        g = std::make_shared<FiniteMatrixGroup>(FiniteMatrixGroup::close(rank, gens, cap));
    } catch (const NotInvertibleError& e) {
        throw ValidationError(std::string("generators: ") + e.what());
    } catch (const OrderCapExceededError& e) {
        throw ValidationError(std::string("generators: ") + e.what());
    }
    std::vector<IntMatrix> action = g->elements();
    if (name_out)
        *name_out = name;
    return GLattice(std::move(g), std::move(action));
}

std::string serialize_lattice(const GLattice& m, const std::string& name) {
    ordered_json j;
    j["name"] = name;
    j["rank"] = m.rank();
    ordered_json gens = ordered_json::array();
    std::size_t idx = 0;
    for (std::size_t gi : m.group().generator_indices()) {
        ordered_json g;
        g["name"] = "g" + std::to_string(idx++);
        g["matrix"] = matrix_to_json(m.action(gi));
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    j["cap"] = m.group().cap();
    return j.dump(2) + "\n";
}

ClassificationResult classify_lattice(const GLattice& m, Mode mode, SearchOptions opt) {
    ClassificationResult r;
    r.mode = mode;
    r.h1p = h1_profile(m);
    r.tatep = tate_minus1_profile(m);
    r.permutation = is_permutation(m, opt);
    r.stably_permutation = is_stably_permutation(m, opt);
    r.invertible = is_invertible(m, opt);
    r.flabby = is_flabby(m, mode);
    r.coflabby = is_coflabby(m, mode);
    r.report = rationality_verdict(m, opt);
    return r;
}

ordered_json input_echo_json(const GLattice& m, const std::string& name) {
    ordered_json j;
    j["name"] = name;
    j["rank"] = m.rank();
    j["group_order"] = m.group().order();
    ordered_json gens = ordered_json::array();
    for (std::size_t gi : m.group().generator_indices())
        gens.push_back(matrix_to_json(m.action(gi)));
    j["generators"] = std::move(gens);
    return j;
}

ordered_json abelian_to_json(const FiniteAbelianGroup& g) {
    ordered_json j;
    j["display"] = g.to_string();
    ordered_json t = ordered_json::array();
    for (const auto& d : g.torsion)
        t.push_back(int_to_json(d));
    j["torsion"] = std::move(t);
    j["free_rank"] = g.free_rank;
    return j;
}

ordered_json profile_to_json(const CohomologyProfile& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [h, v] : p.entries) {
        ordered_json e;
        e["subgroup"] = subgroup_to_json(h);
        e["value"] = abelian_to_json(v);
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    if (v.certificate) {
        ordered_json c;
        ordered_json p = ordered_json::array();
        for (const auto& h : v.certificate->p_summands)
            p.push_back(subgroup_to_json(h));
        c["p_summands"] = std::move(p);
        ordered_json q = ordered_json::array();
        for (const auto& h : v.certificate->q_summands)
            q.push_back(subgroup_to_json(h));
        c["q_summands"] = std::move(q);
        c["witness"] = v.certificate->witness ? matrix_to_json(*v.certificate->witness)
                                              : ordered_json(nullptr);
        if (v.certificate->section)
            c["section"] = matrix_to_json(*v.certificate->section);
        if (v.certificate->retraction)
            c["retraction"] = matrix_to_json(*v.certificate->retraction);
        if (v.certificate->complement)
            c["complement"] = matrix_to_json(*v.certificate->complement);
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
    }
    j["obstruction"] = v.obstruction.empty() ? ordered_json(nullptr) : ordered_json(v.obstruction);
    ordered_json b;
    b["rank_bound"] = v.bounds.rank_bound;
    b["coeff_bound"] = v.bounds.coeff_bound;
    b["combination_budget"] = v.bounds.combination_budget;
    b["pair_budget"] = v.bounds.pair_budget;
    j["search_bounds"] = std::move(b);
    return j;
}

ordered_json report_to_json(const RationalityReport& r) {
    ordered_json j;
    j["level"] = to_string(r.level);
    ordered_json facts = ordered_json::array();
    for (const auto& f : r.justification) {
        ordered_json fact;
        fact["label"] = f.label;
        fact["detail"] = f.detail;
        facts.push_back(std::move(fact));
    }
    j["justification"] = std::move(facts);
    return j;
}

ordered_json classification_to_json(const GLattice& m, const std::string& name,
                                    const ClassificationResult& r) {
    ordered_json j;
    j["input"] = input_echo_json(m, name);
    ordered_json profiles;
    profiles["h1"] = profile_to_json(r.h1p);
    profiles["tate_minus1"] = profile_to_json(r.tatep);
    j["profiles"] = std::move(profiles);
    ordered_json verdicts;
    verdicts["permutation"] = verdict_to_json(r.permutation);
    verdicts["stably_permutation"] = verdict_to_json(r.stably_permutation);
    verdicts["invertible"] = verdict_to_json(r.invertible);
    ordered_json fl;
    fl["mode"] = r.mode == Mode::Strict ? "strict" : "paper-literal";
    fl["value"] = r.flabby;
    verdicts["flabby"] = std::move(fl);
    ordered_json co;
    co["mode"] = r.mode == Mode::Strict ? "strict" : "paper-literal";
    co["value"] = r.coflabby;
    verdicts["coflabby"] = std::move(co);
    j["verdicts"] = std::move(verdicts);
    j["report"] = report_to_json(r.report);
    return j;
}

ordered_json cohomology_to_json(const GLattice& m, const std::string& name) {
    ordered_json j;
    j["input"] = input_echo_json(m, name);
    ordered_json profiles;
    profiles["h1"] = profile_to_json(h1_profile(m));
    profiles["tate_minus1"] = profile_to_json(tate_minus1_profile(m));
    j["profiles"] = std::move(profiles);
    return j;
}

ordered_json resolution_to_json(const GLattice& m, const std::string& name,
                                const Resolution& res, bool verified) {
    ordered_json j;
    j["input"] = input_echo_json(m, name);
    ordered_json r;
    ordered_json summands = ordered_json::array();
    for (const auto& [h, mult] : res.middle_description) {
        ordered_json s;
        s["subgroup"] = subgroup_to_json(h);
        s["multiplicity"] = mult;
        summands.push_back(std::move(s));
    }
    r["middle_summands"] = std::move(summands);
    r["middle_rank"] = res.middle.rank();
    r["quotient_rank"] = res.quotient.rank();
    r["embedding"] = matrix_to_json(res.embedding);
    r["projection"] = matrix_to_json(res.projection);
    r["verified"] = verified;
    j["resolution"] = std::move(r);
    return j;
}

namespace {

void render_profile_text(std::ostringstream& out, const CohomologyProfile& p) {
    for (const auto& [h, v] : p.entries)
        out << "  H " << h.to_string() << " (order " << h.order() << "): " << v.to_string()
            << "\n";
}

std::string verdict_line(const Verdict& v) {
    std::string s = to_string(v.status);
    if (v.status == Status::No && !v.obstruction.empty())
        s += "  [" + v.obstruction + "]";
    if (v.status == Status::Yes && v.certificate && v.certificate->witness)
        s += "  [witness " + v.certificate->witness->to_string() + "]";
    return s;
}

} // namespace

std::string classification_to_text(const GLattice& m, const std::string& name,
                                   const ClassificationResult& r) {
    std::ostringstream out;
    out << "lattice " << name << ": rank " << m.rank() << ", group order " << m.group().order()
        << "\n";
    out << "H^1 profile:\n";
    render_profile_text(out, r.h1p);
    out << "Tate^-1 profile:\n";
    render_profile_text(out, r.tatep);
    out << "verdicts:\n";
    out << "  permutation:        " << verdict_line(r.permutation) << "\n";
    out << "  stably permutation: " << verdict_line(r.stably_permutation) << "\n";
    out << "  invertible:         " << verdict_line(r.invertible) << "\n";
    const char* mode = r.mode == Mode::Strict ? "strict" : "paper-literal";
    out << "  flabby (" << mode << "):    " << (r.flabby ? "true" : "false") << "\n";
    out << "  coflabby (" << mode << "):  " << (r.coflabby ? "true" : "false") << "\n";
    out << "report: " << to_string(r.report.level) << "\n";
    for (const auto& f : r.report.justification)
        out << "  - " << f.label << ": " << f.detail << "\n";
    return out.str();
}

std::string cohomology_to_text(const GLattice& m, const std::string& name) {
    std::ostringstream out;
    out << "lattice " << name << ": rank " << m.rank() << ", group order " << m.group().order()
        << "\n";
    out << "H^1 profile:\n";
    render_profile_text(out, h1_profile(m));
    out << "Tate^-1 profile:\n";
    render_profile_text(out, tate_minus1_profile(m));
    return out.str();
}

std::string resolution_to_text(const GLattice& m, const std::string& name,
                               const Resolution& res, bool verified) {
    std::ostringstream out;
    out << "lattice " << name << ": rank " << m.rank() << ", group order " << m.group().order()
        << "\n";
    out << "flabby resolution 0 -> M -> P -> F -> 0\n";
    out << "  P rank " << res.middle.rank() << ":";
    if (res.middle_description.empty())
        out << " 0";
    for (const auto& [h, mult] : res.middle_description)
        out << " Z[G/" << h.to_string() << "]^" << mult;
    out << "\n";
    out << "  F rank " << res.quotient.rank() << "\n";
    out << "  embedding " << res.embedding.to_string() << "\n";
    out << "  projection " << res.projection.to_string() << "\n";
    out << "verified: " << (verified ? "true" : "false") << "\n";
    return out.str();
}

} // namespace glatt
