#pragma once

#include "glatt/catalog.hpp"
#include "glatt/resolution.hpp"

#include <json.hpp>

#include <string>

namespace glatt {

using ordered_json = nlohmann::ordered_json;

/// Parse the JSON lattice format:
///   {"name": str, "rank": int, "generators": [{"name": str,
///    "matrix": [[int]]}], "cap": int?}
/// The group is closed from the generator matrices and the lattice carries
/// the tautological action. ParseError for malformed JSON, ValidationError
/// (with field diagnostics) for bad content.
GLattice parse_lattice_file(const std::string& bytes, std::string* name_out = nullptr);

std::string serialize_lattice(const GLattice& m, const std::string& name);

/// Everything the classify command reports.
struct ClassificationResult {
    Mode mode = Mode::Strict;
    CohomologyProfile h1p;
    CohomologyProfile tatep;
    Verdict permutation;
    Verdict stably_permutation;
    Verdict invertible;
    bool flabby = false;
    bool coflabby = false;
    RationalityReport report;
};

ClassificationResult classify_lattice(const GLattice& m, Mode mode = Mode::Strict,
                                      SearchOptions opt = {});

// JSON renderers; key order is fixed and documented in the README.
ordered_json input_echo_json(const GLattice& m, const std::string& name);
ordered_json abelian_to_json(const FiniteAbelianGroup& g);
ordered_json profile_to_json(const CohomologyProfile& p);
ordered_json verdict_to_json(const Verdict& v);
ordered_json report_to_json(const RationalityReport& r);
ordered_json classification_to_json(const GLattice& m, const std::string& name,
                                    const ClassificationResult& r);
ordered_json cohomology_to_json(const GLattice& m, const std::string& name);
ordered_json resolution_to_json(const GLattice& m, const std::string& name,
                                const Resolution& res, bool verified);

// Text renderers for the same commands.
std::string classification_to_text(const GLattice& m, const std::string& name,
                                   const ClassificationResult& r);
std::string cohomology_to_text(const GLattice& m, const std::string& name);
std::string resolution_to_text(const GLattice& m, const std::string& name,
                               const Resolution& res, bool verified);

} // namespace glatt
