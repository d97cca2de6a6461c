#pragma once

#include "glatt/classify.hpp"

#include <string>
#include <vector>

namespace glatt {

/// A torus from the built-in catalog: narrative documentation, its character
/// lattice, and the rationality level a fresh run must reproduce.
struct TorusDescriptor {
    std::string name;
    std::string narrative;
    GLattice character_lattice;
    RationalityLevel expected_level;
    std::string expected_summary;
};

const std::vector<std::string>& catalog_names();

/// Throws ValidationError for an unknown name.
TorusDescriptor catalog_get(const std::string& name);

} // namespace glatt
