#pragma once

#include <filesystem>
#include <string>

#include "vendor_json.hpp"

#include "agg/crisp.hpp"
#include "agg/fuzzy.hpp"
#include "agg/gamma_magma.hpp"

namespace agg::io {

using Json = nlohmann::ordered_json;

/// Structure file:
///   {"order": n, "gamma": ["l0", ...],
///    "tables": {"l0": [[row 0], ..., [row n-1]], ...},
///    "labels": ["a", ...]}        // optional element display names
GammaMagma structure_from_json(const Json& j);
Json structure_to_json(const GammaMagma& m);
GammaMagma load_structure(const std::filesystem::path& path);
void save_structure(const GammaMagma& m, const std::filesystem::path& path);

/// Fuzzy subset file: {"den": d, "num": [n0, ...]} meaning n_i / d.
FuzzySubset fuzzy_from_json(const Json& j);
Json fuzzy_to_json(const FuzzySubset& f);
FuzzySubset load_fuzzy(const std::filesystem::path& path);

/// Subsets serialize as ascending arrays of element indices.
Json subset_to_json(const CrispSubset& s);
CrispSubset subset_from_json(const Json& j, std::size_t length);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Parses JSON text, converting parse failures into InputError.
Json parse_json(const std::string& text);

}  // namespace agg::io
