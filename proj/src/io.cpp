#include "agg/io.hpp"

#include <fstream>
#include <sstream>

#include "agg/error.hpp"

namespace agg::io {
namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

GammaMagma structure_from_json(const Json& j) {
  const auto order = get_field<std::int64_t>(j, "order");
  if (order <= 0) throw InputError("order must be positive");
  const auto n = static_cast<std::size_t>(order);
  auto labels = get_field<std::vector<std::string>>(j, "gamma");
  if (!j.contains("tables") || !j.at("tables").is_object()) {
    throw InputError("missing object field 'tables'");
  }
  const auto& tables = j.at("tables");
  if (tables.size() != labels.size()) throw InputError("'tables' must hold one table per label");

  std::vector<Element> cells;
  cells.reserve(labels.size() * n * n);
  for (const auto& label : labels) {
    if (!tables.contains(label)) throw InputError("no table for label '" + label + "'");
    const auto& t = tables.at(label);
    if (!t.is_array() || t.size() != n) throw InputError("table '" + label + "' must have n rows");
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) {
        throw InputError("table '" + label + "' must have n columns");
      }
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
          throw InputError("table entries must be non-negative integers");
        }
        const auto e = v.get<std::int64_t>();
        if (e >= order) throw InputError("table entry outside carrier");
        cells.push_back(static_cast<Element>(e));
      }
    }
  }
  std::optional<std::vector<std::string>> names;
  if (j.contains("labels")) names = get_field<std::vector<std::string>>(j, "labels");
  return GammaMagma(n, std::move(labels), std::move(cells), std::move(names));
}

Json structure_to_json(const GammaMagma& m) {
  const auto n = m.order();
  Json j;
  j["order"] = n;
  j["gamma"] = m.labels();
  Json tables = Json::object();
  for (Label g = 0; g < m.gamma_size(); ++g) {
    Json rows = Json::array();
    const auto t = m.table(g);
    for (std::size_t x = 0; x < n; ++x) {
      rows.push_back(std::vector<Element>(t.begin() + x * n, t.begin() + (x + 1) * n));
    }
    tables[m.labels()[g]] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  if (m.element_names()) j["labels"] = *m.element_names();
  return j;
}

GammaMagma load_structure(const std::filesystem::path& path) {
  return structure_from_json(parse_json(read_file(path)));
}

void save_structure(const GammaMagma& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << structure_to_json(m).dump() << '\n';
}

FuzzySubset fuzzy_from_json(const Json& j) {
  const auto den = get_field<std::int64_t>(j, "den");
  if (den <= 0) throw InputError("'den' must be positive");
  if (!j.contains("num") || !j.at("num").is_array()) throw InputError("missing array field 'num'");
  std::vector<std::uint64_t> num;
  for (const auto& v : j.at("num")) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw InputError("'num' entries must be non-negative integers");
    }
    if (v.get<std::int64_t>() > den) throw InputError("'num' entry exceeds 'den'");
    num.push_back(static_cast<std::uint64_t>(v.get<std::int64_t>()));
  }
  return FuzzySubset(static_cast<std::uint64_t>(den), std::move(num));
}

Json fuzzy_to_json(const FuzzySubset& f) {
  Json j;
  j["den"] = f.den();
  j["num"] = std::vector<std::uint64_t>(f.numerators().begin(), f.numerators().end());
  return j;
}

FuzzySubset load_fuzzy(const std::filesystem::path& path) {
  return fuzzy_from_json(parse_json(read_file(path)));
}

Json subset_to_json(const CrispSubset& s) { return s.elements(); }

CrispSubset subset_from_json(const Json& j, std::size_t length) {
  if (!j.is_array()) throw InputError("subset must be a JSON array");
  CrispSubset s(length);
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() >= static_cast<std::int64_t>(length)) {
      throw InputError("subset element outside carrier");
    }
    s.insert(static_cast<Element>(v.get<std::int64_t>()));
  }
  return s;
}

}  // namespace agg::io
