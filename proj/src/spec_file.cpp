#include "numgroup/spec_file.hpp"

#include <fstream>
#include <sstream>

namespace numgroup {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error("spec error at " + where + ": " + what);
}

Rational rational_at(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(where, "expected a rational string");
}

FieldPtr parse_field(const json& doc) {
  if (doc.contains("quadratic_d")) {
    if (!doc["quadratic_d"].is_number_integer()) fail("quadratic_d", "expected an integer");
    try {
      return NumberField::quadratic(doc["quadratic_d"].get<long>());
    } catch (const std::exception& e) {
      fail("quadratic_d", e.what());
    }
  }
  if (!doc.contains("field")) fail("field", "missing (or use quadratic_d)");
  const json& f = doc["field"];
  if (!f.is_object() || !f.contains("poly") || !f["poly"].is_array())
    fail("field.poly", "expected a coefficient array, low degree first");

  std::vector<Rational> coeffs;
  for (size_t k = 0; k < f["poly"].size(); ++k)
    coeffs.push_back(rational_at(f["poly"][k], "field.poly[" + std::to_string(k) + "]"));
  UniPoly poly(std::move(coeffs));
  const size_t d = poly.degree() >= 1 ? static_cast<size_t>(poly.degree()) : 0;

  std::optional<std::vector<std::vector<Rational>>> basis;
  if (f.contains("integral_basis")) {
    if (!f["integral_basis"].is_array()) fail("field.integral_basis", "expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < f["integral_basis"].size(); ++i) {
      const json& row = f["integral_basis"][i];
      std::string where = "field.integral_basis[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != d) fail(where, "expected a row of length equal to the degree");
      std::vector<Rational> r;
      for (size_t j = 0; j < row.size(); ++j)
        r.push_back(rational_at(row[j], where + "[" + std::to_string(j) + "]"));
      rows.push_back(std::move(r));
    }
    basis = std::move(rows);
  }

  std::optional<std::complex<double>> embedding;
  if (f.contains("embedding")) {
    const json& e = f["embedding"];
    if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() ||
        !e["im"].is_number())
      fail("field.embedding", "expected {\"re\": <number>, \"im\": <number>}");
    embedding = std::complex<double>(e["re"].get<double>(), e["im"].get<double>());
  }

  try {
    return NumberField::make(std::move(poly), std::move(basis), embedding);
  } catch (const std::exception& e) {
    fail("field", e.what());
  }
}

}  // namespace

GroupSpec parse_spec_json(const json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");
  FieldPtr field = parse_field(doc);
  const size_t d = static_cast<size_t>(field->degree());

  if (!doc.contains("n") || !doc["n"].is_number_integer()) fail("n", "expected an integer");
  const int n = doc["n"].get<int>();
  if (n < 1) fail("n", "dimension must be >= 1");

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    fail("generators", "expected a non-empty array");

  std::vector<SquareMatrix> gens;
  std::vector<std::string> labels;
  for (size_t g = 0; g < doc["generators"].size(); ++g) {
    const json& item = doc["generators"][g];
    std::string gwhere = "generators[" + std::to_string(g) + "]";
    if (!item.is_object() || !item.contains("matrix"))
      fail(gwhere, "expected {\"name\": ..., \"matrix\": ...}");
    std::string name = item.contains("name") && item["name"].is_string()
                           ? item["name"].get<std::string>()
                           : std::string(1, static_cast<char>('A' + (g % 26)));
    const json& mat = item["matrix"];
    if (!mat.is_array() || mat.size() != static_cast<size_t>(n))
      fail(gwhere + ".matrix", "expected " + std::to_string(n) + " rows");
    std::vector<FieldElement> entries;
    for (size_t i = 0; i < mat.size(); ++i) {
      const json& row = mat[i];
      std::string rwhere = gwhere + ".matrix[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != static_cast<size_t>(n))
        fail(rwhere, "expected " + std::to_string(n) + " entries");
      for (size_t j = 0; j < row.size(); ++j) {
        const json& cell = row[j];
        std::string cwhere = rwhere + "[" + std::to_string(j) + "]";
        if (cell.is_string() || cell.is_number_integer()) {
          // Shorthand: a rational constant.
          entries.push_back(field->from_rational(rational_at(cell, cwhere)));
          continue;
        }
        if (!cell.is_array() || cell.size() != d)
          fail(cwhere, "expected " + std::to_string(d) + " power-basis coordinates");
        std::vector<Rational> coords;
        for (size_t k = 0; k < cell.size(); ++k)
          coords.push_back(rational_at(cell[k], cwhere + "[" + std::to_string(k) + "]"));
        entries.push_back(field->from_coords(std::move(coords)));
      }
    }
    try {
      gens.emplace_back(field, n, std::move(entries));
    } catch (const std::exception& e) {
      fail(gwhere + ".matrix", e.what());
    }
    labels.push_back(std::move(name));
  }

  try {
    return GroupSpec(field, n, std::move(gens), std::move(labels));
  } catch (const std::exception& e) {
    fail("generators", e.what());
  }
}

GroupSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("spec parse error in '" + path + "': " + e.what());
  }
  return parse_spec_json(doc);
}

json serialize_spec(const GroupSpec& spec) {
  json field;
  json poly = json::array();
  for (int k = 0; k <= spec.field->defining_poly().degree(); ++k)
    poly.push_back(spec.field->defining_poly().coeff(k).get_str());
  field["poly"] = poly;
  json basis = json::array();
  for (const auto& row : spec.field->integral_basis()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    basis.push_back(r);
  }
  field["integral_basis"] = basis;
  if (spec.field->has_embedding()) {
    field["embedding"] = {{"re", spec.field->embedding().real()},
                          {"im", spec.field->embedding().imag()}};
  }

  json gens = json::array();
  for (size_t g = 0; g < spec.generators.size(); ++g) {
    json mat = json::array();
    for (int i = 0; i < spec.n; ++i) {
      json row = json::array();
      for (int j = 0; j < spec.n; ++j) {
        json cell = json::array();
        for (const auto& s : spec.generators[g].at(i, j).coord_strings()) cell.push_back(s);
        row.push_back(cell);
      }
      mat.push_back(row);
    }
    gens.push_back({{"name", spec.labels[g]}, {"matrix", mat}});
  }

  return {{"field", field}, {"n", spec.n}, {"generators", gens}};
}

std::string serialize_spec_text(const GroupSpec& spec) { return serialize_spec(spec).dump(2) + "\n"; }

void write_spec_file(const GroupSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write spec file '" + path + "'");
  out << serialize_spec_text(spec);
}

}  // namespace numgroup
