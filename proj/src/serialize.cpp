#include "posalg/serialize.hpp"

#include <json.hpp>

namespace posalg {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json tensor_json(const StructureTensor& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& [key, value] : t.entries())
    rows.push_back({key[0], key[1], key[2], to_string(value)});
  return rows;
}

ordered_json vector_json(const RatVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

ordered_json matrix_json(const RatMat& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

Rational field_rational(const ordered_json& j, const std::string& field) {
  if (!j.is_string())
    throw ParseError("field " + field + " must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError("field " + field + ": " + e.what());
  }
}

StructureTensor tensor_from_json(const ordered_json& j, long dim,
                                 const std::string& field) {
  if (!j.is_array()) throw ParseError("field " + field + " must be an array");
  StructureTensor t(dim);
  long row = 0;
  for (const auto& entry : j) {
    std::string where = field + "[" + std::to_string(row++) + "]";
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError("field " + where + " must be [i, j, k, rational]");
    for (int c = 0; c < 3; ++c)
      if (!entry[c].is_number_integer())
        throw ParseError("field " + where + " has a non-integer index");
    long i = entry[0].get<long>(), jj = entry[1].get<long>(),
         k = entry[2].get<long>();
    if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
      throw ParseError("field " + where + " index out of range");
    Rational v = field_rational(entry[3], where);
    if (is_zero(v)) throw ParseError("field " + where + " stores explicit zero");
    if (!is_zero(t.get(i, jj, k)))
      throw ParseError("field " + where + " duplicates an entry");
    t.set(i, jj, k, v);
  }
  return t;
}

RatVec vector_from_json(const ordered_json& j, long dim,
                        const std::string& field) {
  if (!j.is_array() || static_cast<long>(j.size()) != dim)
    throw ParseError("field " + field + " must be an array of length " +
                     std::to_string(dim));
  RatVec v;
  long idx = 0;
  for (const auto& entry : j)
    v.push_back(field_rational(entry, field + "[" + std::to_string(idx++) + "]"));
  return v;
}

RatMat matrix_from_json(const ordered_json& j, long dim,
                        const std::string& field) {
  if (!j.is_array() || static_cast<long>(j.size()) != dim)
    throw ParseError("field " + field + " must be a " + std::to_string(dim) +
                     "-row matrix");
  RatMat m;
  long idx = 0;
  for (const auto& row : j)
    m.push_back(vector_from_json(row, dim, field + "[" + std::to_string(idx++) + "]"));
  return m;
}

}  // namespace

std::string emit_2alg(const TwoAlgebra& a) {
  ordered_json j;
  j["dim"] = a.dim;
  if (!a.labels.empty()) j["labels"] = a.labels;
  j["mult"] = tensor_json(a.mult);
  j["unit"] = vector_json(a.unit);
  j["comult"] = tensor_json(a.comult);
  j["counit"] = vector_json(a.counit);
  j["invol"] = ordered_json{{"matrix", matrix_json(a.invol.matrix)}};
  j["coinvol"] = ordered_json{{"matrix", matrix_json(a.coinvol.matrix)}};
  return j.dump(2) + "\n";
}

TwoAlgebra parse_2alg(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("2alg parse error: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("2alg document must be an object");
  static const std::vector<std::string> known{
      "dim", "labels", "mult", "unit", "comult", "counit", "invol", "coinvol"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError("unknown top-level key '" + key + "'");
  }
  for (const auto& required : known) {
    if (required == "labels") continue;
    if (!j.contains(required))
      throw ParseError("missing required key '" + required + "'");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ParseError("field dim must be a positive integer");

  TwoAlgebra a;
  a.dim = j["dim"].get<long>();
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<long>(j["labels"].size()) != a.dim)
      throw ParseError("field labels must list one string per basis element");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("field labels has a non-string");
      a.labels.push_back(l.get<std::string>());
    }
  }
  a.mult = tensor_from_json(j["mult"], a.dim, "mult");
  a.unit = vector_from_json(j["unit"], a.dim, "unit");
  a.comult = tensor_from_json(j["comult"], a.dim, "comult");
  a.counit = vector_from_json(j["counit"], a.dim, "counit");
  if (!j["invol"].is_object() || j["invol"].size() != 1 ||
      !j["invol"].contains("matrix"))
    throw ParseError("field invol must be {matrix: [[...]]}");
  if (!j["coinvol"].is_object() || j["coinvol"].size() != 1 ||
      !j["coinvol"].contains("matrix"))
    throw ParseError("field coinvol must be {matrix: [[...]]}");
  a.invol = AntilinearMap{matrix_from_json(j["invol"]["matrix"], a.dim, "invol.matrix")};
  a.coinvol =
      AntilinearMap{matrix_from_json(j["coinvol"]["matrix"], a.dim, "coinvol.matrix")};
  return a;
}

std::string verdict_json(const std::string& check, const Verdict& v) {
  ordered_json j;
  j["check"] = check;
  j["status"] = status_name(v.status);
  if (!v.witnesses.empty()) {
    const Witness& w = v.witnesses.front();
    ordered_json wj;
    wj["identity"] = w.identity;
    wj["indices"] = w.indices;
    if (!w.lhs.empty()) wj["lhs"] = w.lhs;
    if (!w.rhs.empty()) wj["rhs"] = w.rhs;
    j["witness"] = wj;
  }
  j["notes"] = v.notes;
  return j.dump();
}

std::string witness_json(const DilationWitness& w) {
  ordered_json j;
  j["ambient"] = w.ambient_name;
  j["spec"] = w.ambient_spec;
  j["kind"] = w.ambient_is_group ? "group" : "inverse-semigroup";
  ordered_json blocks = ordered_json::array();
  for (const auto& b : w.partition.blocks) blocks.push_back(b);
  j["partition"] = blocks;
  ordered_json norm = ordered_json::array();
  for (const auto& r : w.normalization) norm.push_back(to_string(r));
  j["normalization"] = norm;
  j["iso"] = w.iso;
  return j.dump();
}

namespace {

// cyclotomic serialization: {order, coeffs: [rationals]}
ordered_json cyclotomic_json(const Cyclotomic& c) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
  return ordered_json{{"order", c.order()}, {"coeffs", coeffs}};
}

}  // namespace

std::string coarse_witness_json(const CoarseGrainWitness& w) {
  ordered_json j;
  j["ambient"] = w.group_name;
  j["spec"] = w.group_spec;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : w.partition.blocks) blocks.push_back(b);
  j["partition"] = blocks;
  j["characters"] = w.characters;
  ordered_json rows = ordered_json::array();
  for (const auto& row : w.matrix.entries) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) {
      auto rat = e.to_rational();
      if (rat)
        r.push_back(to_string(*rat));
      else
        r.push_back(cyclotomic_json(e));
    }
    rows.push_back(r);
  }
  j["matrix"] = rows;
  return j.dump();
}

std::string emit_tensor(const StructureTensor& t) {
  ordered_json j;
  j["dim"] = t.dim();
  j["entries"] = tensor_json(t);
  return j.dump() + "\n";
}

StructureTensor parse_tensor(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tensor parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw ParseError("tensor document must carry dim and entries");
  return tensor_from_json(j["entries"], j["dim"].get<long>(), "entries");
}

}  // namespace posalg
