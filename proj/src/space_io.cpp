#include "gospace/space_io.hpp"

#include <fstream>
#include <set>

namespace gospace {

namespace {

void reject_unknown_keys(const Json &obj, const std::set<std::string> &allowed, const std::string &where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto &[key, _] : obj.items())
    if (!allowed.count(key)) throw InputError(where + ": unknown field '" + key + "'");
}

const Json &require(const Json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t index_from_json(const Json &j, const std::string &where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(where + ": expected a non-negative index");
  return j.get<std::size_t>();
}

TagValue tag_value_from_json(const Json &j) {
  if (j.is_boolean()) return j.get<bool>() ? TagValue::yes : TagValue::no;
  if (j.is_string() && j.get<std::string>() == "unknown") return TagValue::unknown;
  throw InputError("tag value must be true, false or \"unknown\"");
}

Json to_json(TagValue v) {
  switch (v) {
    case TagValue::yes: return true;
    case TagValue::no: return false;
    case TagValue::unknown: break;
  }
  return "unknown";
}

}  // namespace

Scalar scalar_from_json(const Json &j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const ParseError &e) {
    throw InputError(e.what());
  }
  throw InputError("expected a scalar string, got " + j.dump());
}

Json to_json(const Scalar &s) { return s.to_string(); }

Json to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &s : v) out.push_back(s.to_string());
  return out;
}

Json to_json(const Matrix &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json &j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto &row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    Vector v;
    for (const auto &e : row) v.push_back(scalar_from_json(e));
    rows.push_back(std::move(v));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const DimensionMismatch &e) {
    throw InputError(e.what());
  }
}

ReductiveSpace space_from_json(const Json &doc) {
  const std::string where = "space";
  reject_unknown_keys(doc, {"name", "field", "dimension", "basis", "brackets", "isotropy", "metric", "tags"},
                      where);
  const auto name = require(doc, "name", where).get<std::string>();
  Field field;
  try {
    field = field_from_string(require(doc, "field", where).get<std::string>());
  } catch (const ParseError &e) {
    throw InputError(e.what());
  }
  const std::size_t dim = index_from_json(require(doc, "dimension", where), "dimension");

  std::vector<std::string> labels;
  if (auto it = doc.find("basis"); it != doc.end()) {
    labels = it->get<std::vector<std::string>>();
    if (labels.size() != dim) throw InputError("basis: expected " + std::to_string(dim) + " labels");
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size()) throw InputError("basis: duplicate labels");
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }

  std::vector<ReductiveSpace::BracketEntry> brackets;
  if (auto it = doc.find("brackets"); it != doc.end()) {
    for (const auto &b : *it) {
      reject_unknown_keys(b, {"i", "j", "coeffs"}, "bracket entry");
      ReductiveSpace::BracketEntry e;
      e.i = index_from_json(require(b, "i", "bracket entry"), "bracket i");
      e.j = index_from_json(require(b, "j", "bracket entry"), "bracket j");
      const Json &coeffs = require(b, "coeffs", "bracket entry");
      if (!coeffs.is_object()) throw InputError("bracket coeffs must be an object");
      for (const auto &[k, v] : coeffs.items()) {
        std::size_t idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoul(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception &) {
          throw InputError("bracket coeffs key '" + k + "' is not an index");
        }
        e.coeffs[idx] = scalar_from_json(v);
      }
      brackets.push_back(std::move(e));
    }
  }

  std::vector<std::size_t> isotropy;
  if (auto it = doc.find("isotropy"); it != doc.end())
    for (const auto &i : *it) isotropy.push_back(index_from_json(i, "isotropy"));

  Matrix metric = matrix_from_json(require(doc, "metric", where));

  Tags tags;
  if (auto it = doc.find("tags"); it != doc.end()) {
    if (!it->is_object()) throw InputError("tags must be an object");
    for (const auto &[key, value] : it->items()) {
      Tag *tag = nullptr;
      try {
        tag = &tags.by_name(key);
      } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
      }
      reject_unknown_keys(value, {"value", "source"}, "tag '" + key + "'");
      tag->value = tag_value_from_json(require(value, "value", "tag"));
      if (auto s = value.find("source"); s != value.end()) tag->source = s->get<std::string>();
    }
  }

  try {
    return ReductiveSpace(name, field, std::move(labels), brackets, std::move(isotropy), std::move(metric),
                          std::move(tags));
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
}

Json to_json(const ReductiveSpace &space) {
  Json doc;
  doc["name"] = space.name();
  doc["field"] = to_string(space.field());
  doc["dimension"] = space.dim();
  doc["basis"] = space.labels();
  Json brackets = Json::array();
  for (const auto &e : space.bracket_entries()) {
    Json coeffs = Json::object();
    for (const auto &[k, v] : e.coeffs) coeffs[std::to_string(k)] = v.to_string();
    brackets.push_back(Json{{"i", e.i}, {"j", e.j}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  doc["isotropy"] = space.isotropy();
  doc["metric"] = to_json(space.metric());
  Json tags = Json::object();
  for (const char *name : Tags::names) {
    const Tag &t = space.tags().by_name(name);
    tags[name] = Json{{"value", to_json(t.value)}, {"source", t.source}};
  }
  doc["tags"] = tags;
  return doc;
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ReductiveSpace load_space(const std::filesystem::path &path) {
  try {
    return space_from_json(read_json_file(path));
  } catch (const Json::exception &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const ValidationReport &report) {
  Json failures = Json::array();
  for (const auto &f : report.failures) {
    Json j;
    j["check"] = f.check;
    j["witness"] = f.witness;
    if (!f.detail.empty()) j["detail"] = f.detail;
    failures.push_back(std::move(j));
  }
  return Json{{"valid", report.ok()}, {"failures", failures}};
}

}  // namespace gospace
