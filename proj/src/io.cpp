#include "ordcalc/io.hpp"

#include <fstream>

#include "ordcalc/error.hpp"

namespace ordcalc {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

FiniteGroup group_from_json(const Json& j) {
  if (j.contains("cyclic")) return FiniteGroup::cyclic(get<int>(j, "cyclic"));
  if (j.contains("symmetric")) return FiniteGroup::symmetric(get<int>(j, "symmetric"));
  if (j.contains("trivial")) return FiniteGroup::trivial();
  if (j.contains("table"))
    return FiniteGroup::from_table(get<std::vector<std::vector<int>>>(j, "table"),
                                   j.contains("labels") ? get<std::vector<std::string>>(j, "labels")
                                                        : std::vector<std::string>{});
  if (j.contains("permutations"))
    return FiniteGroup::from_permutations(get<int>(j, "degree"), get<std::vector<std::vector<int>>>(j, "permutations"));
  if (j.contains("product")) {
    const Json& p = j.at("product");
    if (!p.is_array() || p.empty()) throw ValidationError("product needs a nonempty list");
    FiniteGroup g = group_from_json(p[0]);
    for (std::size_t i = 1; i < p.size(); ++i) g = FiniteGroup::direct_product(g, group_from_json(p[i]));
    return g;
  }
  throw ValidationError("group JSON needs one of cyclic, symmetric, trivial, table, permutations, product");
}

TimeReversalTag time_reversal_from_json(const Json& j, const FiniteGroup& g) {
  TimeReversalTag t;
  const Json& o = j.is_array() ? j : j.at("orientation");
  t.orientation = o.get<std::vector<std::uint8_t>>();
  t.validate(g);
  return t;
}

GSet gset_from_json(const Json& j, const FiniteGroup& g) {
  GSet s;
  if (j.contains("fixed")) s = GSet::fixed_points(g, get<int>(j, "fixed"));
  else if (j.contains("regular")) s = GSet::regular(g);
  else {
    s.points = get<int>(j, "points");
    auto rows = get<std::vector<std::vector<int>>>(j, "action");
    if (static_cast<int>(rows.size()) != g.order()) throw ValidationError("action needs one row per group element");
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != s.points) throw ValidationError("action row has the wrong length");
      s.act.insert(s.act.end(), r.begin(), r.end());
    }
  }
  s.validate(g);
  return s;
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  if (j.contains("point")) return FiniteGroupoid::point();
  if (j.contains("discrete")) return FiniteGroupoid::discrete(get<int>(j, "discrete"));
  if (j.contains("classifying")) return FiniteGroupoid::classifying(group_from_json(j.at("classifying")));
  if (j.contains("components")) {
    FiniteGroupoid g;
    for (const auto& c : j.at("components"))
      g.components.push_back({group_from_json(c.at("group")), c.value("objects", 1)});
    if (g.components.empty()) throw ValidationError("groupoid has no components");
    return g;
  }
  throw ValidationError("groupoid JSON needs one of point, discrete, classifying, components");
}

std::vector<SuperGroup> supergroups_from_json(const Json& j) {
  std::vector<SuperGroup> out;
  auto one = [](const Json& x) {
    SuperGroup sg{group_from_json(x.at("group")), x.value("eps", 0)};
    validate_supergroup(sg);
    return sg;
  };
  if (j.is_array())
    for (const auto& x : j) out.push_back(one(x));
  else
    out.push_back(one(j));
  return out;
}

namespace {

QI scalar_from_json(const Json& v) {
  if (v.is_number_integer()) return QI(v.get<long>());
  if (v.is_string()) return parse_qi(v.get<std::string>());
  throw ValidationError("scalar must be an integer or a string like \"1/2+3*i\"");
}

}  // namespace

QIMatrix matrix_from_json(const Json& j) {
  QIMatrix m;
  for (const auto& row : j) {
    QIVector r;
    for (const auto& v : row) r.push_back(scalar_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

SuperAlgebra algebra_from_json(const Json& j) {
  const int dim = get<int>(j, "dim");
  if (dim < 1) throw ValidationError("dim must be positive");
  std::vector<int> parity = j.contains("parity") ? get<std::vector<int>>(j, "parity") : std::vector<int>(dim, 0);
  if (static_cast<int>(parity.size()) != dim) throw ValidationError("parity has the wrong length");
  std::string f = j.value("field", std::string("Q(i)"));
  FieldKind field;
  if (f == "Q") field = FieldKind::Q;
  else if (f == "Q(i)") field = FieldKind::QI;
  else throw ValidationError("field must be Q or Q(i)");
  QIVector unit(dim);
  const Json& u = j.at("unit");
  if (u.is_number_integer()) {
    int idx = u.get<int>();
    if (idx < 0 || idx >= dim) throw ValidationError("unit index out of range");
    unit[idx] = 1;
  } else {
    if (static_cast<int>(u.size()) != dim) throw ValidationError("unit vector has the wrong length");
    for (int i = 0; i < dim; ++i) unit[i] = scalar_from_json(u[i]);
  }
  SuperAlgebra a(field, parity, unit);
  for (const auto& t : j.at("c")) {
    if (!t.is_array() || t.size() != 4) throw ValidationError("structure constants are [i, j, k, value]");
    a.add_term(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), scalar_from_json(t[3]));
  }
  a.name = j.value("name", std::string("algebra"));
  a.validate();
  return a;
}

Json to_json(const AbGroupExpr& g) {
  Json j;
  j["text"] = g.pretty();
  j["cell"] = g.cell();
  j["rank"] = g.rank();
  j["torsion"] = g.torsion();
  Json syms = Json::array();
  for (const auto& s : g.symbols()) syms.push_back(s.render());
  j["symbols"] = syms;
  if (auto o = g.order()) j["order"] = *o;
  else j["order"] = nullptr;
  return j;
}

Json to_json(const SuperAlgebra& a) {
  Json j;
  j["name"] = a.name;
  j["field"] = field_name(a.field());
  j["dim"] = a.dim();
  j["parity"] = a.parities();
  int u = a.unit_index();
  if (u >= 0) j["unit"] = u;
  else {
    Json uv = Json::array();
    for (const auto& x : a.unit()) uv.push_back(to_string(x));
    j["unit"] = uv;
  }
  Json c = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k)
      for (const auto& [l, v] : a.product(i, k)) c.push_back(Json::array({i, k, l, to_string(v)}));
  j["c"] = c;
  return j;
}

Json to_json(const Page& p) {
  Json j;
  j["r"] = p.r;
  j["pmax"] = p.pmax;
  Json rows = Json::object();
  auto cells = page_cells(p);
  for (int q = 0; q < static_cast<int>(cells.size()); ++q) rows[std::to_string(p.min_q + q)] = cells[q];
  j["rows"] = rows;
  Json arrows = Json::array();
  for (const auto& a : p.arrows)
    arrows.push_back({{"r", a.r}, {"from", {a.p, a.q}}, {"to", {a.tp, a.tq}}, {"nonzero", a.nonzero}, {"rule", a.rule}});
  j["arrows"] = arrows;
  j["assumptions"] = p.assumptions;
  return j;
}

Json to_json(const SHResult& r) {
  Json j;
  j["degree"] = r.degree;
  j["group"] = r.group ? to_json(*r.group) : Json(nullptr);
  Json graded = Json::array();
  for (const auto& gp : r.associated_graded) {
    Json g{{"p", gp.p}, {"q", gp.q}, {"group", to_json(gp.group)}};
    if (!gp.note.empty()) g["note"] = gp.note;
    graded.push_back(g);
  }
  j["associated_graded"] = graded;
  j["graded_order"] = r.finite_order ? Json(*r.finite_order) : Json(nullptr);
  j["ambiguity"] = r.ambiguity;
  j["assumptions"] = r.assumptions;
  Json cond = Json::array();
  for (const auto& c : r.conditional) cond.push_back({{"if", c.condition}, {"group", to_json(c.group)}});
  j["conditional"] = cond;
  j["truncated"] = r.truncated;
  return j;
}

Json to_json(const BosonicReport& r) {
  return {{"model", r.model},
          {"truncation", r.truncation},
          {"unreduced", to_json(r.unreduced)},
          {"reduced", to_json(r.reduced)},
          {"ordinary", to_json(r.ordinary)},
          {"comparison", r.comparison},
          {"consistent", r.consistent}};
}

Json to_json(const ClassifyResponse& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dimension"] = r.dimension;
  j["statistics"] = to_string(r.statistics);
  j["group"] = r.group ? to_json(*r.group) : Json(nullptr);
  j["class_count"] = r.class_count ? Json(*r.class_count) : Json(nullptr);
  Json graded = Json::array();
  for (const auto& gp : r.associated_graded)
    graded.push_back({{"p", gp.p}, {"q", gp.q}, {"group", to_json(gp.group)}});
  j["associated_graded"] = graded;
  j["representatives"] = r.representatives;
  if (r.anomaly.present)
    j["anomaly"] = {{"target", to_json(r.anomaly.target)},
                    {"image", to_json(r.anomaly.image)},
                    {"nonzero", r.anomaly.nonzero},
                    {"description", r.anomaly.description}};
  else
    j["anomaly"] = nullptr;
  j["ambiguity"] = r.ambiguity;
  j["assumptions"] = r.assumptions;
  j["notes"] = r.notes;
  Json prov = Json::object();
  for (const auto& [k, v] : r.truncations) prov[k] = v;
  j["provenance"] = {{"truncations", prov}};
  return j;
}

Json to_json(const BrauerClass& c) { return {{"base", c.base}, {"class", c.name()}}; }

Json to_json(const ZeroOneResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dimension"] = "0+1";
  j["statistics"] = to_string(r.statistics);
  j["time_reversal"] = r.time_reversal;
  Json cls = Json::array();
  for (const auto& c : r.classes) {
    Json x = to_json(c.cls);
    x["size"] = c.size == 0 ? Json("any") : Json(c.size);
    x["representative"] = c.representative;
    cls.push_back(x);
  }
  j["classes"] = cls;
  return j;
}

Json to_json(const TableResult& t) {
  Json diffs = Json::array();
  for (const auto& d : t.diffs) diffs.push_back({{"where", d.where}, {"expected", d.expected}, {"got", d.got}});
  return {{"table", t.name}, {"rows", t.rows}, {"match", t.match}, {"diffs", diffs}, {"golden", t.golden_path}};
}

}  // namespace ordcalc
