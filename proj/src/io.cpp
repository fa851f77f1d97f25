#include "mirrorcat/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mirrorcat/errors.hpp"

namespace mirrorcat {

namespace {

using Json = nlohmann::ordered_json;

std::string to_string_kind(BundleKind k) {
  switch (k) {
    case BundleKind::ring: return "ring";
    case BundleKind::modular: return "modular";
    case BundleKind::branching: return "branching";
    case BundleKind::extension: return "extension";
  }
  return "?";
}

Json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* name, const std::filesystem::path& path) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(path.string() + ": missing field '" + name + "'");
  return *it;
}

Meta read_meta(const Json& j, const std::filesystem::path& path) {
  Meta meta;
  auto it = j.find("meta");
  if (it == j.end()) return meta;
  if (!it->is_object()) throw SchemaError(path.string() + ": 'meta' must be an object");
  for (const auto& [key, value] : it->items()) {
    if (!value.is_string()) throw SchemaError(path.string() + ": meta values must be strings");
    meta[key] = value.get<std::string>();
  }
  return meta;
}

Rational read_rational(const Json& j, const std::string& where, const std::filesystem::path& path) {
  if (!j.is_string()) throw SchemaError(path.string() + ": " + where + " must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path.string() + ": " + where + ": " + e.what());
  }
}

std::vector<std::string> read_labels(const Json& j, const std::filesystem::path& path) {
  const Json& arr = field(j, "labels", path);
  if (!arr.is_array() || arr.empty()) throw SchemaError(path.string() + ": 'labels' must be a nonempty array");
  std::vector<std::string> labels;
  for (const auto& item : arr) {
    if (!item.is_string()) throw SchemaError(path.string() + ": labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

ModularData read_modular(const Json& j, const std::filesystem::path& path) {
  ModularData md;
  md.labels = read_labels(j, path);
  md.unit = 0;
  const size_t n = md.labels.size();

  const Json& s = field(j, "S", path);
  if (!s.is_array() || s.size() != n) throw SchemaError(path.string() + ": 'S' must be a " + std::to_string(n) + "-row matrix");
  md.S.assign(n, std::vector<Complex>(n));
  for (size_t a = 0; a < n; ++a) {
    if (!s[a].is_array() || s[a].size() != n) throw SchemaError(path.string() + ": 'S' is not square");
    for (size_t b = 0; b < n; ++b) {
      const Json& cell = s[a][b];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw SchemaError(path.string() + ": S entries must be [re, im] pairs");
      md.S[a][b] = Complex{cell[0].get<double>(), cell[1].get<double>()};
    }
  }

  const Json& h = field(j, "h", path);
  if (!h.is_array() || h.size() != n) throw SchemaError(path.string() + ": 'h' must list one weight per label");
  for (size_t a = 0; a < n; ++a) md.h.push_back(read_rational(h[a], "h[" + std::to_string(a) + "]", path));
  if (md.h[md.unit] != Rational(0))
    throw SchemaError(path.string() + ": h on the unit label must be 0, got " + md.h[md.unit].str());

  md.c = read_rational(field(j, "c", path), "c", path);
  return md;
}

FusionRing read_ring(const Json& j, const std::filesystem::path& path) {
  std::vector<std::string> labels = read_labels(j, path);
  const int n = static_cast<int>(labels.size());

  const Json& unit_j = field(j, "unit", path);
  if (!unit_j.is_number_integer()) throw SchemaError(path.string() + ": 'unit' must be an index");
  int unit = unit_j.get<int>();
  if (unit < 0 || unit >= n) throw SchemaError(path.string() + ": unit index out of range");

  const Json& rows = field(j, "N", path);
  if (!rows.is_array()) throw SchemaError(path.string() + ": 'N' must be an array of [a,b,c,mult] rows");
  FusionTensor tensor;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 4) throw SchemaError(path.string() + ": N rows must be [a,b,c,mult]");
    for (const auto& v : row)
      if (!v.is_number_integer()) throw SchemaError(path.string() + ": N rows must be integers");
    int a = row[0].get<int>(), b = row[1].get<int>(), c = row[2].get<int>();
    auto mult = row[3].get<Mult>();
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
      throw SchemaError(path.string() + ": N row index out of range");
    if (mult < 0) throw SchemaError(path.string() + ": negative multiplicity in N");
    if (mult == 0) continue;
    if (!tensor.emplace(FusionKey{a, b, c}, mult).second)
      throw SchemaError(path.string() + ": duplicate N row for (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
  }

  // duals always recomputed from the tensor
  std::vector<int> dual = infer_duals(tensor, unit, n);
  return FusionRing(std::move(labels), unit, std::move(dual), std::move(tensor));
}

std::shared_ptr<const ValidatedCategory> load_category(const std::filesystem::path& ref,
                                                       const std::filesystem::path& base_dir,
                                                       std::filesystem::path* resolved, const Tolerances& tol) {
  std::filesystem::path p = ref.is_absolute() ? ref : base_dir / ref;
  if (!std::filesystem::exists(p))
    throw ResolutionError("referenced category file '" + p.string() + "' does not exist");
  *resolved = std::filesystem::weakly_canonical(p);
  Bundle b = load_bundle(p, tol);
  if (b.kind != BundleKind::modular)
    throw ResolutionError("'" + p.string() + "' is a " + to_string_kind(b.kind) + " bundle, expected modular data");
  return ValidatedCategory::make(std::move(*b.modular), tol);
}

LoadedBranching read_branching(const Json& j, const std::filesystem::path& path, const Tolerances& tol) {
  LoadedBranching out;
  const Json& c1 = field(j, "cat1", path);
  const Json& c2 = field(j, "cat2", path);
  if (!c1.is_string() || !c2.is_string()) throw SchemaError(path.string() + ": 'cat1'/'cat2' must be file paths");
  out.cat1_path = c1.get<std::string>();
  out.cat2_path = c2.get<std::string>();
  std::filesystem::path dir = path.parent_path();
  out.z.cat1 = load_category(out.cat1_path, dir, &out.cat1_resolved, tol);
  out.z.cat2 = load_category(out.cat2_path, dir, &out.cat2_resolved, tol);

  const Json& pairs = field(j, "pairs", path);
  if (!pairs.is_array()) throw SchemaError(path.string() + ": 'pairs' must be an array of [i,j,mult] rows");
  for (const auto& row : pairs) {
    if (!row.is_array() || row.size() != 3) throw SchemaError(path.string() + ": pairs rows must be [i,j,mult]");
    for (const auto& v : row)
      if (!v.is_number_integer()) throw SchemaError(path.string() + ": pairs rows must be integers");
    int i = row[0].get<int>(), jcol = row[1].get<int>();
    auto mult = row[2].get<Mult>();
    if (i < 0 || i >= out.z.cat1->size() || jcol < 0 || jcol >= out.z.cat2->size())
      throw SchemaError(path.string() + ": pair index out of range");
    if (mult < 0) throw SchemaError(path.string() + ": negative multiplicity in pairs");
    if (mult == 0) continue;
    if (!out.z.entries.emplace(std::pair<int, int>{i, jcol}, mult).second)
      throw SchemaError(path.string() + ": duplicate pair (" + std::to_string(i) + "," + std::to_string(jcol) + ")");
  }

  auto hyp = j.find("hypotheses");
  if (hyp != j.end()) {
    if (!hyp->is_object()) throw SchemaError(path.string() + ": 'hypotheses' must be an object");
    auto read_flag = [&](const char* name, bool fallback) {
      auto it = hyp->find(name);
      if (it == hyp->end()) return fallback;
      if (!it->is_boolean()) throw SchemaError(path.string() + ": hypothesis '" + std::string(name) + "' must be a bool");
      return it->get<bool>();
    };
    out.z.hypotheses.double_commutant = read_flag("double_commutant", true);
    out.z.hypotheses.simple_self_dual_u = read_flag("simple_self_dual_U", true);
  }
  return out;
}

LoadedExtension read_extension(const Json& j, const std::filesystem::path& path, const Tolerances& tol) {
  LoadedExtension out;
  const Json& cat = field(j, "category", path);
  if (!cat.is_string()) throw SchemaError(path.string() + ": 'category' must be a file path");
  out.category_path = cat.get<std::string>();
  out.category = load_category(out.category_path, path.parent_path(), &out.category_resolved, tol);

  const Json& side = field(j, "side", path);
  if (!side.is_number_integer() || (side.get<int>() != 1 && side.get<int>() != 2))
    throw SchemaError(path.string() + ": 'side' must be 1 or 2");
  out.ext.side = side.get<int>();

  const Json& m = field(j, "m", path);
  if (!m.is_object()) throw SchemaError(path.string() + ": 'm' must map label names to multiplicities");
  const auto& labels = out.category->md.labels;
  for (const auto& [name, value] : m.items()) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw SchemaError(path.string() + ": unknown label '" + name + "' in 'm'");
    if (!value.is_number_integer() || value.get<Mult>() < 0)
      throw SchemaError(path.string() + ": multiplicity of '" + name + "' must be a nonnegative integer");
    out.ext.m[static_cast<int>(it - labels.begin())] = value.get<Mult>();
  }

  auto simple = j.find("simple");
  if (simple != j.end()) {
    if (!simple->is_boolean()) throw SchemaError(path.string() + ": 'simple' must be a bool");
    out.ext.simple = simple->get<bool>();
  }
  return out;
}

Json meta_json(const Meta& meta) {
  Json j = Json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

}  // namespace

std::string to_string(BundleKind k) { return to_string_kind(k); }

Bundle load_bundle(const std::filesystem::path& path, const Tolerances& tol) {
  Json j = parse_file(path);
  if (!j.is_object()) throw SchemaError(path.string() + ": top level must be an object");
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) throw SchemaError(path.string() + ": 'kind' must be a string");
  std::string k = kind.get<std::string>();

  Bundle b;
  b.meta = read_meta(j, path);
  if (k == "modular") {
    b.kind = BundleKind::modular;
    b.modular = read_modular(j, path);
  } else if (k == "ring") {
    b.kind = BundleKind::ring;
    b.ring = read_ring(j, path);
  } else if (k == "branching") {
    b.kind = BundleKind::branching;
    b.branching = read_branching(j, path, tol);
  } else if (k == "extension") {
    b.kind = BundleKind::extension;
    b.extension = read_extension(j, path, tol);
  } else {
    throw SchemaError(path.string() + ": unknown bundle kind '" + k + "'");
  }
  return b;
}

void save_modular_bundle(const std::filesystem::path& path, const ModularData& md, const Meta& meta) {
  Json j;
  j["kind"] = "modular";
  j["labels"] = md.labels;
  Json s = Json::array();
  for (const auto& row : md.S) {
    Json r = Json::array();
    for (const Complex& v : row) r.push_back(Json::array({v.real(), v.imag()}));
    s.push_back(std::move(r));
  }
  j["S"] = std::move(s);
  Json h = Json::array();
  for (const Rational& w : md.h) h.push_back(w.str());
  j["h"] = std::move(h);
  j["c"] = md.c.str();
  if (!meta.empty()) j["meta"] = meta_json(meta);
  write_file(path, j);
}

void save_ring_bundle(const std::filesystem::path& path, const FusionRing& ring, const Meta& meta) {
  Json j;
  j["kind"] = "ring";
  j["labels"] = ring.labels();
  j["unit"] = ring.unit();
  Json rows = Json::array();
  for (const auto& [key, mult] : ring.tensor()) rows.push_back(Json::array({key[0], key[1], key[2], mult}));
  j["N"] = std::move(rows);
  if (!meta.empty()) j["meta"] = meta_json(meta);
  write_file(path, j);
}

void save_branching_bundle(const std::filesystem::path& path, const std::string& cat1_path,
                           const std::string& cat2_path, const std::map<std::pair<int, int>, Mult>& pairs,
                           const Hypotheses& hyp, const Meta& meta) {
  Json j;
  j["kind"] = "branching";
  j["cat1"] = cat1_path;
  j["cat2"] = cat2_path;
  Json rows = Json::array();
  for (const auto& [key, mult] : pairs)
    if (mult != 0) rows.push_back(Json::array({key.first, key.second, mult}));
  j["pairs"] = std::move(rows);
  j["hypotheses"] = Json{{"double_commutant", hyp.double_commutant}, {"simple_self_dual_U", hyp.simple_self_dual_u}};
  if (!meta.empty()) j["meta"] = meta_json(meta);
  write_file(path, j);
}

void save_extension_bundle(const std::filesystem::path& path, const std::string& category_path, int side,
                           const std::map<std::string, Mult>& m, bool simple, const Meta& meta) {
  Json j;
  j["kind"] = "extension";
  j["category"] = category_path;
  j["side"] = side;
  Json mm = Json::object();
  for (const auto& [name, mult] : m) mm[name] = mult;
  j["m"] = std::move(mm);
  j["simple"] = simple;
  if (!meta.empty()) j["meta"] = meta_json(meta);
  write_file(path, j);
}

ModularData builtin_ising() {
  ModularData md;
  md.labels = {"1", "eps", "sigma"};
  md.unit = 0;
  md.h = {Rational(0), Rational(1, 2), Rational(1, 16)};
  md.c = Rational(1, 2);
  const double r = std::sqrt(2.0);
  md.S = {{{0.5, 0}, {0.5, 0}, {0.5 * r, 0}},
          {{0.5, 0}, {0.5, 0}, {-0.5 * r, 0}},
          {{0.5 * r, 0}, {-0.5 * r, 0}, {0, 0}}};
  return md;
}

std::string render_report_text(const CheckReport& rep) {
  std::ostringstream os;
  for (const auto& e : rep.entries()) {
    os << to_string(e.status) << "  " << e.id;
    if (!e.detail.empty() && e.status != CheckStatus::pass) os << "  [" << e.detail << "]";
    os << "\n";
  }
  os << "overall: " << (rep.overall() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_report_machine(const CheckReport& rep) {
  Json checks = Json::array();
  for (const auto& e : rep.entries())
    checks.push_back(Json{{"id", e.id}, {"status", to_string(e.status)}, {"detail", e.detail}});
  Json j{{"overall", rep.overall()}, {"checks", std::move(checks)}};
  return j.dump(2);
}

}  // namespace mirrorcat
