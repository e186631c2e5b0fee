#include "dualcat/json_io.hpp"

namespace dualcat {

namespace {

int degree_key(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad degree key: " + s);
  }
}

FieldMatrix field_matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix row count mismatch");
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field_elem_from_json(f, j[r][c]);
  }
  return m;
}

Json to_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const DualMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DualMatrix dual_matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("differential row count mismatch");
  DualMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("differential column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dual_from_json(f, j[r][c]));
  }
  return m;
}

}  // namespace

Json to_json(const FieldElem& v) { return v.str(); }

FieldElem field_elem_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("scalar must be a string");
  return f.parse(j.get<std::string>());
}

Json to_json(const DualScalar& v) {
  return Json{{"a", v.unit_part().str()}, {"b", v.eps_part().str()}};
}

DualScalar dual_from_json(const Field& f, const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("dual scalar must be {\"a\": ..., \"b\": ...}");
  return {field_elem_from_json(f, j.at("a")), field_elem_from_json(f, j.at("b"))};
}

Json to_json(const FreeComplex& c) {
  Json ranks = Json::object(), diffs = Json::object();
  for (auto& [n, r] : c.ranks()) ranks[std::to_string(n)] = r;
  for (auto& [n, r] : c.ranks()) {
    (void)r;
    if (c.rank_at(n + 1) == 0) continue;
    DualMatrix d = c.diff(n);
    if (!d.is_zero()) diffs[std::to_string(n)] = to_json(d);
  }
  return Json{{"ranks", std::move(ranks)}, {"diffs", std::move(diffs)}};
}

FreeComplex free_complex_from_json(const Field& f, const Json& j) {
  if (!j.is_object() || !j.contains("ranks"))
    throw std::invalid_argument("complex must contain \"ranks\"");
  FreeComplex c(f);
  for (auto& [key, val] : j.at("ranks").items()) {
    if (!val.is_number_unsigned() || val.get<std::size_t>() == 0)
      throw std::invalid_argument("ranks must be positive integers");
    c.set_term(degree_key(key), val.get<std::size_t>());
  }
  if (j.contains("diffs"))
    for (auto& [key, val] : j.at("diffs").items()) {
      int n = degree_key(key);
      c.set_diff(n, dual_matrix_from_json(f, val, c.rank_at(n + 1), c.rank_at(n)));
    }
  return c;
}

Json to_json(const ModuleComplex& c) {
  Json ranks = Json::object(), kterms = Json::object(), diffs = Json::object();
  for (auto& [n, s] : c.terms()) {
    if (s.free_rank > 0) ranks[std::to_string(n)] = s.free_rank;
    if (s.k_rank > 0) kterms[std::to_string(n)] = s.k_rank;
  }
  for (auto& [n, s] : c.terms()) {
    (void)s;
    if (c.term_at(n + 1).is_zero()) continue;
    TypedMatrix d = c.diff(n);
    if (d.is_zero()) continue;
    diffs[std::to_string(n)] = Json{{"aa", to_json(d.aa)},
                                    {"ka", to_json(d.ka)},
                                    {"ak", to_json(d.ak)},
                                    {"kk", to_json(d.kk)}};
  }
  return Json{{"ranks", std::move(ranks)}, {"kterms", std::move(kterms)}, {"diffs", std::move(diffs)}};
}

ModuleComplex module_complex_from_json(const Field& f, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("module complex must be an object");
  std::map<int, ModShape> shapes;
  if (j.contains("ranks"))
    for (auto& [key, val] : j.at("ranks").items()) shapes[degree_key(key)].free_rank = val.get<std::size_t>();
  if (j.contains("kterms"))
    for (auto& [key, val] : j.at("kterms").items()) shapes[degree_key(key)].k_rank = val.get<std::size_t>();
  ModuleComplex c(f);
  for (auto& [n, s] : shapes)
    if (!s.is_zero()) c.set_term(n, s);
  if (j.contains("diffs"))
    for (auto& [key, val] : j.at("diffs").items()) {
      int n = degree_key(key);
      ModShape s0 = c.term_at(n), s1 = c.term_at(n + 1);
      TypedMatrix d(f, s1, s0);
      d.aa = dual_matrix_from_json(f, val.at("aa"), s1.free_rank, s0.free_rank);
      d.ka = field_matrix_from_json(f, val.at("ka"), s1.free_rank, s0.k_rank);
      d.ak = field_matrix_from_json(f, val.at("ak"), s1.k_rank, s0.free_rank);
      d.kk = field_matrix_from_json(f, val.at("kk"), s1.k_rank, s0.k_rank);
      c.set_diff(n, std::move(d));
    }
  return c;
}

Json to_json(const XIndex& i) {
  if (i.is_infinite()) return "inf";
  return i.value();
}

XIndex xindex_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return XIndex::infinity();
    throw std::invalid_argument("index must be a positive integer or \"inf\"");
  }
  if (!j.is_number_integer()) throw std::invalid_argument("index must be a positive integer or \"inf\"");
  return XIndex::finite(j.get<int>());
}

Json to_json(const FormalObject& o) {
  Json arr = Json::array();
  for (auto& s : o.summands())
    arr.push_back(Json{{"i", to_json(s.i)}, {"h", s.h}, {"m", s.mult}});
  return Json{{"summands", std::move(arr)}};
}

FormalObject formal_object_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("summands"))
    throw std::invalid_argument("formal object must contain \"summands\"");
  FormalObject o;
  for (auto& s : j.at("summands"))
    o.add(xindex_from_json(s.at("i")), s.at("h").get<int>(),
          s.contains("m") ? s.at("m").get<std::size_t>() : 1);
  return o;
}

Json to_json(const SymMorphism& m) {
  Json blocks = Json::array();
  for (std::size_t u = 0; u < m.source_units(); ++u)
    for (std::size_t v = 0; v < m.target_units(); ++v) {
      auto& [a, b] = m.block(u, v);
      if (a.is_zero() && b.is_zero()) continue;
      blocks.push_back(Json{{"from", u}, {"to", v}, {"a", a.str()}, {"b", b.str()}});
    }
  return Json{{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"blocks", std::move(blocks)}};
}

SymMorphism sym_from_json(const Field& f, const Json& j) {
  SymMorphism m(f, formal_object_from_json(j.at("source")), formal_object_from_json(j.at("target")));
  if (j.contains("blocks"))
    for (auto& b : j.at("blocks"))
      m.set_block(b.at("from").get<std::size_t>(), b.at("to").get<std::size_t>(),
                  field_elem_from_json(f, b.at("a")), field_elem_from_json(f, b.at("b")));
  return m;
}

Json to_json(const CoeffAssignment& c) {
  Json coeffs = Json::array();
  for (auto& k : c.keys())
    coeffs.push_back(Json{{"i", k.i}, {"j", k.j}, {"alpha", k.alpha}, {"value", c.coeff(k).str()}});
  return Json{{"shift", c.object_shift()},
              {"window", Json{{"imax", c.imax()}, {"amax", c.amax()}}},
              {"coeffs", std::move(coeffs)}};
}

CoeffAssignment coeffs_from_json(const Field& f, const Json& j) {
  auto& w = j.at("window");
  CoeffAssignment c(f, w.at("imax").get<int>(), w.at("amax").get<int>(),
                    j.contains("shift") ? j.at("shift").get<int>() : 0);
  for (auto& e : j.at("coeffs"))
    c.set_coeff(GenKey{e.at("i").get<int>(), e.at("j").get<int>(), e.at("alpha").get<int>()},
                field_elem_from_json(f, e.at("value")));
  return c;
}

Json to_json(const StabilityCondition& s) {
  return Json{{"h", s.h}, {"mass", s.mass}, {"phi", s.phi}};
}

StabilityCondition sigma_from_json(const Json& j) {
  StabilityCondition s{j.at("h").get<int>(), j.at("mass").get<double>(), j.at("phi").get<double>()};
  if (s.mass <= 0 || s.phi <= 0 || s.phi > 1)
    throw std::invalid_argument("stability condition needs mass > 0 and phi in (0, 1]");
  return s;
}

Json to_json(const GroupElem& g) { return Json{{"kappa", g.kappa}, {"theta", g.theta}}; }

Json to_json(const HomDescriptor& d) {
  return Json{{"dim", d.dim()}, {"one_type", d.has_one}, {"eps_type", d.has_eps}};
}

Json to_json(const HeartVerdict& v) {
  Json j{{"accepted", v.accepted}, {"reason", v.reason}};
  switch (v.stage) {
    case HeartStage::NegativeHom: j["stage"] = "negative-hom"; break;
    case HeartStage::Extension: j["stage"] = "extension-closure"; break;
    case HeartStage::Generation: j["stage"] = "generation"; break;
    case HeartStage::Accepted: j["stage"] = "accepted"; break;
  }
  if (!v.triangle.empty()) j["triangle"] = v.triangle;
  return j;
}

Json to_json(const std::vector<HNFactor>& factors) {
  Json arr = Json::array();
  for (auto& f : factors)
    arr.push_back(Json{{"phase", f.phase}, {"heart_shift", f.heart_shift}, {"object", to_json(f.object)}});
  return arr;
}

Json to_json(const SiltingReport& r) {
  Json members = Json::array();
  for (auto& m : r.members) {
    Json e{{"i", to_json(m.i)}, {"h", m.h}, {"self_silting", m.self_silting}};
    if (!m.self_silting) e["self_extension_shift"] = m.witness_shift;
    members.push_back(std::move(e));
  }
  Json conflicts = Json::array();
  for (auto& c : r.conflicts)
    conflicts.push_back(Json{{"from", Json{{"i", to_json(c.a.first)}, {"h", c.a.second}}},
                             {"to", Json{{"i", to_json(c.b.first)}, {"h", c.b.second}}},
                             {"shift", c.shift}});
  Json subsets = Json::array();
  for (auto& s : r.maximal_silting) {
    Json mem = Json::array();
    for (auto& [i, h] : s.members) mem.push_back(Json{{"i", to_json(i)}, {"h", h}});
    subsets.push_back(Json{{"members", std::move(mem)},
                           {"silting", s.silting},
                           {"generates", s.generates},
                           {"witness", s.witness}});
  }
  return Json{{"window", Json{{"imax", r.imax}, {"hmax", r.hmax}}},
              {"members", std::move(members)},
              {"conflicts", std::move(conflicts)},
              {"maximal_silting", std::move(subsets)},
              {"db_generating_silting_exists", r.generating_silting_exists},
              {"certificate", r.certificate}};
}

}  // namespace dualcat
