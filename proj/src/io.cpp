#include "unimod/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace unimod {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
  throw std::invalid_argument(where + ": expected a rational as a \"p/q\" string or an integer");
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(std::move(row));
  }
  return a;
}

namespace {

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RatMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument(w + ": row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          rat_from_json(j[i][k], w + "[" + std::to_string(k) + "]");
  }
  return m;
}

RatVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = rat_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, c.str()}));
  return Json{{"den4", terms}, {"trunc", s.truncation()}};
}

QSeries series_from_json(const Json& j) {
  const Json& t = field(j, "den4");
  const Json& tr = field(j, "trunc");
  if (!tr.is_number_integer()) throw std::invalid_argument("trunc: expected an integer");
  QSeries::Terms terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string w = "den4[" + std::to_string(i) + "]";
    if (!t[i].is_array() || t[i].size() != 2 || !t[i][0].is_number_integer())
      throw std::invalid_argument(w + ": expected [exponent, \"p/q\"]");
    terms[t[i][0].get<long>()] = rat_from_json(t[i][1], w);
  }
  return QSeries(std::move(terms), tr.get<long>());
}

Json to_json(const Lattice& L) {
  Json j{{"name", L.name}, {"dim", L.dim()}, {"gram", to_json(L.gram)}};
  if (L.embedding) {
    j["generators"] = to_json(L.embedding->generators);
    j["scale_sq"] = L.embedding->scale_sq.str();
  }
  return j;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("lattice file: expected a JSON object");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  std::optional<Embedding> emb;
  if (j.contains("generators")) {
    const Rat s = j.contains("scale_sq") ? rat_from_json(j["scale_sq"], "scale_sq") : Rat(1);
    emb = Embedding{matrix_from_json(j["generators"], "generators"), s};
  }
  RatMatrix gram;
  if (j.contains("gram")) gram = matrix_from_json(j["gram"], "gram");
  else if (emb) gram = (emb->generators * emb->generators.transpose()) * emb->scale_sq;
  else throw std::invalid_argument("missing field \"gram\"");
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() != gram.rows())
      throw std::invalid_argument("dim: does not match the gram matrix");
  }
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram: matrix is not square");
  Lattice L;
  try {
    L = Lattice::from_gram(gram, name);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("gram: ") + e.what());
  }
  if (emb) {
    if (emb->generators.rows() != gram.rows())
      throw std::invalid_argument("generators: need one row per basis vector");
    if ((emb->generators * emb->generators.transpose()) * emb->scale_sq != gram)
      throw std::invalid_argument("generators: gram does not equal scale_sq * G * G^T");
    L.embedding = emb;
  }
  return L;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Lattice load_lattice(const std::string& path) {
  const Json j = load_json(path);
  try {
    return lattice_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << dump(j);
}

Json to_json(const GlueSpec& spec) {
  Json j = to_json(spec.base);
  Json glue = Json::array();
  for (const auto& [x, y] : spec.glue) glue.push_back(Json{{"x", to_json(x)}, {"y", to_json(y)}});
  j["glue"] = glue;
  return j;
}

GlueSpec glue_spec_from_json(const Json& j) {
  GlueSpec spec{lattice_from_json(j), {}};
  const Json& g = field(j, "glue");
  if (!g.is_array()) throw std::invalid_argument("glue: expected an array");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string w = "glue[" + std::to_string(i) + "]";
    spec.glue.emplace_back(vector_from_json(field(g[i], "x"), w + ".x"), vector_from_json(field(g[i], "y"), w + ".y"));
  }
  return spec;
}

Json to_json(const ThetaFit& f) {
  Json c = Json::array();
  for (const auto& a : f.coeffs) c.push_back(a ? Json(a->str()) : Json("FREE"));
  return Json{{"dim", f.dim}, {"coeffs", c}};
}

Json to_json(const GramVerdict& g) {
  Json allowed = Json::array();
  for (const auto& t : g.allowed) allowed.push_back(t.str());
  Json j{{"contradiction", g.contradiction}, {"allowed", allowed}, {"detail", g.detail}};
  if (g.diagonal) {
    j["diagonal"] = g.diagonal->str();
    j["off_diagonal"] = g.off_diagonal->str();
    j["rank"] = g.gram_rank;
  }
  return j;
}

Json to_json(const FeasibilityReport& r) {
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json coeffs = Json::array();
    for (const auto& a : b.coeffs) coeffs.push_back(a.str());
    Json jb{{"coeffs", coeffs}, {"rejection", to_string(b.rejection)}, {"detail", b.detail}};
    if (b.violated_exponent) jb["violated_exponent_den4"] = *b.violated_exponent;
    if (b.violated_value) jb["violated_value"] = b.violated_value->str();
    if (b.violated_exponent) jb["violated_side"] = b.lattice_side ? "theta" : "shadow";
    if (b.gram) jb["gram"] = to_json(*b.gram);
    if (b.lattice.truncation() > 0) {
      jb["theta"] = to_json(b.lattice);
      jb["shadow"] = to_json(b.shadow);
    }
    branches.push_back(std::move(jb));
  }
  return Json{{"dim", r.dim},
              {"mu", r.mu},
              {"verdict", to_string(r.verdict)},
              {"reason", to_string(r.reason)},
              {"window", Json{{"shadow_trunc_den4", r.window.shadow_trunc}, {"lattice_trunc_den4", r.window.lattice_trunc}}},
              {"prefix", to_json(r.prefix)},
              {"survivors", r.survivors},
              {"rejected", r.rejected},
              {"residual_free", r.residual_free},
              {"branches", branches}};
}

Json to_json(const BoundCertificate& c) {
  Json reports = Json::array();
  for (const auto& r : c.odd_reports) reports.push_back(to_json(r));
  Json j{{"dim", c.dim}, {"mu_upper", c.mu_upper}, {"odd_mu", c.odd_mu}, {"odd_reports", reports}};
  j["even_mu"] = c.even_mu ? Json(*c.even_mu) : Json("n/a");
  if (c.even) j["even_series"] = to_json(c.even->series);
  return j;
}

Json to_json(const NormCount& c) {
  Json a = Json::array();
  for (const auto& [r, k] : c.counts) a.push_back(Json::array({r.str(), k}));
  return a;
}

Json to_json(const AverageTheta& a, int terms) {
  Json c = Json::array();
  for (const auto& x : a.c) c.push_back(x.str());
  Json coeffs = Json::array();
  for (int m = 0; m < terms && 4L * m < a.series.truncation(); ++m) {
    const Rat v = a.series.coeff_q(m);
    coeffs.push_back(Json{{"q", m}, {"exact", v.str()}, {"decimal", v.decimal(6)}});
  }
  return Json{{"dim", a.dim}, {"c", c}, {"coefficients", coeffs}, {"verified_below_q", a.horizon}};
}

Json to_json(const MassBound& b) {
  return Json{{"mass", b.mass.str()},
              {"mass_decimal", b.mass.decimal(6)},
              {"small_norm_total", b.small_total.str()},
              {"small_norm_total_decimal", b.small_total.decimal(6)},
              {"m0_lower", b.m0_lower.str()},
              {"m0_lower_decimal", b.m0_lower.decimal(6)},
              {"count_lower", b.count_lower.str()},
              {"count_lower_decimal", b.count_lower.decimal(6)},
              {"vacuous", b.vacuous}};
}

}  // namespace unimod
