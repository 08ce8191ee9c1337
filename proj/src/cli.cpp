#include "unimod/cli.hpp"

#include "unimod/bounds.hpp"
#include "unimod/codes.hpp"
#include "unimod/constructions.hpp"
#include "unimod/genus.hpp"
#include "unimod/io.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace unimod {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int dim = 0, from = 8, to = 40, mu = 0, terms = 4, target = 0;
  long shadow_trunc = 0, lattice_trunc = 0;
  bool exhaustive = false, shadow = false;
  std::string lattice, code, base, spec, vector, out, spec_out, mass, max_norm;
  std::uint64_t seed = GlueSearchOptions{}.seed;
  std::size_t attempts = GlueSearchOptions{}.max_attempts;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string fit_text(const ThetaFit& f) {
  std::vector<std::string> parts;
  for (const auto& c : f.coeffs) parts.push_back(c ? c->str() : "FREE");
  return "(" + join(parts, ", ") + ")";
}

std::string coeffs_text(const std::vector<Rat>& a) {
  std::vector<std::string> parts;
  for (const auto& c : a) parts.push_back(c.str());
  return "(" + join(parts, ", ") + ")";
}

void report_text(std::ostream& os, const FeasibilityReport& r, std::size_t max_branches = 6) {
  os << "  mu=" << r.mu << ": " << to_string(r.verdict);
  if (r.reason != Reason::None) os << " (" << to_string(r.reason) << ")";
  os << "\n    prefix a = " << fit_text(r.prefix) << "\n";
  os << "    branches: " << r.survivors << " surviving, " << r.rejected << " rejected";
  if (!r.residual_free.empty()) {
    std::vector<std::string> idx;
    for (const int j : r.residual_free) idx.push_back("a_" + std::to_string(j));
    os << ", unresolved " << join(idx, ", ");
  }
  os << "\n";
  std::size_t shown = 0;
  for (const auto& b : r.branches) {
    if (shown++ == max_branches) {
      os << "    ...\n";
      break;
    }
    os << "    a = " << coeffs_text(b.coeffs) << ": "
       << (b.rejection == Reason::None ? std::string("survives") : to_string(b.rejection));
    if (!b.detail.empty()) os << "; " << b.detail;
    os << "\n";
    if (b.gram && b.gram->diagonal && b.rejection == Reason::RankObstruction) {
      std::vector<std::string> t;
      for (const auto& x : b.gram->allowed) t.push_back(x.str());
      os << "      admissible inner products {" << join(t, ", ") << "}\n";
    }
    if (b.rejection == Reason::None) {
      os << "      theta  = " << b.lattice.pretty(6) << "\n";
      os << "      shadow = " << b.shadow.pretty(6) << "\n";
    }
  }
}

int cmd_bound(const Options& o, std::ostream& out) {
  ScanConfig cfg;
  cfg.shadow_trunc = o.shadow_trunc;
  const BoundCertificate c = mu_upper(o.dim, cfg);
  if (o.json) {
    out << dump(to_json(c));
    return 0;
  }
  out << "dimension " << c.dim << ": mu <= " << c.mu_upper << "  (odd scan " << c.odd_mu << ", even scan "
      << (c.even_mu ? std::to_string(*c.even_mu) : "n/a") << ")\n";
  for (const auto& r : c.odd_reports) report_text(out, r);
  if (c.even) out << "  even extremal form: " << c.even->series.pretty(4) << "\n";
  return 0;
}

int cmd_table1(const Options& o, std::ostream& out) {
  ScanConfig cfg;
  cfg.shadow_trunc = o.shadow_trunc;
  const auto rows = table1(o.from, o.to, cfg, default_workers());
  if (o.json) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json reasons = Json::array();
      for (const auto& r : row.cert.odd_reports)
        reasons.push_back(Json{{"mu", r.mu}, {"verdict", to_string(r.verdict)}, {"reason", to_string(r.reason)}});
      Json j{{"dim", row.cert.dim},
             {"mu_upper", row.cert.mu_upper},
             {"odd_mu", row.cert.odd_mu},
             {"even_mu", row.cert.even_mu ? Json(*row.cert.even_mu) : Json("n/a")},
             {"odd_scan", reasons}};
      if (row.lower)
        j["known_lower"] = Json{{"mu", row.lower->mu}, {"provenance", row.lower->provenance}, {"external", row.lower->external}};
      arr.push_back(std::move(j));
    }
    out << dump(arr);
    return 0;
  }
  out << "   n  upper  odd  even  known  source\n";
  for (const auto& row : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4d  %5d  %3d  %4s", row.cert.dim, row.cert.mu_upper, row.cert.odd_mu,
                  row.cert.even_mu ? std::to_string(*row.cert.even_mu).c_str() : "-");
    out << buf;
    if (row.lower) {
      std::snprintf(buf, sizeof buf, "  %5d  ", row.lower->mu);
      out << buf << row.lower->provenance;
    }
    out << "\n";
  }
  return 0;
}

Lattice named_lattice(const std::string& name) {
  if (name == "a15+") return a15_plus_fixture();
  if (name == "d16+") return d16_plus_fixture();
  if (name.rfind("Z", 0) == 0 && name.size() > 1 && name.find_first_not_of("0123456789", 1) == std::string::npos)
    return z_lattice(std::stoi(name.substr(1)));
  return load_lattice(name);
}

BinaryCode named_code(const std::string& name) {
  if (name == "rm25") return rm2_5_fixture();
  if (name == "golay") return golay_fixture();
  if (name == "hamming8") return hamming8_fixture();
  return load_code(name);
}

Rat max_norm_arg(const Options& o) {
  if (o.max_norm.empty()) throw std::invalid_argument("--max-norm is required");
  return Rat::parse(o.max_norm);
}

void series_out(const Options& o, std::ostream& out, const std::string& label, const QSeries& s) {
  if (o.json) out << dump(Json{{label, to_json(s)}});
  else out << label << " = " << s.pretty(64) << "\n";
}

int cmd_theta(const Options& o, std::ostream& out) {
  const Lattice L = named_lattice(o.lattice);
  const Rat r = max_norm_arg(o);
  if (o.shadow) series_out(o, out, "shadow", shadow_by_enumeration(L, r));
  else series_out(o, out, "theta", theta_by_enumeration(L, r));
  return 0;
}

int cmd_shadow(const Options& o, std::ostream& out) {
  if (!o.lattice.empty()) {
    series_out(o, out, "shadow", shadow_by_enumeration(named_lattice(o.lattice), max_norm_arg(o)));
    return 0;
  }
  if (o.dim < 1 || o.mu < 1) throw std::invalid_argument("shadow needs --dim and --mu, or --lattice");
  ScanWindow w = ScanWindow::defaults(o.dim, o.mu);
  if (o.shadow_trunc > 0) w.shadow_trunc = o.shadow_trunc;
  if (o.lattice_trunc > 0) w.lattice_trunc = o.lattice_trunc;
  ScanOptions so;
  so.exhaustive = o.exhaustive;
  const auto r = feasibility_scan(o.dim, o.mu, w, so);
  if (o.json) out << dump(to_json(r));
  else {
    out << "dimension " << o.dim << ", candidate minimal norm " << o.mu << "\n";
    report_text(out, r, 64);
  }
  return 0;
}

Json lattice_summary(const Lattice& L, const std::optional<Rat>& count_norm, Rat* min_out = nullptr) {
  const auto chk = check_unimodular(L);
  const Rat mn = minimal_norm(L);
  if (min_out) *min_out = mn;
  Json j{{"name", L.name}, {"dim", L.dim()}, {"det", chk.det.str()}, {"parity", to_string(chk.parity)},
         {"minimal_norm", mn.str()}};
  const Rat r = count_norm ? *count_norm : mn;
  j["kissing"] = enumerate_short(L, mn).counts.at(mn);
  if (count_norm) j["counts"] = to_json(enumerate_short(L, r).counts);
  return j;
}

void summary_text(std::ostream& os, const Json& s) {
  os << s["name"].get<std::string>() << ": dim " << s["dim"] << ", det " << s["det"].get<std::string>() << ", "
     << s["parity"].get<std::string>() << ", minimal norm " << s["minimal_norm"].get<std::string>() << ", "
     << s["kissing"] << " minimal vectors\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Lattice L = named_lattice(o.lattice);
  const auto chk = check_unimodular(L);
  Json s{{"name", L.name}, {"dim", L.dim()}, {"det", chk.det.str()}, {"parity", to_string(chk.parity)},
         {"unimodular", chk.unimodular()}};
  if (chk.unimodular()) {
    const Rat mn = minimal_norm(L);
    s["minimal_norm"] = mn.str();
    s["kissing"] = enumerate_short(L, mn).counts.at(mn);
  } else {
    s["detail"] = chk.detail;
  }
  if (o.json) out << dump(s);
  else {
    out << (L.name.empty() ? o.lattice : L.name) << ": dim " << L.dim() << ", " << chk.detail;
    if (chk.unimodular())
      out << ", minimal norm " << s["minimal_norm"].get<std::string>() << ", " << s["kissing"] << " minimal vectors";
    out << "\n";
  }
  if (!chk.unimodular()) throw VerificationFailure("lattice is not unimodular: " + chk.detail);
  return 0;
}

int cmd_code_info(const Options& o, std::ostream& out) {
  const BinaryCode c = named_code(o.code);
  const auto we = weight_enumerator(c);
  Json w = Json::object();
  for (const auto& [k, v] : we) w[std::to_string(k)] = v;
  Json j{{"name", c.name()}, {"length", c.length()}, {"dimension", c.dimension()},
         {"self_dual", is_self_dual(c)}, {"doubly_even", is_doubly_even(c)}, {"weights", w}};
  if (o.json) {
    out << dump(j);
    return 0;
  }
  out << c.name() << ": [" << c.length() << "," << c.dimension() << "] code, self-dual "
      << (is_self_dual(c) ? "yes" : "no") << ", doubly-even " << (is_doubly_even(c) ? "yes" : "no") << "\n";
  out << "weights:";
  for (const auto& [k, v] : we) out << " A_" << k << "=" << v;
  out << "\n";
  return 0;
}

int cmd_construct_code(const Options& o, std::ostream& out) {
  const BinaryCode c = named_code(o.code);
  Lattice L;
  try {
    L = code_to_odd_lattice(c);
  } catch (const std::invalid_argument& e) {
    throw VerificationFailure(e.what());
  }
  const auto we = weight_enumerator(c);
  Json s = lattice_summary(L, std::nullopt);
  const auto a8 = we.count(8) ? we.at(8) : 0;
  s["code_A8"] = a8;
  if (!o.out.empty()) save_json(to_json(L), o.out);
  if (o.json) out << dump(s);
  else {
    summary_text(out, s);
    out << "code " << c.name() << ": A_8 = " << a8 << "\n";
  }
  return 0;
}

int cmd_construct_glue(const Options& o, std::ostream& out) {
  Json s;
  Lattice glued;
  Rat mn;
  if (!o.spec.empty()) {
    const GlueSpec spec = glue_spec_from_json(load_json(o.spec));
    try {
      glued = glue_double(spec);
    } catch (const std::invalid_argument& e) {
      throw VerificationFailure(e.what());
    }
    s = lattice_summary(glued, std::nullopt, &mn);
    if (!o.spec_out.empty()) save_json(to_json(spec), o.spec_out);
  } else {
    const Lattice base = named_lattice(o.base.empty() ? "a15+" : o.base);
    GlueSearchOptions go;
    go.seed = o.seed;
    go.max_attempts = o.attempts;
    go.target = o.target;
    const auto res = find_glue(base, go);
    if (!res) throw VerificationFailure("no glue candidate examined");
    glued = res->lattice;
    s = lattice_summary(glued, std::nullopt, &mn);
    s["attempts"] = res->attempts;
    s["target"] = res->target;
    s["seed"] = go.seed;
    if (!o.spec_out.empty()) save_json(to_json(res->spec), o.spec_out);
    if (mn < Rat(res->target)) {
      if (o.json) out << dump(s);
      else summary_text(out, s);
      throw VerificationFailure("glue search reached minimal norm " + mn.str() + ", below the target " +
                                std::to_string(res->target));
    }
  }
  if (!o.out.empty()) save_json(to_json(glued), o.out);
  if (o.json) out << dump(s);
  else summary_text(out, s);
  return 0;
}

RatVector parse_vector(const std::string& text) {
  std::vector<Rat> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rat::parse(item));
  RatVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = v[i];
  return r;
}

int cmd_construct_shave(const Options& o, std::ostream& out) {
  const Lattice L = named_lattice(o.lattice);
  RatVector v;
  const Rat target(o.target > 0 ? o.target : 3);
  if (!o.vector.empty()) {
    v = parse_vector(o.vector);
  } else {
    const auto found = find_shave_vector(L, target);
    if (!found) throw VerificationFailure("no norm-4 vector gives a shave of minimal norm " + target.str());
    v = *found;
  }
  Lattice S;
  try {
    S = project_shave(L, v);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--vector: ") + e.what());
  }
  Rat mn;
  Json s = lattice_summary(S, std::nullopt, &mn);
  std::vector<std::string> vs;
  for (Eigen::Index i = 0; i < v.size(); ++i) vs.push_back(v(i).str());
  s["vector"] = join(vs, ",");
  if (!o.out.empty()) save_json(to_json(S), o.out);
  if (o.json) out << dump(s);
  else {
    summary_text(out, s);
    out << "shave vector: " << s["vector"].get<std::string>() << "\n";
  }
  if (!check_unimodular(S).unimodular()) throw VerificationFailure("shaved lattice is not unimodular");
  return 0;
}

int cmd_genus_avg(const Options& o, std::ostream& out) {
  const int terms = std::max(o.terms, 3);
  const long horizon = std::max<long>(4L * (o.dim / 4 + 2), terms);
  const AverageTheta a = solve_cj(o.dim, horizon);
  if (o.json) {
    out << dump(to_json(a, terms));
    return 0;
  }
  out << "genus average, dimension " << o.dim << " (conditions verified below q^" << a.horizon << ")\n";
  for (int m = 0; m < terms; ++m) {
    const Rat v = a.series.coeff_q(m);
    out << "  q^" << m << ": " << v.str() << "  ~ " << v.decimal(6) << "\n";
  }
  std::vector<std::string> cs;
  for (const auto& c : a.c) cs.push_back(c.str());
  out << "  c = (" << join(cs, ", ") << ")\n";
  return 0;
}

int cmd_genus_bound(const Options& o, std::ostream& out) {
  const Rat mass = o.mass.empty() ? default_mass_33() : Rat::parse(o.mass);
  const MassBound b = mass_count_bound(mass, solve_cj(o.dim));
  if (o.json) {
    out << dump(to_json(b));
    return 0;
  }
  out << "mass M = " << b.mass.decimal(4) << (o.mass.empty() ? " (four-digit default)" : "") << "\n";
  out << "average number of vectors of norm 1 or 2: " << b.small_total.decimal(6) << "\n";
  if (b.vacuous) {
    out << "bound is vacuous (average >= 2)\n";
    return 0;
  }
  out << "M_0 >= " << b.m0_lower.decimal(4) << "\n";
  out << "lattices with minimal norm >= 3: >= " << b.count_lower.decimal(4) << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and constructions for unimodular lattices", "unimod"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.fallthrough();

  auto* bound = app.add_subcommand("bound", "Certified upper bound on the minimal norm in one dimension");
  bound->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::Range(1, 48));
  bound->add_option("--shadow-trunc", o.shadow_trunc, "Shadow truncation in quarter units");

  auto* tab = app.add_subcommand("table1", "Upper bounds for a range of dimensions");
  tab->add_option("--from", o.from, "First dimension")->check(CLI::Range(1, 48));
  tab->add_option("--to", o.to, "Last dimension")->check(CLI::Range(1, 48));
  tab->add_option("--shadow-trunc", o.shadow_trunc, "Shadow truncation in quarter units");

  auto* sh = app.add_subcommand("shadow", "Feasibility scan for one (dim, mu), or a lattice's shadow series");
  sh->add_option("--dim", o.dim, "Dimension")->check(CLI::Range(1, 48));
  sh->add_option("--mu", o.mu, "Candidate minimal norm");
  sh->add_option("--shadow-trunc", o.shadow_trunc, "Shadow truncation in quarter units");
  sh->add_option("--lattice-trunc", o.lattice_trunc, "Theta truncation in quarter units");
  sh->add_flag("--exhaustive", o.exhaustive, "Resolve every branch");
  sh->add_option("--lattice", o.lattice, "Lattice JSON file (enumerates the shadow)");
  sh->add_option("--max-norm", o.max_norm, "Norm cut-off for --lattice");

  auto* th = app.add_subcommand("theta", "Theta (or shadow) series by enumeration");
  th->add_option("--lattice", o.lattice, "Lattice JSON file or a15+, d16+, Z<n>")->required();
  th->add_option("--max-norm", o.max_norm, "Norm cut-off")->required();
  th->add_flag("--shadow", o.shadow, "Shadow instead of the lattice");

  auto* ver = app.add_subcommand("verify", "Check unimodularity and compute the minimal norm");
  ver->add_option("--lattice", o.lattice, "Lattice JSON file or a15+, d16+, Z<n>")->required();

  auto* con = app.add_subcommand("construct", "Build lattices");
  con->require_subcommand(1);
  auto* ccode = con->add_subcommand("code", "Lattice from a doubly-even self-dual code");
  ccode->add_option("--code", o.code, "Code file or rm25, golay, hamming8")->required();
  ccode->add_option("--out", o.out, "Write the lattice JSON here");
  auto* cglue = con->add_subcommand("glue", "Glue two copies of sqrt2 L");
  cglue->add_option("--base", o.base, "a15+, d16+, Z<n> or a lattice JSON file");
  cglue->add_option("--spec", o.spec, "Use a saved glue spec instead of searching");
  cglue->add_option("--seed", o.seed, "Search seed");
  cglue->add_option("--attempts", o.attempts, "Search budget");
  cglue->add_option("--target", o.target, "Target minimal norm (default: certified bound)");
  cglue->add_option("--out", o.out, "Write the glued lattice JSON here");
  cglue->add_option("--spec-out", o.spec_out, "Write the glue spec JSON here");
  auto* cshave = con->add_subcommand("shave", "Project the even part along a norm-4 vector");
  cshave->add_option("--lattice", o.lattice, "Lattice JSON file")->required();
  cshave->add_option("--vector", o.vector, "Norm-4 vector in basis coordinates, \"a,b,...\"");
  cshave->add_option("--target", o.target, "Required minimal norm when searching (default 3)");
  cshave->add_option("--out", o.out, "Write the lattice JSON here");

  auto* ci = app.add_subcommand("code-info", "Weight enumerator and self-duality of a code");
  ci->add_option("--code", o.code, "Code file or rm25, golay, hamming8")->required();

  auto* ga = app.add_subcommand("genus-avg", "Genus-average theta series of odd unimodular lattices");
  ga->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::Range(5, 48));
  ga->add_option("--terms", o.terms, "Number of coefficients to print");

  auto* gb = app.add_subcommand("genus-bound", "Mass lower bound on lattices without norm 1 or 2 vectors");
  gb->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::Range(5, 48));
  gb->add_option("--mass", o.mass, "Mass of the genus as p/q or decimal (default 1.407e21)");

  for (auto* s : {bound, tab, sh, th, ver, ccode, cglue, cshave, ci, ga, gb}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o1, o2;
    const int code = app.exit(e, o1, o2);
    out << o1.str();
    err << o2.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*bound) return cmd_bound(o, out);
    if (*tab) {
      if (o.from > o.to) throw std::invalid_argument("--from must not exceed --to");
      return cmd_table1(o, out);
    }
    if (*sh) return cmd_shadow(o, out);
    if (*th) return cmd_theta(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*ccode) return cmd_construct_code(o, out);
    if (*cglue) return cmd_construct_glue(o, out);
    if (*cshave) return cmd_construct_shave(o, out);
    if (*ci) return cmd_code_info(o, out);
    if (*ga) return cmd_genus_avg(o, out);
    if (*gb) return cmd_genus_bound(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace unimod
