#include "io/reports.hpp"

#include <future>
#include <sstream>

#include "error.hpp"

namespace tbx {

#ifndef TBX_VERSION
#define TBX_VERSION "0.0.0"
#endif

const char* const kLibraryVersion = TBX_VERSION;

namespace {

Json header(const RunConfig& cfg) {
  Json out;
  out["command"] = cfg.command;
  out["config"] = config_to_json(cfg);
  return out;
}

Json tableau_summary(const Tableau& a) {
  Json out;
  out["n"] = a.n();
  out["s"] = a.s();
  out["dim"] = a.dim();
  return out;
}

Json cartan_test_to_json(const CartanTest& t) {
  Json out;
  out["dim_prolongation_1"] = t.dim_prolong;
  out["cartan_bound"] = t.bound;
  out["involutive"] = t.involutive;
  out["characters"] = characters_to_json(t.characters);
  return out;
}

Json acyclicity_to_json(const AcyclicityVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["q_max"] = v.q_max;
  if (v.kind == AcyclicityVerdict::Kind::FailsAt) {
    out["failing_q"] = v.failing_q;
    out["failing_dim"] = v.failing_dim;
  }
  if (v.kind == AcyclicityVerdict::Kind::Certified) out["involutive_order"] = v.involutive_order;
  out["h2_dims"] = v.h2_dims;
  return out;
}

Json condition2_to_json(const Condition2Report& r) {
  Json out;
  out["holds"] = r.holds;
  out["tau_degree"] = r.tau.degree();
  out["tau"] = vector_polynomial_to_json(r.tau);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x;
    x["monomial"] = w.monomial;
    x["monomial_text"] = monomial_to_string(w.monomial);
    x["class_coords"] = to_json(w.cls.class_coords);
    x["complement"] = w.cls.complement;
    ws.push_back(x);
  }
  out["witnesses"] = ws;
  return out;
}

Json certification_to_json(const CertifyReport& r) {
  Json out;
  out["mode"] = to_string(r.mode);
  out["ok"] = r.ok;
  out["condition1"] = r.condition1;
  if (r.cartan) out["cartan_test"] = cartan_test_to_json(*r.cartan);
  if (r.acyclicity) out["acyclicity"] = acyclicity_to_json(*r.acyclicity);
  out["condition2"] = condition2_to_json(r.condition2);
  return out;
}

PdsOptions pds_options(const RunConfig& cfg, bool keep_a_basis) {
  PdsOptions o;
  o.genericity = cfg.genericity;
  o.keep_a_basis = keep_a_basis;
  o.force = cfg.force;
  o.q_max = cfg.q_max;
  return o;
}

LieTableau with_mode(const LieTableau& lt, const RunConfig& cfg) {
  LieTableau out = lt;
  if (cfg.mode) out.mode = *cfg.mode;
  return out;
}

std::vector<std::string> coframe_labels(const PfaffianSystemSpec& ps) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ps.k; ++i) out.push_back("alpha" + std::to_string(i));
  for (std::size_t j = 0; j < ps.generator_count(); ++j)
    out.push_back((j < ps.h ? "eta" : "gamma") + std::to_string(j < ps.h ? j : j - ps.h));
  for (std::size_t e = 0; e < ps.m; ++e) out.push_back("dp" + std::to_string(e));
  return out;
}

Json theorem_to_json(const Theorem41Report& r) {
  Json out;
  out["linear"] = r.linear;
  out["torsion_vanishes"] = r.torsion_vanishes;
  out["readback_equal"] = r.readback_equal;
  out["characters_equal"] = r.characters_equal;
  out["all"] = r.all();
  out["sample_points"] = r.sample_points;
  out["s0"] = r.s0;
  out["tableau_characters"] = characters_to_json(r.tableau_characters);
  out["pds_characters"] = characters_to_json(r.pds_characters);
  out["integral_dims_match"] = r.integral_dims_match;
  out["dim_prolongation_1"] = r.prolongation_dim;
  Json fm = Json::array();
  for (const auto& w : r.torsion.failing_monomials) fm.push_back(w.monomial);
  out["failing_monomials"] = fm;
  return out;
}

}  // namespace

Json config_to_json(const RunConfig& cfg) {
  Json out;
  out["version"] = kLibraryVersion;
  out["seed"] = cfg.genericity.seed;
  out["trials"] = cfg.genericity.trials;
  out["entry_bound"] = cfg.genericity.entry_bound;
  out["q_max"] = cfg.q_max;
  out["h_max"] = cfg.h_max;
  out["force"] = cfg.force;
  return out;
}

Report tableau_characters_report(const Tableau& a, const RunConfig& cfg) {
  Report r{header(cfg)};
  r.json["tableau"] = tableau_summary(a);
  r.json["characters"] = characters_to_json(characters(a, cfg.genericity));
  return r;
}

Report tableau_prolong_report(const Tableau& a, const RunConfig& cfg) {
  Report r{header(cfg)};
  r.json["tableau"] = tableau_summary(a);
  Json levels = Json::array();
  for (int h = 0; h <= cfg.h_max; ++h) {
    const Subspace& sp = a.prolongation(h);
    Json level;
    level["h"] = h;
    level["dim"] = sp.dim();
    Json basis = Json::array();
    for (const auto& v : sp.basis())
      basis.push_back(cochain_to_json({Grading{a.n(), a.s(), h + 1, 0}, v}));
    level["basis"] = basis;
    levels.push_back(level);
  }
  r.json["prolongations"] = levels;
  return r;
}

Report tableau_cartan_test_report(const Tableau& a, const RunConfig& cfg) {
  Report r{header(cfg)};
  r.json["tableau"] = tableau_summary(a);
  const auto t = cartan_test(a, cfg.genericity);
  r.json["cartan_test"] = cartan_test_to_json(t);
  r.verified = t.involutive;
  return r;
}

Report tableau_cohomology_report(const Tableau& a, const RunConfig& cfg) {
  Report r{header(cfg)};
  r.json["tableau"] = tableau_summary(a);
  Json rows = Json::array();
  for (int q = 0; q <= cfg.q_max; ++q) {
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p <= a.n(); ++p) dims.push_back(cohomology_dim(a, q, static_cast<int>(p)));
    Json row;
    row["q"] = q;
    row["dims_by_p"] = dims;
    rows.push_back(row);
  }
  r.json["cohomology"] = rows;
  return r;
}

Report lie_validate_report(const Json& input, const RunConfig& cfg) {
  Report r{header(cfg)};
  try {
    const LieAlgebra g = lie_algebra_from_any(input);
    const std::size_t killing_rank = rank(g.killing_form());
    Json out;
    out["dim"] = g.dim();
    out["labels"] = g.labels();
    out["jacobi"] = true;
    out["abelian"] = g.is_abelian();
    out["killing_rank"] = killing_rank;
    out["semisimple"] = g.dim() > 0 && killing_rank == g.dim();
    out["structure"] = lie_algebra_to_json(g)["structure"];
    r.json["lie_algebra"] = out;
  } catch (const JacobiViolationError& e) {
    Json out;
    out["jacobi"] = false;
    out["triple"] = Json::array({e.i, e.j, e.k});
    out["residual"] = to_json(e.residual);
    out["message"] = e.what();
    r.json["lie_algebra"] = out;
    r.verified = false;
  }
  return r;
}

Report certify_report(const LieTableau& lt_in, const RunConfig& cfg) {
  const LieTableau lt = with_mode(lt_in, cfg);
  Report r{header(cfg)};
  r.json["tableau"] = tableau_summary(lt.tableau);
  const auto c = certify(lt, cfg.genericity, cfg.q_max);
  r.json["certification"] = certification_to_json(c);
  r.verified = c.ok;
  return r;
}

Report pds_build_report(const LieTableau& lt_in, const RunConfig& cfg, bool keep_a_basis) {
  const LieTableau lt = with_mode(lt_in, cfg);
  Report r{header(cfg)};
  const auto ps = build_pds(lt, pds_options(cfg, keep_a_basis));
  Json out;
  out["k"] = ps.k;
  out["h"] = ps.h;
  out["s_prime"] = ps.s_prime;
  out["m"] = ps.m;
  out["generator_count"] = ps.generator_count();
  out["coframe"] = coframe_labels(ps);
  Json eta = Json::array();
  for (const auto& q : ps.eta_coeffs) eta.push_back(to_json(q));
  out["eta_coefficients"] = eta;
  out["offset"] = to_json(ps.offset);
  out["a_change"] = to_json(ps.basis.a_change);
  out["b_change"] = to_json(ps.basis.b_change);
  out["generic_flag"] = ps.basis.generic_flag;
  Json structure = Json::array();
  for (std::size_t a = 0; a < ps.structure.size(); ++a) {
    Json terms = Json::array();
    for (const auto& [key, poly] : ps.structure[a].terms)
      terms.push_back(Json::array({key.first, key.second, polynomial_to_json(poly)}));
    structure.push_back(terms);
  }
  out["structure_equations"] = structure;
  out["torsion"] = vector_polynomial_to_json(structure_torsion(ps));
  const auto verdict = torsion_class_polynomial(ps);
  out["torsion_vanishes"] = verdict.vanishes_identically;
  Json nl = Json::array();
  for (const auto& [a, e, f] : nonlinear_terms(ps)) nl.push_back(Json::array({a, e, f}));
  out["nonlinear_terms"] = nl;
  out["characters"] = characters_to_json(characters(ps.tableau, cfg.genericity));
  r.json["pds"] = out;
  if (ps.certification) r.json["certification"] = certification_to_json(*ps.certification);
  r.verified = verdict.vanishes_identically && nl.empty() &&
               (!ps.certification || ps.certification->ok);
  return r;
}

Report pds_verify_report(const LieTableau& lt_in, const RunConfig& cfg, bool keep_a_basis) {
  const LieTableau lt = with_mode(lt_in, cfg);
  Report r{header(cfg)};
  const auto ps = build_pds(lt, pds_options(cfg, keep_a_basis));
  const auto t = verify_theorem_4_1(ps, 20, cfg.genericity.seed);
  r.json["verification"] = theorem_to_json(t);
  r.verified = t.all();
  return r;
}

Report pds_tower_report(const LieTableau& lt_in, const RunConfig& cfg) {
  const LieTableau lt = with_mode(lt_in, cfg);
  Report r{header(cfg)};
  const auto c = certify(lt, cfg.genericity, cfg.q_max);
  if (!c.ok && !cfg.force)
    fail(ErrorCode::NotCertified, "prolongation tower needs a certified lie tableau (use --force)");
  const auto t = prolongation_tower(lt, cfg.h_max, cfg.genericity);
  Json out;
  out["lie_dim"] = t.lie_dim;
  Json levels = Json::array();
  for (const auto& l : t.levels) {
    Json x;
    x["h"] = l.h;
    x["space_dim"] = l.space_dim;
    x["configuration_dim"] = l.configuration_dim;
    x["involutive"] = l.involutive;
    if (l.characters) x["characters"] = characters_to_json(*l.characters);
    levels.push_back(x);
  }
  out["levels"] = levels;
  if (t.first_involutive) out["first_involutive"] = *t.first_involutive;
  else out["first_involutive"] = nullptr;
  r.json["tower"] = out;
  r.json["certified"] = c.ok;
  r.verified = c.ok;
  return r;
}

Report gg0_export_report(const LieTableau& lt, const RunConfig& cfg) {
  Report r{header(cfg)};
  const auto sys = gg0_coefficients(lt, cfg.genericity);
  Json out;
  out["k"] = sys.k;
  out["unknowns"] = sys.unknowns;
  out["equations"] = sys.equations;
  Json b = Json::array();
  for (const auto& m : sys.b) b.push_back(to_json(m));
  out["B"] = b;
  out["phi"] = vector_polynomial_to_json(sys.phi);
  out["phi_width"] = sys.phi.width;
  out["b_change"] = to_json(sys.b_change);
  out["a_basis"] = to_json(sys.a_basis);
  out["m_basis"] = to_json(sys.m_basis);
  out["b_prime_basis"] = to_json(sys.b_prime_basis);
  r.json["gg0"] = out;
  return r;
}

Report catalog_list_report(const RunConfig& cfg) {
  Report r{header(cfg)};
  Json entries = Json::array();
  for (const auto& name : catalog_names()) {
    const auto e = catalog_get(name);
    Json x;
    x["name"] = name;
    x["description"] = e.description;
    entries.push_back(x);
  }
  r.json["entries"] = entries;
  r.json["parametrized"] = Json::array({"full(n,s)", "so41_family(u,b1,b2)"});
  return r;
}

Report catalog_show_report(const std::string& name, const RunConfig& cfg) {
  Report r{header(cfg)};
  r.json["entry"] = catalog_entry_to_json(catalog_get(name));
  return r;
}

Report catalog_verify_report(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<std::future<EntryVerification>> jobs;
  for (const auto& name : names)
    jobs.push_back(std::async(std::launch::async, [name, &cfg] {
      return verify_entry(catalog_get(name), cfg.genericity, cfg.q_max);
    }));
  Report r{header(cfg)};
  Json entries = Json::array();
  bool all_ok = true;
  for (auto& job : jobs) {
    const auto v = job.get();
    Json x;
    x["name"] = v.name;
    x["ok"] = v.ok;
    x["certified"] = v.certification.ok;
    Json checks = Json::array();
    for (const auto& c : v.checks) {
      Json y;
      y["key"] = c.expected.key;
      y["expected"] = c.expected.value;
      y["actual"] = c.actual;
      y["origin"] = to_string(c.expected.origin);
      y["ok"] = c.ok;
      checks.push_back(y);
    }
    x["checks"] = checks;
    if (v.theorem) x["end_to_end"] = theorem_to_json(*v.theorem);
    entries.push_back(x);
    all_ok = all_ok && v.ok;
  }
  r.json["entries"] = entries;
  r.json["all_ok"] = all_ok;
  r.verified = all_ok;
  return r;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_scalar_record(const Json& j) {
  if (!j.is_object() || j.size() > 6) return false;
  for (const auto& [k, v] : j.items())
    if (!is_scalar(v)) return false;
  return true;
}

bool is_flat(const Json& j) {
  if (is_scalar(j) || is_scalar_record(j)) return true;
  if (j.is_object()) return j.empty();
  for (const auto& x : j)
    if (!is_flat(x) || x.is_object()) return false;
  return true;
}

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    std::string out;
    for (const auto& [k, v] : j.items()) out += (out.empty() ? "" : ", ") + k + "=" + inline_text(v);
    return out;
  }
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
    return out + "]";
  }
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        out << pad << k << ": " << inline_text(v) << "\n";
      } else {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        out << pad << "- " << inline_text(v) << "\n";
      } else {
        out << pad << "-\n";
        render(v, indent + 2, out);
      }
    }
  } else {
    out << pad << inline_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace tbx
