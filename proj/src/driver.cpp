#include "ahrg/driver.hpp"

#include "ahrg/suites.hpp"

#include <memory>
#include <set>
#include <sstream>

namespace ahrg {

namespace {

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json torus_json(const TorusPoint& t) {
  Json tor = Json::array(), ex = Json::array();
  for (const auto& x : t.torsion) tor.push_back(rational_json(x));
  for (const auto& x : t.exponent) ex.push_back(rational_json(x));
  return {{"torsion", tor}, {"exponent", ex}};
}

Json phase_json(const PhaseMonomial& m) { return {{"turn", rational_json(m.turn)}, {"vexp", rational_json(m.vexp)}}; }

Json matrix_json(const CycMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

int opt_int(const Json& o, const char* key, int dflt, int lo = 1) {
  if (!o.contains(key)) return dflt;
  if (!o[key].is_number_integer() || o[key].get<long>() < lo)
    throw ConfigError(std::string("options.") + key + ": expected an integer >= " + std::to_string(lo));
  return o[key].get<int>();
}

bool opt_bool(const Json& o, const char* key, bool dflt) {
  if (!o.contains(key)) return dflt;
  if (!o[key].is_boolean()) throw ConfigError(std::string("options.") + key + ": expected a boolean");
  return o[key].get<bool>();
}

Cyclotomic cyclotomic_value(const Json& j, const std::string& where) {
  // A rational, or a list of [coefficient, turn] pairs meaning sum c exp(2 pi i turn).
  if (!j.is_array()) return Cyclotomic(json_rational(j, where));
  Cyclotomic s;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ConfigError(where + ": expected [coefficient, turn] pairs");
    s += Cyclotomic(json_rational(term[0], where)) * Cyclotomic::root_of_unity(json_rational(term[1], where));
  }
  return s;
}

/// Everything derived from the config that commands share. Heap-held so the
/// internal pointers (WeylGroup -> RootDatum, Groupoid -> WeylGroup) stay valid.
struct Context {
  JobConfig cfg;
  RunOptions opts;
  std::unique_ptr<RootDatum> d;
  std::unique_ptr<WeylGroup> W;
  std::unique_ptr<Parameters> q;
  std::vector<int> P;
  std::unique_ptr<Groupoid> G;
  std::unique_ptr<HeckeAlgebra> H;
  std::vector<SpectralDatum> deltas;  // selected deltas
  TorusPoint t;

  Context(JobConfig c, const RunOptions& o) : cfg(std::move(c)), opts(o) {
    if (opts.mode) {
      if (*opts.mode != "generic" && *opts.mode != "numeric") throw ConfigError("--mode: expected generic or numeric");
      cfg.mode = *opts.mode;
    }
    try {
      d = std::make_unique<RootDatum>(RootDatum::build(cfg.root));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("root_datum: ") + e.what());
    }
    std::size_t bound = (std::size_t)opt_int(cfg.options, "max_weyl_order", 100000);
    W = std::make_unique<WeylGroup>(*d, bound);
    q = std::make_unique<Parameters>(build_parameters(*d, cfg));
    P = simple_indices(*d, cfg.P);
    G = std::make_unique<Groupoid>(*W, P);
    H = std::make_unique<HeckeAlgebra>(*W, *q);
    t = cfg.t ? *cfg.t : TorusPoint(d->rank());
    if (t.rank() != d->rank()) throw ConfigError("datum.t: expected " + std::to_string(d->rank()) + " coordinates");
    if (cfg.explicit_delta) {
      const auto& e = *cfg.explicit_delta;
      if (e.r.rank() != d->rank()) throw ConfigError("datum.delta.r: expected " + std::to_string(d->rank()) + " coordinates");
      SpectralDatum sd;
      sd.P = P;
      sd.name = e.name;
      sd.r = e.r;
      sd.discrete = e.discrete;
      for (const auto& [word, k] : e.stabilizer) {
        int w = 0;
        for (int s : word) {
          if (s >= d->semisimple_rank()) throw ConfigError("datum.delta.stabilizer: simple index out of range");
          w = W->mul(w, W->simple_reflection(s));
        }
        if (k >= (int)G->K().elements.size()) throw ConfigError("datum.delta.stabilizer: k index out of range");
        sd.declared_stabilizer.push_back(Arrow{w, k});
      }
      deltas.push_back(sd);
    } else {
      auto all = one_dim_reps(*H, G->parabolic());
      for (auto& sd : all)
        if (cfg.delta.empty() || sd.name == cfg.delta) deltas.push_back(sd);
      if (deltas.empty()) {
        std::string names;
        for (auto& sd : all) names += " " + sd.name;
        throw ConfigError("datum.delta: no builtin datum named '" + cfg.delta + "'; available:" + names);
      }
    }
  }

  const SpectralDatum& delta() const { return deltas.front(); }
  bool numeric() const { return !q->mode().generic(); }

  Json arrow_json(const Arrow& a) const {
    Json word = Json::array();
    for (int s : W->word(a.w)) word.push_back(d->simple_names()[s]);
    return {{"word", word}, {"k", a.k}, {"k_point", torus_json(G->K().elements[a.k])}};
  }
  Json arrows_json(const std::vector<Arrow>& as) const {
    Json out = Json::array();
    for (const auto& a : as) out.push_back(arrow_json(a));
    return out;
  }
  Json mirror_json(const Mirror& m) const {
    return {{"alpha_Q", vec_json(d->root(m.alpha_Q))},
            {"gamma", vec_json(m.gamma)},
            {"z0", phase_json(m.z0)},
            {"order", m.order}};
  }
  Json datum_json(const SpectralDatum& sd, const TorusPoint& x) const {
    Json Pn = Json::array();
    for (int k : P) Pn.push_back(d->simple_names()[k]);
    return {{"P", Pn},
            {"delta", sd.name},
            {"central_character", torus_json(sd.r)},
            {"t", torus_json(x)},
            {"position", to_string(classify_position(*d, P, x))}};
  }

  RGroupData rgroup_for(const TorusPoint& x) const {
    InductionDatum xi{P, delta(), x};
    return classify_position(*d, P, x) == DatumPosition::unitary ? rgroup(*G, *q, xi)
                                                                 : rgroup_nontempered(*G, *q, xi);
  }

  Json rgroup_json(const RGroupData& R) const {
    Json roots = Json::array();
    for (const auto& g : R.roots_pos) roots.push_back(vec_json(g));
    Json mir = Json::array();
    for (const auto& m : R.mirrors_xi) mir.push_back(mirror_json(m));
    return {{"datum", datum_json(R.xi.delta, R.xi.t)},
            {"nontempered", R.nontempered},
            {"stabilizer", arrows_json(R.stabilizer)},
            {"stabilizer_order", R.stabilizer.size()},
            {"mirrors", mir},
            {"roots_positive", roots},
            {"reflections", arrows_json(R.reflections)},
            {"weyl_R_order", R.weyl_R.size()},
            {"rgroup", arrows_json(R.rgroup)},
            {"rgroup_order", R.rgroup.size()},
            {"transitivity_checked", R.transitivity_checked},
            {"flags", R.flags}};
  }
};

void rgroup_checks(const RGroupData& R, Json& checks) {
  checks["unique_factorization"] = R.unique_factorization;
  checks["normal"] = R.normal;
  checks["root_system"] = R.root_system;
  checks["simply_transitive"] = R.simply_transitive;
  if (R.nontempered) checks["mirror_rules_agree"] = R.mirror_rules_agree;
}

Json gram_json(const GramReport& g) {
  Json deg = Json::array();
  for (const auto& x : g.degrees) deg.push_back(x.str());
  return {{"label", g.label},
          {"rgroup_order", g.rgroup_order},
          {"rows", g.row_names},
          {"degrees", deg},
          {"gram", matrix_json(g.gram)},
          {"rank", g.rank},
          {"elliptic_classes", g.elliptic_classes},
          {"twisted", g.twisted},
          {"experimental", g.experimental}};
}

void gram_checks(const GramReport& g, Json& checks) {
  checks["hermitian"] = g.hermitian;
  checks["psd"] = g.psd;
  checks["induced_vanishing"] = g.induced_vanishing;
  if (!g.twisted) {
    checks["rank_matches_elliptic_classes"] = g.rank_matches;
    checks["koszul_agrees"] = g.koszul_agrees;
  }
}

Json suite_json(const SuiteResult& s) {
  return {{"passed", s.passed}, {"cases", s.cases}, {"summary", s.summary}, {"failures", s.failures}};
}

// ---------------------------------------------------------------- commands

void cmd_describe(Context& c, Report& rep, Json& res, Json& checks) {
  (void)rep;
  const RootDatum& d = *c.d;
  Json roots = Json::array(), coroots = Json::array(), simple = Json::array();
  for (int i = 0; i < d.nroots(); ++i) {
    roots.push_back(vec_json(d.root(i)));
    coroots.push_back(vec_json(d.coroot(i)));
  }
  for (int k = 0; k < d.semisimple_rank(); ++k) {
    int s = d.simple_root(k);
    simple.push_back({{"name", d.simple_names()[k]},
                      {"root", vec_json(d.root(s))},
                      {"coroot", vec_json(d.coroot(s))},
                      {"q_s_exponent", rational_json(c.q->qs_exp(s))},
                      {"q_s_prime_exponent", rational_json(c.q->qs_prime_exp(s))},
                      {"coroot_in_2Y", d.coroot_in_2Y(s)}});
  }
  res = {{"label", d.label()},
         {"rank", d.rank()},
         {"semisimple_rank", d.semisimple_rank()},
         {"nroots", d.nroots()},
         {"npositive", d.npos()},
         {"roots", roots},
         {"coroots", coroots},
         {"simple", simple},
         {"weyl_order", c.W->order()}};
  bool valid = true;
  try {
    d.validate();
  } catch (const std::exception&) {
    valid = false;
  }
  checks["root_datum_valid"] = valid;
}

void cmd_mirrors(Context& c, Report&, Json& res, Json& checks) {
  MirrorSet ms = mirrors(*c.W, *c.q, c.G->parabolic(), c.delta());
  Json fns = Json::array(), mir = Json::array();
  for (const auto& f : ms.functions) {
    Json canc = Json::array();
    for (const auto& z : f.cancelled) canc.push_back(phase_json(z));
    fns.push_back({{"alpha_Q", vec_json(c.d->root(f.Q.alpha_Q))},
                   {"gamma", vec_json(f.gamma)},
                   {"c", f.c.str()},
                   {"cancelled", canc}});
  }
  for (const auto& m : ms.mirrors) mir.push_back(c.mirror_json(m));
  res = {{"datum", c.datum_json(c.delta(), c.t)}, {"functions", fns}, {"mirrors", mir}, {"flags", ms.flags}};
  checks["computed"] = true;
}

void cmd_rgroup(Context& c, Report&, Json& res, Json& checks, bool nontempered) {
  InductionDatum xi{c.P, c.delta(), c.t};
  RGroupData R = nontempered ? rgroup_nontempered(*c.G, *c.q, xi) : rgroup(*c.G, *c.q, xi);
  res = c.rgroup_json(R);
  rgroup_checks(R, checks);
}

GramReport gram_for(Context& c, const RGroupData& R) {
  if (!c.cfg.options.contains("twisted")) return arthur_gram(*c.G, R);
  const Json& tw = c.cfg.options["twisted"];
  if (!tw.is_array()) throw ConfigError("options.twisted: expected an array of rows");
  TwistedTable T;
  for (const auto& row : tw) {
    if (!row.is_object() || !row.contains("values")) throw ConfigError("options.twisted[]: rows need values");
    T.names.push_back(row.value("name", "row" + std::to_string(T.names.size())));
    T.cocycle.push_back(row.value("cocycle", "trivial"));
    std::vector<Cyclotomic> vals;
    for (const auto& v : row["values"]) vals.push_back(cyclotomic_value(v, "options.twisted[].values"));
    T.values.push_back(vals);
  }
  return arthur_gram(*c.G, R, &T);
}

void cmd_arthur_gram(Context& c, Report& rep, Json& res, Json& checks) {
  RGroupData R = c.rgroup_for(c.t);
  GramReport g = gram_for(c, R);
  res = gram_json(g);
  res["datum"] = c.datum_json(c.delta(), c.t);
  gram_checks(g, checks);
  rep.grams.push_back({g.label, g.gram});
}

void cmd_ell_rank(Context& c, Report&, Json& res, Json& checks) {
  RGroupData R = c.rgroup_for(c.t);
  GramReport g = arthur_gram(*c.G, R);
  res = {{"datum", c.datum_json(c.delta(), c.t)},
         {"rank", ell_rank(g)},
         {"elliptic_classes", g.elliptic_classes},
         {"rgroup_order", g.rgroup_order}};
  checks["rank_matches_elliptic_classes"] = g.rank_matches;
}

void cmd_hecke_end(Context& c, Report&, Json& res, Json& checks) {
  if (!c.numeric()) throw UnsupportedRequest("hecke-end: the commutant oracle needs numeric mode");
  if (!c.delta().realized()) throw UnsupportedRequest("hecke-end: delta has no realization to induce from");
  HeckeModule m = induced_module(*c.H, c.G->parabolic(), c.delta(), c.t);
  ModuleChecks mc = check_module(*c.H, c.G->parabolic(), c.delta(), c.t, m);
  int comm = commutant_dim(*c.H, m);
  res = {{"datum", c.datum_json(c.delta(), c.t)}, {"dim", m.dim()}, {"commutant_dim", comm}};
  checks["quadratic"] = mc.quadratic;
  checks["braid"] = mc.braid;
  checks["theta_commute"] = mc.theta_commute;
  checks["cross_relation"] = mc.cross;
  checks["center"] = mc.center;
  if (classify_position(*c.d, c.P, c.t) != DatumPosition::general) {
    RGroupData R = c.rgroup_for(c.t);
    res["rgroup_order"] = R.rgroup.size();
    checks["commutant_equals_rgroup_order"] = comm == (int)R.rgroup.size();
  }
}

void cmd_scan(Context& c, Report& rep, Json& res, Json& checks) {
  const int n = opt_int(c.cfg.options, "order", 6);
  const int max_order = opt_int(c.cfg.options, "max_order", 12);
  const int max_rank = opt_int(c.cfg.options, "max_rank", 4);
  if (n > max_order) throw ConfigError("options.order exceeds max_order " + std::to_string(max_order));
  if (c.d->rank() > max_rank) throw ConfigError("scan: rank exceeds max_rank " + std::to_string(max_rank));
  auto pts = torsion_points(c.G->parabolic(), c.d->rank(), n);
  auto recs = scan_data(*c.G, *c.q, c.deltas, pts, c.opts.jobs);
  Json rows = Json::array();
  bool all_ok = true, decomp = true, ks = true, psd = true, radical = true;
  for (const auto& r : recs) {
    Json row = {{"key", r.key}, {"delta", r.delta}, {"t", torus_json(r.t)}};
    if (!r.error.empty()) {
      row["error"] = r.error;
      all_ok = false;
    } else {
      row["stabilizer_order"] = r.rg.stabilizer.size();
      row["mirrors"] = r.rg.mirrors_xi.size();
      row["rgroup_order"] = r.rgroup_size();
      row["weyl_R_order"] = r.rg.weyl_R.size();
      row["gram_rank"] = r.gram.rank;
      row["elliptic_classes"] = r.gram.elliptic_classes;
      row["decomposition_ok"] = r.rg.ok();
      row["module_ok"] = r.module_ok;
      decomp = decomp && r.rg.ok();
      psd = psd && r.gram.hermitian && r.gram.psd && r.gram.rank_matches;
      radical = radical && r.gram.induced_vanishing;
      if (c.numeric() && c.delta().realized()) {
        row["commutant_dim"] = r.commutant;
        ks = ks && r.module_ok && r.knapp_stein();
      }
      rep.grams.push_back({r.key, r.gram.gram});
    }
    rows.push_back(row);
  }
  res = {{"order", n}, {"count", recs.size()}, {"data", rows}};
  checks["all_processed"] = all_ok;
  checks["semidirect_decomposition"] = decomp;
  checks["gram_psd_rank"] = psd;
  checks["gram_radical"] = radical;
  if (c.numeric()) checks["commutant_equals_rgroup_order"] = ks;
}

void cmd_q1(Context& c, Report& rep, Json& res, Json& checks) {
  std::vector<TorusPoint> pts;
  if (c.cfg.t) pts.push_back(c.t);
  else pts = torsion_points_upto(c.d->rank(), opt_int(c.cfg.options, "max_order", 6));
  Json rows = Json::array();
  bool matched = true, equal = true;
  for (const auto& x : pts) {
    Q1Report r = q1_isometry_check(*c.W, x);
    matched = matched && r.rows_matched;
    equal = equal && r.equal;
    rows.push_back({{"t", torus_json(x)},
                    {"rgroup_order", r.gram.rgroup_order},
                    {"rank", r.rank},
                    {"rows_matched", r.rows_matched},
                    {"equal", r.equal}});
    rep.grams.push_back({"q1 " + x.str(), r.arthur});
  }
  res = {{"points", rows}, {"count", pts.size()}};
  checks["rows_matched"] = matched;
  checks["gram_equals_stabilizer_gram"] = equal;
}

void cmd_crossed(Context& c, Report&, Json& res, Json& checks) {
  SuiteResult cp = crossed_products(opt_int(c.cfg.options, "max_group", 8), opt_int(c.cfg.options, "max_set", 6));
  std::vector<std::string> groups = {"S3", "Z3"};
  if (c.cfg.options.contains("morita")) groups = c.cfg.options["morita"].get<std::vector<std::string>>();
  SuiteResult mo = morita(groups);
  res = {{"crossed_product", suite_json(cp)}, {"morita", suite_json(mo)}};
  checks["crossed_product"] = cp.passed;
  checks["morita"] = mo.passed;
}

void cmd_selftest(Context& c, Report& rep, Json& res, Json& checks) {
  (void)rep;
  const bool quick = opt_bool(c.cfg.options, "quick", false);
  const std::uint64_t seed = c.opts.seed;
  std::vector<SuiteResult> suites;
  std::vector<ScanRecord> recs;
  std::vector<std::string> scan_types = quick ? std::vector<std::string>{"A1", "A2"}
                                              : std::vector<std::string>{"A1", "A1xA1", "A2", "B2", "G2"};
  suites.push_back(knapp_stein_unitary(scan_types, quick ? 2 : 6, c.opts.jobs, &recs));
  suites.push_back(knapp_stein_positive_b2(c.opts.jobs, &recs));
  suites.push_back(semidirect_decomposition(recs));
  suites.push_back(oracle_equality(seed, quick ? 100 : 500));
  std::vector<GramReport> q1;
  suites.push_back(q1_isometry(quick ? std::vector<std::string>{"A2"} : std::vector<std::string>{"A2", "B2", "G2"},
                               quick ? 3 : 6, &q1));
  std::vector<const GramReport*> grams;
  for (const auto& r : recs)
    if (r.error.empty()) grams.push_back(&r.gram);
  for (const auto& g : q1) grams.push_back(&g);
  suites.push_back(radical_vanishing(grams));
  suites.push_back(gram_psd_rank(grams));
  suites.push_back(crossed_products(quick ? 4 : 8, quick ? 4 : 6));
  suites.push_back(morita({"S3", "Z3"}));
  suites.push_back(algebra_soundness({"A1", "A2", "B2"}, seed, quick ? 50 : 500));
  res = Json::object();
  for (const auto& s : suites) {
    res[s.name] = suite_json(s);
    checks[s.name] = s.passed;
  }
}

}  // namespace

std::string Report::json_text() const { return json.dump(2) + "\n"; }

std::string Report::csv() const {
  std::ostringstream os;
  for (const auto& [label, m] : grams) {
    os << "# " << label << "\n";
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j).str();
      os << "\n";
    }
  }
  return os.str();
}

Report run(JobConfig config, const RunOptions& opts) {
  if (opts.jobs < 1) throw ConfigError("--jobs: expected a positive integer");
  Context c(std::move(config), opts);
  Report rep;
  Json res, checks = Json::object();
  const std::string& cmd = c.cfg.command;
  if (cmd == "describe") cmd_describe(c, rep, res, checks);
  else if (cmd == "mirrors") cmd_mirrors(c, rep, res, checks);
  else if (cmd == "rgroup") cmd_rgroup(c, rep, res, checks, false);
  else if (cmd == "rgroup-nontempered") cmd_rgroup(c, rep, res, checks, true);
  else if (cmd == "arthur-gram") cmd_arthur_gram(c, rep, res, checks);
  else if (cmd == "ell-rank") cmd_ell_rank(c, rep, res, checks);
  else if (cmd == "hecke-end") cmd_hecke_end(c, rep, res, checks);
  else if (cmd == "scan") cmd_scan(c, rep, res, checks);
  else if (cmd == "q1-check") cmd_q1(c, rep, res, checks);
  else if (cmd == "crossed-check") cmd_crossed(c, rep, res, checks);
  else if (cmd == "selftest") cmd_selftest(c, rep, res, checks);
  else throw ConfigError("command: unknown command '" + cmd + "'");
  rep.ok = true;
  for (auto it = checks.begin(); it != checks.end(); ++it) rep.ok = rep.ok && it.value().get<bool>();
  rep.json = {{"command", cmd},
              {"root_datum", {{"type", c.cfg.root.type}, {"lattice", c.cfg.root.lattice}}},
              {"mode", c.cfg.mode},
              {"result", res},
              {"checks", checks},
              {"ok", rep.ok}};
  if (c.numeric()) rep.json["v"] = rational_json(c.cfg.v);
  return rep;
}

Report run_text(const std::string& text, const RunOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return run(parse_config(doc), opts);
}

}  // namespace ahrg
