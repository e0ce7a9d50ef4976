#include "ahrg/config.hpp"

#include <algorithm>
#include <set>

namespace ahrg {

namespace {

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a string");
  return j.get<std::string>();
}

RatVec rational_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  RatVec out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(json_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

TorusPoint torus_point(const Json& j, const std::string& where) {
  only_keys(j, where, {"torsion", "exponent"});
  RatVec tor = j.contains("torsion") ? rational_list(j["torsion"], where + ".torsion") : RatVec{};
  RatVec ex = j.contains("exponent") ? rational_list(j["exponent"], where + ".exponent") : RatVec{};
  if (tor.empty()) tor.assign(ex.size(), 0);
  if (ex.empty()) ex.assign(tor.size(), 0);
  if (tor.size() != ex.size()) throw ConfigError(where + ": torsion and exponent lengths differ");
  return TorusPoint(tor, ex);
}

std::map<std::string, Rational> name_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object keyed by simple root names");
  std::map<std::string, Rational> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = json_rational(it.value(), where + "." + it.key());
  return out;
}

}  // namespace

Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError(where + ": cannot parse rational '" + j.get<std::string>() + "'");
    }
  }
  throw ConfigError(where + ": expected an integer or a rational string");
}

Json rational_json(const Rational& q) { return to_string(q); }

JobConfig parse_config(const Json& doc) {
  only_keys(doc, "config", {"root_datum", "parameters", "datum", "command", "options"});
  JobConfig c;
  if (!doc.contains("root_datum")) throw ConfigError("config: missing root_datum");
  const Json& rd = doc["root_datum"];
  only_keys(rd, "root_datum", {"type", "lattice", "basis"});
  if (!rd.contains("type")) throw ConfigError("root_datum: missing type");
  c.root.type = json_string(rd["type"], "root_datum.type");
  if (rd.contains("lattice")) c.root.lattice = json_string(rd["lattice"], "root_datum.lattice");
  if (rd.contains("basis")) {
    if (!rd["basis"].is_array()) throw ConfigError("root_datum.basis: expected an array of integer vectors");
    for (const auto& row : rd["basis"]) {
      IntVec v;
      if (!row.is_array()) throw ConfigError("root_datum.basis: expected an array of integer vectors");
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ConfigError("root_datum.basis: entries must be integers");
        v.push_back(x.get<std::int64_t>());
      }
      c.root.basis.push_back(v);
    }
  }

  if (doc.contains("parameters")) {
    const Json& p = doc["parameters"];
    only_keys(p, "parameters", {"mode", "v", "full", "half", "default_full", "default_half"});
    if (p.contains("mode")) c.mode = json_string(p["mode"], "parameters.mode");
    if (p.contains("v")) c.v = json_rational(p["v"], "parameters.v");
    if (p.contains("full")) c.full = name_map(p["full"], "parameters.full");
    if (p.contains("half")) c.half = name_map(p["half"], "parameters.half");
    if (p.contains("default_full")) c.default_full = json_rational(p["default_full"], "parameters.default_full");
    if (p.contains("default_half")) c.default_half = json_rational(p["default_half"], "parameters.default_half");
  }
  if (c.mode != "numeric" && c.mode != "generic") throw ConfigError("parameters.mode: expected generic or numeric");
  if (c.mode == "numeric" && c.v <= 0) throw ConfigError("parameters.v: must be positive");

  if (doc.contains("datum")) {
    const Json& d = doc["datum"];
    only_keys(d, "datum", {"P", "delta", "t"});
    if (d.contains("P")) {
      if (!d["P"].is_array()) throw ConfigError("datum.P: expected an array of simple root names");
      for (const auto& x : d["P"]) c.P.push_back(json_string(x, "datum.P"));
    }
    if (d.contains("delta")) {
      const Json& dl = d["delta"];
      if (dl.is_string()) {
        c.delta = dl.get<std::string>();
      } else {
        only_keys(dl, "datum.delta", {"name", "r", "discrete", "stabilizer"});
        ExplicitDelta e;
        if (dl.contains("name")) e.name = json_string(dl["name"], "datum.delta.name");
        if (!dl.contains("r")) throw ConfigError("datum.delta: explicit datum needs r");
        e.r = torus_point(dl["r"], "datum.delta.r");
        if (dl.contains("discrete")) {
          if (!dl["discrete"].is_boolean()) throw ConfigError("datum.delta.discrete: expected a boolean");
          e.discrete = dl["discrete"].get<bool>();
        }
        if (dl.contains("stabilizer")) {
          if (!dl["stabilizer"].is_array()) throw ConfigError("datum.delta.stabilizer: expected an array");
          for (const auto& a : dl["stabilizer"]) {
            only_keys(a, "datum.delta.stabilizer[]", {"word", "k"});
            std::vector<int> word;
            if (a.contains("word")) {
              if (!a["word"].is_array()) throw ConfigError("datum.delta.stabilizer[].word: expected an array");
              for (const auto& s : a["word"]) {
                if (!s.is_number_integer() || s.get<int>() < 1)
                  throw ConfigError("datum.delta.stabilizer[].word: entries are 1-based simple indices");
                word.push_back(s.get<int>() - 1);
              }
            }
            int k = 0;
            if (a.contains("k")) {
              if (!a["k"].is_number_integer() || a["k"].get<int>() < 0)
                throw ConfigError("datum.delta.stabilizer[].k: expected a nonnegative integer");
              k = a["k"].get<int>();
            }
            e.stabilizer.push_back({word, k});
          }
        }
        c.explicit_delta = e;
      }
    }
    if (d.contains("t")) c.t = torus_point(d["t"], "datum.t");
  }

  if (!doc.contains("command")) throw ConfigError("config: missing command");
  c.command = json_string(doc["command"], "command");
  static const std::set<std::string> commands = {"describe", "mirrors",  "rgroup",   "rgroup-nontempered",
                                                 "arthur-gram", "ell-rank", "hecke-end", "scan",
                                                 "q1-check", "crossed-check", "selftest"};
  if (!commands.count(c.command)) throw ConfigError("command: unknown command '" + c.command + "'");
  if (doc.contains("options")) {
    if (!doc["options"].is_object()) throw ConfigError("options: expected an object");
    c.options = doc["options"];
  }
  return c;
}

std::vector<int> simple_indices(const RootDatum& d, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) {
    const auto& all = d.simple_names();
    auto it = std::find(all.begin(), all.end(), n);
    if (it == all.end()) throw ConfigError("unknown simple root name '" + n + "'");
    out.push_back((int)(it - all.begin()));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError("repeated simple root in P");
  return out;
}

Parameters build_parameters(const RootDatum& d, const JobConfig& c) {
  VMode mode = c.mode == "generic" ? VMode{} : VMode::numeric(c.v);
  auto resolve = [&](const std::map<std::string, Rational>& m) {
    std::map<int, Rational> out;
    for (const auto& [name, e] : m) out[simple_indices(d, {name})[0]] = e;
    return out;
  };
  try {
    return Parameters(d, mode, resolve(c.full), resolve(c.half), c.default_full, c.default_half);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("parameters: ") + e.what());
  }
}

}  // namespace ahrg
