#pragma once

#include "ahrg/hecke.hpp"
#include "ahrg/rootdata.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahrg {

using Json = nlohmann::json;

/// Schema violation in a job config; the message names the offending field.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Explicit spectral datum for deltas without a one-dimensional realization.
struct ExplicitDelta {
  std::string name = "explicit";
  TorusPoint r;
  bool discrete = true;
  std::vector<std::pair<std::vector<int>, int>> stabilizer;  // (word in simple indices, k index)
};

struct JobConfig {
  CartanSpec root;
  std::string mode = "numeric";
  Rational v = 2;
  std::map<std::string, Rational> full, half;
  Rational default_full = 2, default_half = 0;
  std::vector<std::string> P;
  std::string delta;  // builtin name; empty picks every builtin (scan) or the first
  std::optional<ExplicitDelta> explicit_delta;
  std::optional<TorusPoint> t;
  std::string command;
  Json options = Json::object();
};

/// Parses and validates a config document. Unknown keys are rejected.
JobConfig parse_config(const Json& doc);

/// Rationals are JSON integers or strings "a" / "a/b".
Rational json_rational(const Json& j, const std::string& where);
Json rational_json(const Rational& q);

/// Resolves simple root names against the datum.
std::vector<int> simple_indices(const RootDatum& d, const std::vector<std::string>& names);
Parameters build_parameters(const RootDatum& d, const JobConfig& c);

}  // namespace ahrg
