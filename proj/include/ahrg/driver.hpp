#pragma once

#include "ahrg/config.hpp"
#include "ahrg/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ahrg {

/// A request the chosen mode cannot serve, e.g. a numeric-only oracle in generic mode.
struct UnsupportedRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Command-line overrides applied on top of a config.
struct RunOptions {
  std::optional<std::string> mode;
  int jobs = 1;
  std::uint64_t seed = 1;
};

struct Report {
  Json json;
  std::vector<std::pair<std::string, CycMat>> grams;
  bool ok = false;
  /// Canonical text: sorted keys, two-space indent, trailing newline.
  std::string json_text() const;
  /// Gram matrices, each preceded by a "# label" line.
  std::string csv() const;
};

Report run(JobConfig config, const RunOptions& opts = {});
/// Parses a JSON document and runs it; malformed JSON raises ConfigError.
Report run_text(const std::string& text, const RunOptions& opts = {});

}  // namespace ahrg
