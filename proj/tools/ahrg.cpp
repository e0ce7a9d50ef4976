#include "ahrg/driver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) {
    std::cerr << "ahrg: cannot write " << p << "\n";
    return 2;
  }
  f << text;
  return 0;
}

// Failure reports keep the same top-level shape as successful ones.
std::string error_report(const std::string& kind, const std::string& msg) {
  ahrg::Json j = {{"ok", false}, {"error", {{"kind", kind}, {"message", msg}}}};
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic R-groups of affine Hecke algebras and the Arthur formula"};
  std::string config_path, out_path, mode;
  ahrg::RunOptions opts;
  app.add_option("--config", config_path, "JSON job config")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "report path; Gram matrices go next to it with a .csv suffix");
  app.add_option("--mode", mode, "override the parameter mode")->check(CLI::IsMember({"generic", "numeric"}));
  app.add_option("--jobs", opts.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "seed for randomized property suites");
  CLI11_PARSE(app, argc, argv);
  if (!mode.empty()) opts.mode = mode;

  std::ifstream in(config_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();

  std::string text, csv;
  int code = 0;
  try {
    ahrg::Report rep = ahrg::run_text(buf.str(), opts);
    text = rep.json_text();
    csv = rep.csv();
    code = rep.ok ? 0 : 1;
  } catch (const ahrg::ConfigError& e) {
    std::cerr << "ahrg: config error: " << e.what() << "\n";
    text = error_report("config", e.what());
    code = 2;
  } catch (const ahrg::UnsupportedRequest& e) {
    std::cerr << "ahrg: unsupported: " << e.what() << "\n";
    text = error_report("unsupported", e.what());
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "ahrg: " << e.what() << "\n";
    text = error_report("computation", e.what());
    code = 1;
  }

  if (out_path.empty()) {
    std::cout << text;
    return code;
  }
  std::filesystem::path out(out_path);
  if (int rc = write_file(out, text)) return rc;
  if (!csv.empty()) {
    std::filesystem::path gram = out;
    gram.replace_extension(".csv");
    if (int rc = write_file(gram, csv)) return rc;
  }
  return code;
}
