#pragma once

#include "ahrg/arthur.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ahrg {

/// Outcome of one property suite: a verdict, a case count and a short summary
/// line. Failures keep the first few offending cases.
struct SuiteResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string summary;
  std::vector<std::string> failures;
  void fail(const std::string& why);
};

/// Point t of a rank one torus with t(alpha) = exp(2 pi i turn).
TorusPoint rank_one_point(const RootDatum& d, const Rational& turn);

/// Points of T^P with X^P torsion coordinates of order dividing n, lifted to X.
std::vector<TorusPoint> torsion_points(const ParabolicData& pd, int rank, int n);
/// Points of T with every coordinate of order at most n, without repeats.
std::vector<TorusPoint> torsion_points_upto(int rank, int n);

/// Everything computed for one induction datum in a scan.
struct ScanRecord {
  std::string key;  // canonical datum key, used for sorting
  std::string delta;
  TorusPoint t;
  bool nontempered = false;
  RGroupData rg;
  GramReport gram;
  bool module_ok = false;
  int commutant = -1;  // numeric mode only
  std::string error;   // non-empty when the datum could not be processed
  int rgroup_size() const { return (int)rg.rgroup.size(); }
  bool knapp_stein() const { return commutant == rgroup_size(); }
};

/// Runs rgroup (or rgroup_nontempered for non-unitary t), the Arthur Gram and,
/// in numeric mode, the commutant oracle on each datum. Work is spread over
/// `jobs` threads; the result order follows the keys, not the schedule.
std::vector<ScanRecord> scan_data(const Groupoid& G, const Parameters& q, const std::vector<SpectralDatum>& deltas,
                                  const std::vector<TorusPoint>& points, int jobs);

// Acceptance suites, one per property.
struct AnchorResult {
  int stabilizer = 0, rgroup = 0, mirrors = 0, commutant = 0;
  GramReport gram;
};
AnchorResult rank_one_anchor(const std::string& lattice, const Rational& turn);

SuiteResult knapp_stein_unitary(const std::vector<std::string>& types, int n, int jobs,
                                std::vector<ScanRecord>* keep = nullptr);
SuiteResult knapp_stein_positive_b2(int jobs, std::vector<ScanRecord>* keep = nullptr);
SuiteResult semidirect_decomposition(const std::vector<ScanRecord>& records);
SuiteResult oracle_equality(std::uint64_t seed, int count);
SuiteResult q1_isometry(const std::vector<std::string>& types, int max_order, std::vector<GramReport>* keep = nullptr);
SuiteResult radical_vanishing(const std::vector<const GramReport*>& grams);
SuiteResult gram_psd_rank(const std::vector<const GramReport*>& grams);
SuiteResult crossed_products(int max_group, int max_set);
SuiteResult morita(const std::vector<std::string>& groups);
SuiteResult algebra_soundness(const std::vector<std::string>& types, std::uint64_t seed, int triples);

}  // namespace ahrg
