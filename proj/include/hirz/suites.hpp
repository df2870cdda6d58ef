#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hirz/series.hpp"

namespace hirz {

struct Check {
  std::string identity;
  bool pass = false;
  std::string detail;  // both sides when the identity fails
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;
};

using SeriesProvider = std::function<ChernRootSeries(SeriesKind, int)>;

struct SuiteOptions {
  int order = 8;  // truncation order of the series compared in series-limits
  SeriesProvider series = genus_series;
};

/// ghrr, series-limits, multiplicativity, vrr, updown, duality, chern-limit, arrangements,
/// integrality
const std::vector<std::string>& suite_names();

/// Throws InvalidParameter for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});
std::vector<SuiteResult> run_all(const SuiteOptions& options = {});

}  // namespace hirz
