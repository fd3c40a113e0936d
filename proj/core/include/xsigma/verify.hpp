#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "xsigma/repthy.hpp"

namespace xsigma::verify {

struct Options {
  int max_rank = 6;
  repthy::Guards guards;
  unsigned long long seed = 0x5198ad33753100c7ull;
};

struct Item {
  int criterion;  // acceptance criterion number
  std::string name;
  bool pass;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<Item> items;

  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Tensor instances seen while a suite runs: (system name, lambda, mu).
using InstanceLog = std::set<std::tuple<std::string, std::vector<int>, std::vector<int>>>;

// Criteria 1-3: Q-factoriality dual criterion, ray formula, smoothness vs the
// Timashev conditions, over every nonempty support of the standard type list.
SuiteResult run_rays(const Options& opts);

// Criteria 4-5: non-normality certified by the tensor oracle; certificate
// chains for every dominant weight below every small (*)-compatible maximum.
SuiteResult run_normality(const Options& opts, InstanceLog* log = nullptr);

// Criterion 6: the tensor lemmas behind the induction, instance by instance.
SuiteResult run_lemmas(const Options& opts, InstanceLog* log = nullptr);

// Criterion 7: cover-closure ideals against brute force; construction and
// induction-step conclusions over the same sweep.
SuiteResult run_covers(const Options& opts, InstanceLog* log = nullptr);

// Criterion 8: Klimyk vs character brute force on the recorded instances;
// Levi-reduction and translation spot checks on seeded random instances.
SuiteResult run_consistency(const Options& opts, const InstanceLog& log);

// Criteria 1-8 in order, sharing one instance log.
std::vector<SuiteResult> run_all(const Options& opts);

}  // namespace xsigma::verify
