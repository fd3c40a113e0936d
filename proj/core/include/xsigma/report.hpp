#pragma once

#include <string>
#include <vector>

#include "xsigma/compact.hpp"

namespace xsigma::report {

using compact::Certificate;
using compact::LabeledRay;
using compact::QFactoriality;
using compact::SigmaSet;
using compact::Timashev;
using rootsys::RootSystemPtr;
using rootsys::WeightVec;

/// Structured verdict for one (system, lambda, Sigma) input. Reducible systems
/// are handled componentwise: booleans are conjunctions, the ray list is the
/// concatenation over nonzero components, and an all-zero lambda is a point
/// (everything true, no rays).
struct DecisionReport {
  std::string type;
  WeightVec lambda;
  std::vector<WeightVec> sigma;
  std::vector<std::string> warnings;
  bool star = false;
  std::vector<WeightVec> little_brothers;
  bool normal = false;
  QFactoriality q_factorial;
  bool smooth = false;
  std::vector<LabeledRay> rays;
  Timashev timashev;
  bool with_certificates = false;
  std::vector<Certificate> certificates;
};

DecisionReport build_decision_report(const RootSystemPtr& sys, const WeightVec& lambda,
                                     const SigmaSet& sigma, bool certify);

/// Stable JSON rendering (sorted keys, fixed shapes); byte-identical across
/// runs for identical inputs.
std::string to_json_string(const DecisionReport& report, int indent = 2);

}  // namespace xsigma::report
