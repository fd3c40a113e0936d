#include "xsigma/report.hpp"

#include <json.hpp>

#include "xsigma/orderchain.hpp"

namespace xsigma::report {

using compact::RayKind;
using nlohmann::json;
using rootsys::RootSystem;

DecisionReport build_decision_report(const RootSystemPtr& sys, const WeightVec& lambda,
                                     const SigmaSet& sigma, bool certify) {
  DecisionReport out;
  out.type = sys->name();
  out.lambda = lambda;
  out.sigma = sigma.weights;
  out.warnings = compact::sigma_warnings(sigma);
  out.star = compact::satisfies_star(lambda);
  out.little_brothers = compact::little_brothers(lambda);
  out.normal = compact::normality_decide(sigma);

  compact::Smoothness smooth = compact::is_smooth(sigma);
  out.smooth = smooth.value;

  // cone data per irreducible component; a zero restriction is a point
  bool any_de = false;
  bool any_nonzero = false;
  bool all_ii = true;
  out.q_factorial = {true, true, true, std::nullopt};
  out.timashev = {true, true, std::nullopt};
  bool qf_iii = true;
  bool tim_iii = true;
  bool tim_iii_defined = false;
  for (const auto& comp : sys->components()) {
    std::vector<int> coords(lambda.coords.begin() + comp.offset,
                            lambda.coords.begin() + comp.offset + comp.rank);
    auto sub = RootSystem::assemble({{comp.letter, comp.rank}});
    WeightVec restricted = sub->weight(std::move(coords));
    if (restricted.is_zero()) continue;
    any_nonzero = true;

    auto qf = compact::is_q_factorial(restricted);
    out.q_factorial.value &= qf.value;
    out.q_factorial.i &= qf.i;
    out.q_factorial.ii &= qf.ii;
    if (qf.iii.has_value()) {
      any_de = true;
      qf_iii &= *qf.iii;
    }

    auto tim = compact::timashev_check(restricted);
    out.timashev.i &= tim.i;
    out.timashev.ii &= tim.ii;
    all_ii &= tim.ii;
    if (tim.iii.has_value()) {
      tim_iii_defined = true;
      tim_iii &= *tim.iii;
    }

    for (const auto& ray : compact::extremal_rays(restricted))
      out.rays.push_back({ray.kind, ray.index + comp.offset});
  }
  if (!any_nonzero) {
    // lambda = 0: the compactification is a point
    out.q_factorial = {true, true, true, std::nullopt};
    out.timashev = {true, true, true};
    out.smooth = true;
  } else {
    out.q_factorial.iii = any_de ? std::optional<bool>(qf_iii) : std::nullopt;
    out.q_factorial.value &= qf_iii;
    if (all_ii)
      out.timashev.iii = tim_iii_defined ? tim_iii : true;
    else
      out.timashev.iii = std::nullopt;
  }

  if (certify && out.normal) {
    out.with_certificates = true;
    for (const auto& mu : orderchain::dominant_ideal(lambda))
      out.certificates.push_back(compact::normality_certificate(sigma, mu));
  }
  return out;
}

namespace {

json weight_json(const WeightVec& w) {
  json arr = json::array();
  for (int c : w.coords) arr.push_back(c);
  return arr;
}

json weights_json(const std::vector<WeightVec>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(weight_json(w));
  return arr;
}

}  // namespace

std::string to_json_string(const DecisionReport& r, int indent) {
  json j;
  j["type"] = r.type;
  j["lambda"] = weight_json(r.lambda);
  j["sigma"] = weights_json(r.sigma);
  j["star"] = r.star;
  j["little_brothers"] = weights_json(r.little_brothers);
  j["normal"] = r.normal;
  j["q_factorial"] = {{"value", r.q_factorial.value},
                      {"i", r.q_factorial.i},
                      {"ii", r.q_factorial.ii},
                      {"iii", r.q_factorial.iii.has_value() ? json(*r.q_factorial.iii) : json()}};
  j["smooth"] = r.smooth;
  {
    json arr = json::array();
    for (const auto& ray : r.rays)
      arr.push_back({{"kind", ray.kind == RayKind::Coroot ? "coroot" : "neg_coweight"},
                     {"index", ray.index + 1}});
    j["extremal_rays"] = arr;
  }
  j["timashev"] = {{"i", r.timashev.i},
                   {"ii", r.timashev.ii},
                   {"iii", r.timashev.iii.has_value() ? json(*r.timashev.iii) : json()}};
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (r.with_certificates) {
    json arr = json::array();
    for (const auto& cert : r.certificates) {
      json steps = json::array();
      for (const auto& s : cert.steps)
        steps.push_back({{"mu", weight_json(s.mu_from)},
                         {"mu_prime", weight_json(s.mu_to)},
                         {"lambda_prime", weight_json(s.lambda_used)}});
      arr.push_back({{"mu", weight_json(cert.mu)},
                     {"n", cert.n},
                     {"factors", weights_json(cert.factors)},
                     {"steps", steps}});
    }
    j["certificates"] = arr;
  }
  return j.dump(indent) + "\n";
}

}  // namespace xsigma::report
