#include "xsigma/orderchain.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xsigma/compact.hpp"

namespace xsigma::orderchain {

using rootsys::RootSystem;

namespace {

void require_dominant_pair(const WeightVec& lambda, const WeightVec& mu, const char* who) {
  XSIGMA_CHECK(lambda.sys == mu.sys);
  if (!lambda.dominant() || !mu.dominant())
    throw PreconditionError(std::string(who) + ": weights must be dominant");
}

/// lambda - mu as an integer root vector; throws unless mu <= lambda.
std::vector<int> difference_coords(const WeightVec& lambda, const WeightVec& mu, const char* who) {
  RootVec diff = rootsys::to_root_basis(lambda - mu);
  if (!diff.is_natural())
    throw PreconditionError(std::string(who) + ": " + mu.str() + " is not below " + lambda.str());
  return diff.integer_coords();
}

WeightVec add_root_vector(const WeightVec& base, const RootVec& rv) {
  auto wc = rootsys::to_weight_coords(rv);
  WeightVec out = base;
  for (int i = 0; i < out.rank(); ++i) out.coords[i] += static_cast<int>(wc[i].as_integer());
  return out;
}

}  // namespace

std::optional<CoverStep> stembridge_step(const WeightVec& lambda, const WeightVec& mu,
                                         const SimpleSubset& K) {
  require_dominant_pair(lambda, mu, "stembridge_step");
  if (lambda == mu) throw PreconditionError("stembridge_step: lambda > mu required");
  auto diff = difference_coords(lambda, mu, "stembridge_step");

  const RootSystem& sys = *lambda.sys;
  SimpleSubset I{lambda.sys, 0};
  for (int i = 0; i < sys.rank(); ++i)
    if (diff[i] != 0) I.add(i);
  if (K.empty() || (K.bits & ~I.bits) != 0)
    throw PreconditionError("stembridge_step: K must lie inside Supp_D(lambda-mu)");
  if (!rootsys::is_connected(K))
    throw PreconditionError("stembridge_step: K must be connected");

  // (a) the K-restricted difference pairs nonnegatively on K cap Supp(mu)
  std::vector<int> restricted(sys.rank(), 0);
  for (int i : K.members()) restricted[i] = diff[i];
  auto restricted_wc = rootsys::weight_coords_of_root(sys, restricted);
  for (int i : K.members())
    if (mu.coords[i] != 0 && restricted_wc[i] < 0) return std::nullopt;

  RootVec eta = rootsys::highest_short_root(K);
  WeightVec result = add_root_vector(mu, eta);

  // (a) guarantees result <= lambda; keep it as a hard consistency check
  XSIGMA_CHECK(rootsys::dominance_leq(result, lambda));

  // (b) dominance against the rest of the difference support
  for (int i : I.members())
    if (!K.contains(i) && result.coords[i] < 0) return std::nullopt;
  XSIGMA_CHECK(result.dominant());

  return CoverStep{mu, K, result};
}

SimpleSubset construct_k(const WeightVec& lambda, const WeightVec& mu) {
  require_dominant_pair(lambda, mu, "construct_k");
  const RootSystem& sys = *lambda.sys;
  if (!sys.irreducible()) throw PreconditionError("construct_k: system must be irreducible");
  if (lambda == mu) throw PreconditionError("construct_k: lambda > mu required");
  auto diff = difference_coords(lambda, mu, "construct_k");
  for (int i = 0; i < sys.rank(); ++i)
    if (diff[i] == 0)
      throw PreconditionError("construct_k: Supp_D(lambda-mu) must be all of Delta");

  const bool simply_laced = sys.components()[0].simply_laced();
  WeightVec gap = lambda - mu;  // pairing coordinates of the difference

  int qualifying_short = -1;
  if (!simply_laced) {
    for (int i = 0; i < sys.rank(); ++i)
      if (sys.is_short(i) && lambda.coords[i] != 0 && gap.coords[i] >= 0) {
        qualifying_short = i;
        break;
      }
  }
  int alpha_s = simply_laced ? -1 : compact::short_long_junction(sys.all());
  if (!simply_laced && qualifying_short < 0 && mu.coords[alpha_s] != 0)
    throw PreconditionError(
        "construct_k: need simply laced, or a short support root pairing >= 0, or alpha_S "
        "outside Supp(mu)");

  SimpleSubset k1{lambda.sys, 0};
  for (int i = 0; i < sys.rank(); ++i)
    if (gap.coords[i] >= 0) k1.add(i);
  XSIGMA_CHECK(!k1.empty());

  SimpleSubset chosen{lambda.sys, 0};
  if (qualifying_short >= 0) {
    for (const auto& comp : rootsys::components(k1))
      if (comp.contains(qualifying_short)) chosen = comp;
  } else {
    // smallest-index component of K1 meeting Supp(lambda)
    for (const auto& comp : rootsys::components(k1)) {
      bool meets = false;
      for (int i : comp.members()) meets |= lambda.coords[i] != 0;
      if (meets) {
        chosen = comp;
        break;
      }
    }
  }
  XSIGMA_CHECK(!chosen.empty());

  // the three conclusions of the construction
  WeightVec stepped = add_root_vector(mu, rootsys::highest_short_root(chosen));
  XSIGMA_CHECK(rootsys::dominance_leq(stepped, lambda));
  XSIGMA_CHECK(stepped.dominant());
  XSIGMA_CHECK([&] {
    for (int i : chosen.members())
      if (lambda.coords[i] != 0) return true;
    return false;
  }());
  return chosen;
}

InductionStep induction_step(const WeightVec& lambda, const WeightVec& mu) {
  require_dominant_pair(lambda, mu, "induction_step");
  const RootSystem& sys = *lambda.sys;
  if (!sys.irreducible()) throw PreconditionError("induction_step: system must be irreducible");
  if (lambda == mu) throw PreconditionError("induction_step: lambda > mu required");
  auto diff = difference_coords(lambda, mu, "induction_step");
  for (int i = 0; i < sys.rank(); ++i)
    if (diff[i] == 0)
      throw PreconditionError("induction_step: Supp_D(lambda-mu) must be all of Delta");

  const bool simply_laced = sys.components()[0].simply_laced();
  WeightVec gap = lambda - mu;
  bool has_qualifying_short = false;
  int alpha_s = -1;
  if (!simply_laced) {
    alpha_s = compact::short_long_junction(sys.all());
    for (int i = 0; i < sys.rank() && !has_qualifying_short; ++i)
      has_qualifying_short = sys.is_short(i) && lambda.coords[i] != 0 && gap.coords[i] >= 0;
  }

  InductionStep out{lambda, lambda, RootVec{}, RootVec{}, false, SimpleSubset{lambda.sys, 0}};

  if (simply_laced || has_qualifying_short || mu.coords[alpha_s] == 0) {
    SimpleSubset K = construct_k(lambda, mu);
    out.K = K;
    out.added = rootsys::highest_short_root(K);
    out.mu_prime = add_root_vector(mu, out.added);
    if (compact::satisfies_star_k(lambda, K)) {
      out.lambda_prime = lambda;
      out.removed = sys.root_vec(std::vector<Rat>(sys.rank(), Rat(0)));
    } else {
      auto delta = compact::little_brother_delta(lambda, K);
      XSIGMA_CHECK(delta.has_value());
      out.removed = *delta;
      out.lambda_prime = add_root_vector(lambda, RootVec{lambda.sys, [&] {
                                            auto c = delta->coords;
                                            for (auto& x : c) x = -x;
                                            return c;
                                          }()});
    }
  } else {
    // mu' = mu + zeta, the sum of all simple roots
    out.second_branch = true;
    out.K = sys.all();
    out.added = sys.root_vec(std::vector<Rat>(sys.rank(), Rat(1)));
    out.mu_prime = add_root_vector(mu, out.added);
    char letter = sys.components()[0].letter;
    bool star = compact::satisfies_star(lambda);
    bool lb_route = false;
    switch (letter) {
      case 'B':
        lb_route = !star;
        break;
      case 'C':
      case 'F': {
        bool long_support = false;
        for (int i = 0; i < sys.rank(); ++i)
          long_support |= !sys.is_short(i) && lambda.coords[i] != 0;
        XSIGMA_CHECK(long_support);
        lb_route = false;
        break;
      }
      case 'G':
        lb_route = lambda.coords[alpha_s] == 0;
        break;
      default:
        throw InternalError("induction_step: simply laced type in the zeta branch");
    }
    if (lb_route) {
      auto delta = compact::little_brother_delta(lambda, sys.all());
      XSIGMA_CHECK(delta.has_value());
      out.removed = *delta;
      out.lambda_prime = add_root_vector(lambda, RootVec{lambda.sys, [&] {
                                            auto c = delta->coords;
                                            for (auto& x : c) x = -x;
                                            return c;
                                          }()});
    } else {
      out.lambda_prime = lambda;
      out.removed = sys.root_vec(std::vector<Rat>(sys.rank(), Rat(0)));
    }
  }

  // conclusions of the step
  XSIGMA_CHECK(out.mu_prime.dominant());
  XSIGMA_CHECK(rootsys::dominance_leq(out.mu_prime, lambda));
  XSIGMA_CHECK(out.mu_prime != mu && rootsys::dominance_leq(mu, out.mu_prime));
  XSIGMA_CHECK([&] {
    if (out.lambda_prime == lambda) return true;
    auto lbs = compact::little_brothers(lambda);
    return std::find(lbs.begin(), lbs.end(), out.lambda_prime) != lbs.end();
  }());
  return out;
}

std::vector<WeightVec> dominant_ideal(const WeightVec& lambda) {
  if (!lambda.dominant()) throw PreconditionError("dominant_ideal requires a dominant weight");
  const RootSystem& sys = *lambda.sys;

  // Downward steps: eta_K for every connected subset, plus zeta_K (the sum of
  // the simple roots of K) when Phi_K is not simply laced. The induction that
  // walks any dominant mu < lambda back up to lambda moves by exactly these
  // vectors, so closing under them finds the whole ideal; eta_K alone misses
  // covers like omega_1 < omega_2 in G2, whose difference is zeta.
  std::vector<std::vector<int>> steps;
  {
    std::set<std::vector<int>> step_set;
    for (const auto& comp : sys.components()) {
      std::uint64_t block = 0;
      for (int i = 0; i < comp.rank; ++i) block |= std::uint64_t(1) << (comp.offset + i);
      for (std::uint64_t sub = block; sub; sub = (sub - 1) & block) {
        SimpleSubset K{lambda.sys, sub};
        if (!rootsys::is_connected(K)) continue;
        auto push = [&](const std::vector<Rat>& rc) {
          std::vector<int> wc(sys.rank(), 0);
          for (int i = 0; i < sys.rank(); ++i) {
            if (rc[i].is_zero()) continue;
            for (int j = 0; j < sys.rank(); ++j)
              wc[j] += static_cast<int>(rc[i].as_integer()) * sys.cartan()[i][j];
          }
          step_set.insert(std::move(wc));
        };
        push(rootsys::highest_short_root(K).coords);
        auto cls = rootsys::classify_component(K);
        if (cls.letter != 'A' && cls.letter != 'D' && cls.letter != 'E') {
          std::vector<Rat> zeta(sys.rank(), Rat(0));
          for (int i : K.members()) zeta[i] = Rat(1);
          push(zeta);
        }
      }
    }
    steps.assign(step_set.begin(), step_set.end());
  }

  std::set<std::vector<int>> seen = {lambda.coords};
  std::vector<std::vector<int>> work = {lambda.coords};
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (const auto& step : steps) {
      std::vector<int> down(cur.size());
      bool dominant = true;
      for (size_t i = 0; i < cur.size(); ++i) {
        down[i] = cur[i] - step[i];
        dominant &= down[i] >= 0;
      }
      if (!dominant || seen.count(down)) continue;
      seen.insert(down);
      work.push_back(std::move(down));
    }
  }

  std::vector<WeightVec> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(sys.weight(std::vector<int>(c)));
  std::sort(out.begin(), out.end(), [&](const WeightVec& a, const WeightVec& b) {
    // descending by dominance height, i.e. ascending depth of lambda - mu
    auto da = rootsys::to_root_basis(lambda - a);
    auto db = rootsys::to_root_basis(lambda - b);
    Rat ha(0), hb(0);
    for (const auto& c : da.coords) ha += c;
    for (const auto& c : db.coords) hb += c;
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  return out;
}

std::vector<std::pair<RootVec, SimpleSubset>> component_split(const WeightVec& lambda,
                                                              const WeightVec& mu) {
  require_dominant_pair(lambda, mu, "component_split");
  auto diff = difference_coords(lambda, mu, "component_split");
  const RootSystem& sys = *lambda.sys;
  SimpleSubset supp{lambda.sys, 0};
  for (int i = 0; i < sys.rank(); ++i)
    if (diff[i]) supp.add(i);

  std::vector<std::pair<RootVec, SimpleSubset>> out;
  for (const auto& comp : rootsys::components(supp)) {
    std::vector<Rat> coords(sys.rank(), Rat(0));
    for (int i : comp.members()) coords[i] = Rat(diff[i]);
    out.push_back({sys.root_vec(std::move(coords)), comp});
  }
  return out;
}

}  // namespace xsigma::orderchain
