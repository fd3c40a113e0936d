#include "xsigma/compact.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "xsigma/cone.hpp"
#include "xsigma/orderchain.hpp"

namespace xsigma::compact {


namespace {

void require_dominant(const WeightVec& v, const char* who) {
  if (!v.dominant()) throw PreconditionError(std::string(who) + " requires a dominant weight");
}

void require_irreducible_nonzero(const WeightVec& lambda, const char* who) {
  require_dominant(lambda, who);
  if (!lambda.sys->irreducible())
    throw PreconditionError(std::string(who) + ": system must be irreducible");
  if (lambda.is_zero()) throw PreconditionError(std::string(who) + ": lambda must be nonzero");
}

bool has_short_and_long(const RootSystem& sys, const SimpleSubset& C) {
  bool any_short = false, any_long = false;
  for (int i : C.members()) (sys.is_short(i) ? any_short : any_long) = true;
  return any_short && any_long;
}

WeightVec subtract_root_vector(const WeightVec& base, const RootVec& rv) {
  auto wc = rootsys::to_weight_coords(rv);
  WeightVec out = base;
  for (int i = 0; i < out.rank(); ++i) out.coords[i] -= static_cast<int>(wc[i].as_integer());
  return out;
}

}  // namespace

// ---- condition (*) and little brothers ---------------------------------------

int short_long_junction(const SimpleSubset& C) {
  const RootSystem& sys = *C.sys;
  int found = -1;
  for (int i : C.members()) {
    if (!sys.is_short(i)) continue;
    for (int j : sys.adjacency()[i]) {
      if (C.contains(j) && !sys.is_short(j)) {
        XSIGMA_CHECK(found < 0);
        found = i;
      }
    }
  }
  if (found < 0)
    throw PreconditionError("short_long_junction: subset has no short-long adjacency");
  return found;
}

bool satisfies_star_k(const WeightVec& lambda, const SimpleSubset& K) {
  require_dominant(lambda, "satisfies_star_k");
  const RootSystem& sys = *lambda.sys;
  for (const auto& C : rootsys::components(K)) {
    if (!has_short_and_long(sys, C)) continue;  // simply-laced piece
    bool long_in_support = false;
    for (int i : C.members()) long_in_support |= !sys.is_short(i) && lambda.coords[i] != 0;
    if (!long_in_support) continue;
    if (lambda.coords[short_long_junction(C)] == 0) return false;
  }
  return true;
}

bool satisfies_star(const WeightVec& lambda) {
  return satisfies_star_k(lambda, lambda.sys->all());
}

std::optional<RootVec> little_brother_delta(const WeightVec& lambda, const SimpleSubset& C) {
  const RootSystem& sys = *lambda.sys;
  XSIGMA_CHECK(rootsys::is_connected(C));
  if (!has_short_and_long(sys, C)) return std::nullopt;
  int alpha_s = short_long_junction(C);
  if (lambda.coords[alpha_s] != 0) return std::nullopt;

  // BFS from alpha_S through C; the nearest long support root starts the segment
  std::vector<int> parent(sys.rank(), -2);
  std::queue<int> bfs;
  bfs.push(alpha_s);
  parent[alpha_s] = -1;
  int last_long = -1;
  std::vector<int> order;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    order.push_back(v);
    for (int w : sys.adjacency()[v]) {
      if (!C.contains(w) || parent[w] != -2) continue;
      parent[w] = v;
      bfs.push(w);
    }
  }
  for (int v : order) {
    if (!sys.is_short(v) && lambda.coords[v] != 0) {
      last_long = v;
      break;
    }
  }
  if (last_long < 0) return std::nullopt;  // no long root in the support of C

  std::vector<Rat> seg(sys.rank(), Rat(0));
  for (int v = last_long; v != -1; v = parent[v]) seg[v] = Rat(1);
  return sys.root_vec(std::move(seg));
}

std::vector<WeightVec> little_brothers_k(const WeightVec& lambda, const SimpleSubset& K) {
  require_dominant(lambda, "little_brothers_k");
  std::vector<WeightVec> out;
  for (const auto& C : rootsys::components(K)) {
    auto delta = little_brother_delta(lambda, C);
    if (!delta) continue;
    WeightVec lb = subtract_root_vector(lambda, *delta);
    XSIGMA_CHECK(lb.dominant());
    XSIGMA_CHECK(rootsys::dominance_leq(lb, lambda) && lb != lambda);
    out.push_back(std::move(lb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightVec> little_brothers(const WeightVec& lambda) {
  return little_brothers_k(lambda, lambda.sys->all());
}

// ---- simple weight sets --------------------------------------------------------

std::optional<WeightVec> is_simple_sigma(const std::vector<WeightVec>& weights) {
  if (weights.empty()) throw PreconditionError("is_simple_sigma: empty set");
  for (const auto& w : weights) require_dominant(w, "is_simple_sigma");
  std::set<std::vector<int>> maximal;
  for (const auto& w : weights) {
    bool below_other = false;
    for (const auto& v : weights)
      if (!(v == w) && rootsys::dominance_leq(w, v)) {
        below_other = true;
        break;
      }
    if (!below_other) maximal.insert(w.coords);
  }
  if (maximal.size() != 1) return std::nullopt;
  return weights[0].sys->weight(std::vector<int>(*maximal.begin()));
}

SigmaSet SigmaSet::create(std::vector<WeightVec> weights) {
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  auto max = is_simple_sigma(weights);
  if (!max)
    throw PreconditionError("sigma is not simple: no unique dominance-maximal element");
  return SigmaSet{std::move(weights), *max};
}

bool SigmaSet::contains(const WeightVec& w) const {
  return std::binary_search(weights.begin(), weights.end(), w);
}

std::vector<std::string> sigma_warnings(const SigmaSet& sigma) {
  std::vector<std::string> out;
  for (const auto& w : sigma.weights) {
    if (w == sigma.max) continue;
    auto diff = rootsys::to_root_basis(sigma.max - w);
    bool integral = std::all_of(diff.coords.begin(), diff.coords.end(),
                                [](const Rat& c) { return c.is_integer(); });
    if (!integral)
      out.push_back("weight " + w.str() + " is not in the coset of " + sigma.max.str() +
                    " modulo the root lattice");
    else if (!diff.is_natural())
      out.push_back("weight " + w.str() + " is not below the maximum " + sigma.max.str());
  }
  return out;
}

// ---- normality -------------------------------------------------------------------

bool normality_decide(const SigmaSet& sigma) {
  for (const auto& lb : little_brothers(sigma.max))
    if (!sigma.contains(lb)) return false;
  return true;
}

std::vector<OracleRow> normality_oracle(const SigmaSet& sigma, int n_max,
                                        repthy::Oracle& oracle) {
  if (n_max < 1) throw PreconditionError("normality_oracle: n_max must be positive");
  const WeightVec& lambda = sigma.max;
  std::vector<OracleRow> rows;
  for (const auto& mu : orderchain::dominant_ideal(lambda)) {
    OracleRow row;
    row.mu = mu;
    for (int n = 1; n <= n_max && !row.found; ++n) {
      WeightVec target = mu;
      for (int i = 0; i < target.rank(); ++i) target.coords[i] += (n - 1) * lambda.coords[i];
      // multisets over sigma in lexicographic order of the sorted factor list
      std::vector<size_t> pick(n, 0);
      while (true) {
        std::vector<WeightVec> factors;
        factors.reserve(n);
        for (size_t idx : pick) factors.push_back(sigma.weights[idx]);
        if (oracle.iterated_contains(factors, target)) {
          row.found = true;
          row.n = n;
          row.factors = std::move(factors);
          break;
        }
        // next nondecreasing index tuple
        int pos = n - 1;
        while (pos >= 0 && pick[pos] + 1 == sigma.weights.size()) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < n; ++i) pick[i] = pick[pos];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Certificate normality_certificate(const SigmaSet& sigma, const WeightVec& mu) {
  const WeightVec& lambda = sigma.max;
  require_dominant(mu, "normality_certificate");
  if (!normality_decide(sigma))
    throw PreconditionError("normality_certificate: sigma does not contain all little brothers");
  if (!rootsys::dominance_leq(mu, lambda))
    throw PreconditionError("normality_certificate: mu is not below the maximum");

  Certificate cert;
  cert.mu = mu;
  if (mu == lambda) {
    cert.n = 1;
    cert.factors = {lambda};
    return cert;
  }

  const RootSystem& ambient = *lambda.sys;
  auto blocks = orderchain::component_split(lambda, mu);
  XSIGMA_CHECK(!blocks.empty());
  const auto& [beta1, K] = blocks.front();

  // the induction lemma applies inside the Levi on K, to the pair (mu+beta1, mu)
  repthy::LeviSystem levi = repthy::levi_subsystem(K);
  WeightVec top = mu;
  {
    auto wc = rootsys::to_weight_coords(beta1);
    for (int i = 0; i < top.rank(); ++i) top.coords[i] += static_cast<int>(wc[i].as_integer());
  }
  XSIGMA_CHECK(top.dominant());
  auto step = orderchain::induction_step(levi.restrict_weight(top), levi.restrict_weight(mu));

  // lift the step back to the ambient lattice
  auto lift_root_vec = [&](const RootVec& local) {
    std::vector<Rat> coords(ambient.rank(), Rat(0));
    for (size_t i = 0; i < levi.to_ambient.size(); ++i) coords[levi.to_ambient[i]] = local.coords[i];
    return ambient.root_vec(std::move(coords));
  };
  WeightVec mu_prime = mu;
  {
    auto wc = rootsys::to_weight_coords(lift_root_vec(step.added));
    for (int i = 0; i < mu_prime.rank(); ++i)
      mu_prime.coords[i] += static_cast<int>(wc[i].as_integer());
  }
  WeightVec lambda_prime = subtract_root_vector(lambda, lift_root_vec(step.removed));

  XSIGMA_CHECK(mu_prime.dominant());
  XSIGMA_CHECK(rootsys::dominance_leq(mu_prime, lambda));
  XSIGMA_CHECK(mu_prime != mu && rootsys::dominance_leq(mu, mu_prime));
  XSIGMA_CHECK([&] {
    if (lambda_prime == lambda) return true;
    auto lbs = little_brothers(lambda);
    return std::find(lbs.begin(), lbs.end(), lambda_prime) != lbs.end();
  }());

  Certificate upper = normality_certificate(sigma, mu_prime);
  cert.n = upper.n + 1;
  cert.factors = std::move(upper.factors);
  cert.factors.push_back(lambda_prime);
  cert.steps.push_back({mu, mu_prime, lambda_prime});
  cert.steps.insert(cert.steps.end(), upper.steps.begin(), upper.steps.end());
  return cert;
}

bool verify_certificate(const Certificate& cert, const WeightVec& lambda_max,
                        repthy::Oracle& oracle) {
  // every intermediate step: V(mu_from + lambda) inside V(mu_to) (x) V(lambda_used)
  for (const auto& step : cert.steps) {
    WeightVec target = step.mu_from + lambda_max;
    if (!oracle.tensor_contains(step.mu_to, step.lambda_used, target)) return false;
  }
  // the realized chain: V(mu + (n-1) lambda) inside the iterated product
  WeightVec target = cert.mu;
  for (int i = 0; i < target.rank(); ++i)
    target.coords[i] += (cert.n - 1) * lambda_max.coords[i];
  return oracle.iterated_contains(cert.factors, target);
}

// ---- colored cone and rays --------------------------------------------------------

std::vector<std::vector<long long>> CoweightCone::all_generators() const {
  std::vector<std::vector<long long>> all = coroot_gens;
  all.insert(all.end(), coweight_gens.begin(), coweight_gens.end());
  return all;
}

CoweightCone colored_cone(const WeightVec& lambda) {
  require_dominant(lambda, "colored_cone");
  if (lambda.is_zero()) throw PreconditionError("colored_cone: lambda must be nonzero");
  const RootSystem& sys = *lambda.sys;
  CoweightCone cone;
  cone.sys = lambda.sys;
  cone.colors = SimpleSubset{lambda.sys, 0};
  for (int a = 0; a < sys.rank(); ++a) {
    if (lambda.coords[a] != 0) continue;
    cone.colors.add(a);
    std::vector<long long> coroot(sys.rank());
    for (int j = 0; j < sys.rank(); ++j) coroot[j] = sys.cartan()[j][a];
    cone.coroot_gens.push_back(std::move(coroot));
  }
  for (int a = 0; a < sys.rank(); ++a) {
    std::vector<long long> w(sys.rank(), 0);
    w[a] = -1;
    cone.coweight_gens.push_back(std::move(w));
  }
  return cone;
}

StructureSubsets structure_subsets(const WeightVec& lambda) {
  require_irreducible_nonzero(lambda, "structure_subsets");
  const RootSystem& sys = *lambda.sys;
  const char letter = sys.components()[0].letter;
  StructureSubsets out{{lambda.sys, 0}, {lambda.sys, 0}, {lambda.sys, 0}, {lambda.sys, 0}, -1};

  SimpleSubset supp = rootsys::support(lambda);
  SimpleSubset complement{lambda.sys, 0};
  for (int i = 0; i < sys.rank(); ++i)
    if (!supp.contains(i)) complement.add(i);
  auto comps = rootsys::components(complement);
  SimpleSubset extremes = sys.extremes();

  if (letter == 'D' || letter == 'E') {
    for (int i = 0; i < sys.rank(); ++i)
      if (sys.adjacency()[i].size() == 3) out.gamma_de = i;
    XSIGMA_CHECK(out.gamma_de >= 0);
    for (const auto& c : comps) {
      if (!c.contains(out.gamma_de)) continue;
      if ((c.bits & extremes.bits) != 0 && __builtin_popcountll(c.bits & extremes.bits) == 1)
        out.Ide = c;
    }
    if (!out.Ide.empty()) {
      // shortest connected stretch from gamma_de to the unique extreme inside Ide
      int target = SimpleSubset{lambda.sys, out.Ide.bits & extremes.bits}.min_index();
      std::vector<int> parent(sys.rank(), -2);
      std::queue<int> bfs;
      bfs.push(out.gamma_de);
      parent[out.gamma_de] = -1;
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : sys.adjacency()[v])
          if (out.Ide.contains(w) && parent[w] == -2) {
            parent[w] = v;
            bfs.push(w);
          }
      }
      XSIGMA_CHECK(parent[target] != -2);
      for (int v = target; v != -1; v = parent[v]) out.Ide_star.add(v);
    }
  }

  for (const auto& c : comps) {
    if (c == out.Ide && !out.Ide.empty()) continue;
    if ((c.bits & extremes.bits) != 0) out.Ie.bits |= c.bits;
  }

  SimpleSubset excluded = rootsys::closure(out.Ie);
  excluded.bits |= out.Ide_star.bits;
  for (int i = 0; i < sys.rank(); ++i)
    if (!excluded.contains(i)) out.J.add(i);
  out.J.bits |= extremes.bits & ~supp.bits;
  return out;
}

std::vector<LabeledRay> extremal_rays(const WeightVec& lambda) {
  auto st = structure_subsets(lambda);
  const RootSystem& sys = *lambda.sys;
  std::vector<LabeledRay> out;
  for (int a = 0; a < sys.rank(); ++a)
    if (lambda.coords[a] == 0) out.push_back({RayKind::Coroot, a});
  for (int a : st.J.members()) out.push_back({RayKind::NegCoweight, a});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> ray_vector(const RootSystem& sys, const LabeledRay& ray) {
  std::vector<long long> v(sys.rank(), 0);
  if (ray.kind == RayKind::Coroot) {
    for (int j = 0; j < sys.rank(); ++j) v[j] = sys.cartan()[j][ray.index];
  } else {
    v[ray.index] = -1;
  }
  return v;
}

std::vector<std::vector<long long>> extremal_rays_generic(const CoweightCone& cone) {
  auto gens = cone.all_generators();
  // primitive representatives, deduplicated
  std::vector<std::vector<long long>> prims;
  std::set<std::vector<long long>> seen;
  for (const auto& g : gens) {
    auto p = cone::primitive(g);
    if (seen.insert(p).second) prims.push_back(std::move(p));
  }
  if (!cone::is_pointed(prims))
    throw PreconditionError("extremal_rays_generic: cone is not pointed");
  std::vector<std::vector<long long>> out;
  for (size_t i = 0; i < prims.size(); ++i) {
    std::vector<std::vector<long long>> others;
    others.reserve(prims.size() - 1);
    for (size_t j = 0; j < prims.size(); ++j)
      if (j != i) others.push_back(prims[j]);
    if (!cone::in_cone(others, prims[i])) out.push_back(prims[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Q-factoriality and smoothness ---------------------------------------------------

QFactoriality is_q_factorial(const WeightVec& lambda) {
  require_irreducible_nonzero(lambda, "is_q_factorial");
  const RootSystem& sys = *lambda.sys;
  const char letter = sys.components()[0].letter;
  SimpleSubset supp = rootsys::support(lambda);

  QFactoriality out;
  out.i = rootsys::is_connected(supp);
  out.ii = supp.size() != 1 || sys.extremes().contains(supp.min_index());
  if (letter == 'D' || letter == 'E') {
    int gamma = -1;
    for (int i = 0; i < sys.rank(); ++i)
      if (sys.adjacency()[i].size() == 3) gamma = i;
    int adjacent_support = 0;
    for (int w : sys.adjacency()[gamma]) adjacent_support += supp.contains(w) ? 1 : 0;
    out.iii = supp.contains(gamma) && adjacent_support >= 2;
  }
  out.value = out.i && out.ii && out.iii.value_or(true);
  return out;
}

Smoothness is_smooth(const SigmaSet& sigma) {
  const WeightVec& lambda = sigma.max;
  const RootSystem& sys = *lambda.sys;
  Smoothness out;
  out.normal = satisfies_star(lambda);
  out.q_factorial = true;
  out.complement_type_a = true;
  for (const auto& comp : sys.components()) {
    std::vector<int> coords(lambda.coords.begin() + comp.offset,
                            lambda.coords.begin() + comp.offset + comp.rank);
    auto sub = RootSystem::assemble({{comp.letter, comp.rank}});
    WeightVec restricted = sub->weight(std::move(coords));
    if (restricted.is_zero()) continue;  // point factor
    out.q_factorial &= is_q_factorial(restricted).value;
    SimpleSubset supp = rootsys::support(restricted);
    SimpleSubset complement{sub.get(), 0};
    for (int i = 0; i < sub->rank(); ++i)
      if (!supp.contains(i)) complement.add(i);
    for (const auto& piece : rootsys::components(complement))
      out.complement_type_a &= rootsys::classify_component(piece).letter == 'A';
  }
  out.value = out.normal && out.q_factorial && out.complement_type_a;
  return out;
}

Timashev timashev_check(const WeightVec& lambda) {
  require_irreducible_nonzero(lambda, "timashev_check");
  const RootSystem& sys = *lambda.sys;
  const int r = sys.rank();
  SimpleSubset supp = rootsys::support(lambda);
  SimpleSubset complement{lambda.sys, 0};
  for (int i = 0; i < r; ++i)
    if (!supp.contains(i)) complement.add(i);
  auto comps = rootsys::components(complement);

  Timashev out;
  out.i = static_cast<int>(comps.size()) <= supp.size();
  for (const auto& c : comps)
    out.i &= rootsys::classify_component(c).letter == 'A';

  auto rays = extremal_rays_generic(colored_cone(lambda));
  out.ii = static_cast<int>(rays.size()) == r && cone::abs_determinant(rays) == 1;
  if (!out.ii) return out;  // iii needs a lattice basis of rays

  // dual basis of the primitive ray generators, in root coordinates
  cone::QMat v(r, cone::QVec(r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) v[i][j] = Rat(rays[j][i]);
  auto inv = cone::invert(v);
  XSIGMA_CHECK(inv.has_value());
  // row j of inv pairs to delta_{jk} against ray k under the root/coweight duality

  auto ray_index_of = [&](const std::vector<long long>& vec) -> int {
    auto p = cone::primitive(vec);
    for (size_t k = 0; k < rays.size(); ++k)
      if (rays[k] == p) return static_cast<int>(k);
    return -1;
  };

  bool ok = true;
  struct NumberedComponent {
    std::vector<int> order;  // alpha_1 .. alpha_l, ending at the Delta-extreme
  };
  std::vector<NumberedComponent> numbered;
  for (const auto& c : comps) {
    NumberedComponent nc;
    auto members = c.members();
    if (members.size() == 1) {
      nc.order = members;
    } else {
      // a chain, numbered from the end that is not an extreme of Delta
      std::vector<int> ends;
      for (int vtx : members) {
        int deg = 0;
        for (int w : sys.adjacency()[vtx]) deg += c.contains(w) ? 1 : 0;
        if (deg <= 1) ends.push_back(vtx);
      }
      if (ends.size() != 2) {
        ok = false;  // not a chain; the enumeration of condition iii cannot exist
        break;
      }
      std::vector<int> starts;
      for (int e : ends)
        if (!sys.extremes().contains(e)) starts.push_back(e);
      if (starts.size() != 1) {
        ok = false;
        break;
      }
      int prev = -1, cur = starts[0];
      nc.order.push_back(cur);
      while (true) {
        int next = -1;
        for (int w : sys.adjacency()[cur])
          if (c.contains(w) && w != prev) next = w;
        if (next < 0) break;
        nc.order.push_back(next);
        prev = cur;
        cur = next;
      }
    }
    numbered.push_back(std::move(nc));
  }

  if (ok) {
    // pi_i^K = dual of the coroot ray of alpha_i^K (i <= l), dual of the
    // negative coweight ray of alpha_l^K (i = l+1)
    std::vector<std::vector<cone::QVec>> pis;  // per component, l+1 vectors
    for (const auto& nc : numbered) {
      std::vector<cone::QVec> pi;
      for (int i : nc.order) {
        std::vector<long long> coroot(r);
        for (int j = 0; j < r; ++j) coroot[j] = sys.cartan()[j][i];
        int k = ray_index_of(coroot);
        if (k < 0) {
          ok = false;
          break;
        }
        pi.push_back((*inv)[k]);
      }
      if (!ok) break;
      std::vector<long long> neg(r, 0);
      neg[nc.order.back()] = -1;
      int k = ray_index_of(neg);
      if (k < 0) {
        ok = false;
        break;
      }
      pi.push_back((*inv)[k]);
      pis.push_back(std::move(pi));
    }

    if (ok) {
      // pairing condition against the literal coroots across all components
      for (size_t kk = 0; kk < numbered.size() && ok; ++kk)
        for (size_t j = 0; j < pis[kk].size() - 1 && ok; ++j)
          for (size_t hh = 0; hh < numbered.size() && ok; ++hh)
            for (size_t i = 0; i < numbered[hh].order.size() && ok; ++i) {
              Rat pair(0);
              int root = numbered[hh].order[i];
              for (int t = 0; t < r; ++t) pair += pis[kk][j][t] * Rat(sys.cartan()[t][root]);
              Rat expected((kk == hh && i == j) ? 1 : 0);
              ok = pair == expected;
            }
      // omega_j^K = pi_j^K - j/(l+1) pi_{l+1}^K, as vectors over the simple roots
      for (size_t kk = 0; kk < numbered.size() && ok; ++kk) {
        const auto& order = numbered[kk].order;
        const int l = static_cast<int>(order.size());
        SimpleSubset K{lambda.sys, 0};
        for (int i : order) K.add(i);
        auto levi = repthy::levi_subsystem(K);
        for (int j = 1; j <= l && ok; ++j) {
          // fundamental weight of Phi_K at the j-th root of this numbering,
          // expressed in ambient root coordinates
          int local = levi.from_ambient[order[j - 1]];
          cone::QVec omega(r, Rat(0));
          for (int t = 0; t < levi.sys->rank(); ++t)
            omega[levi.to_ambient[t]] = levi.sys->inverse_cartan_t()[t][local];
          for (int t = 0; t < r; ++t) {
            Rat rhs = pis[kk][j - 1][t] - Rat(j, l + 1) * pis[kk][l][t];
            ok = ok && rhs == omega[t];
          }
        }
      }
    }
  }

  out.iii = ok;
  return out;
}

bool same_compactification(const WeightVec& lambda, const WeightVec& mu) {
  require_dominant(lambda, "same_compactification");
  require_dominant(mu, "same_compactification");
  return rootsys::support(lambda).bits == rootsys::support(mu).bits;
}

}  // namespace xsigma::compact
