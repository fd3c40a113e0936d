#include "xsigma/repthy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace xsigma::repthy {


namespace {

using i128 = __int128;

/// (x, y) in the Weyl-invariant form normalized so short simple roots have
/// squared length 2: x given in weight coordinates, y in root coordinates.
long long form(const RootSystem& sys, const std::vector<int>& wc_x, const std::vector<int>& rc_y) {
  long long acc = 0;
  for (int i = 0; i < sys.rank(); ++i)
    if (rc_y[i]) acc += static_cast<long long>(wc_x[i]) * sys.symmetrizer()[i] * rc_y[i];
  return acc;
}

void require_dominant(const WeightVec& v, const char* who) {
  if (!v.dominant()) throw PreconditionError(std::string(who) + " requires a dominant weight");
}

}  // namespace

long long WeightTable::multiplicity(const std::vector<int>& weight_coords) const {
  auto it = index_.find(weight_coords);
  return it == index_.end() ? 0 : it->second;
}

std::pair<WeightVec, int> dominant_conjugate(const WeightVec& v) {
  const RootSystem& sys = *v.sys;
  WeightVec x = v;
  for (auto& c : x.coords) c += 1;  // rho shift
  int sign = 1;
  long long cap = 4 * static_cast<long long>(sys.positive_roots().size()) + 16;
  for (long long steps = 0;; ++steps) {
    int neg = -1;
    for (int i = 0; i < x.rank(); ++i)
      if (x.coords[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    if (steps > cap) throw InternalError("shifted dominant conjugation did not terminate");
    int c = x.coords[neg];
    for (int j = 0; j < x.rank(); ++j) x.coords[j] -= c * sys.cartan()[neg][j];
    sign = -sign;
  }
  for (int c : x.coords)
    if (c == 0) return {v.sys->zero_weight(), 0};
  for (auto& c : x.coords) c -= 1;
  return {x, sign};
}

unsigned long long dim(const WeightVec& lambda) {
  require_dominant(lambda, "dim");
  const RootSystem& sys = *lambda.sys;
  // running product of <lambda+rho, beta^vee> / <rho, beta^vee>, reduced as we go
  unsigned long long num = 1, den = 1;
  for (const auto& beta : sys.positive_roots()) {
    unsigned long long up = 0, down = 0;
    for (int i = 0; i < sys.rank(); ++i) {
      if (!beta.root_coords[i]) continue;
      unsigned long long w = static_cast<unsigned long long>(sys.symmetrizer()[i]) *
                             static_cast<unsigned long long>(beta.root_coords[i]);
      up += static_cast<unsigned long long>(lambda.coords[i] + 1) * w;
      down += w;
    }
    XSIGMA_CHECK(up > 0 && down > 0);
    unsigned long long g1 = std::gcd(up, down);
    up /= g1;
    down /= g1;
    unsigned long long g2 = std::gcd(num, down);
    num /= g2;
    down /= g2;
    unsigned long long g3 = std::gcd(den, up);
    den /= g3;
    up /= g3;
    if (num > UINT64_MAX / 4 / (up ? up : 1)) throw GuardExceeded("dimension overflows 62 bits");
    num *= up;
    den *= down;
  }
  XSIGMA_CHECK(den != 0 && num % den == 0);
  return num / den;
}

WeightVec LeviSystem::restrict_weight(const WeightVec& ambient) const {
  std::vector<int> c;
  c.reserve(to_ambient.size());
  for (int g : to_ambient) c.push_back(ambient.coords[g]);
  return sys->weight(std::move(c));
}

WeightVec LeviSystem::extend_weight(const WeightVec& local, const RootSystem& ambient_sys) const {
  std::vector<int> c(ambient_sys.rank(), 0);
  for (size_t i = 0; i < to_ambient.size(); ++i) c[to_ambient[i]] = local.coords[i];
  return ambient_sys.weight(std::move(c));
}

LeviSystem levi_subsystem(const SimpleSubset& delta_prime) {
  const RootSystem& sys = *delta_prime.sys;
  LeviSystem out;
  std::vector<std::pair<char, int>> comps;
  for (const auto& piece : rootsys::components(delta_prime)) {
    auto cls = rootsys::classify_component(piece);
    comps.push_back({cls.letter, cls.rank});
    for (int g : cls.to_ambient) out.to_ambient.push_back(g);
  }
  if (comps.empty()) {
    out.sys = nullptr;
    out.from_ambient.assign(sys.rank(), -1);
    return out;
  }
  out.sys = RootSystem::assemble(comps);
  out.from_ambient.assign(sys.rank(), -1);
  for (size_t i = 0; i < out.to_ambient.size(); ++i)
    out.from_ambient[out.to_ambient[i]] = static_cast<int>(i);
  // the assembled Cartan matrix must coincide with the induced submatrix
  for (size_t i = 0; i < out.to_ambient.size(); ++i)
    for (size_t j = 0; j < out.to_ambient.size(); ++j)
      XSIGMA_CHECK(out.sys->cartan()[i][j] == sys.cartan()[out.to_ambient[i]][out.to_ambient[j]]);
  return out;
}

Oracle::Oracle(RootSystemPtr sys, Guards guards) : sys_(std::move(sys)), guards_(guards) {}

long long Oracle::table_size_estimate(const WeightVec& lambda) const {
  auto it = tables_.find(lambda.coords);
  if (it != tables_.end()) return static_cast<long long>(it->second->size());
  const long long clamp = 4 * guards_.table_product_cap;
  // box bound: depth vectors live in prod [0, rc(lambda) + rc(lambda^*)]
  auto rc = rootsys::to_root_basis(lambda);
  auto rc_dual = rootsys::to_root_basis(rootsys::dual_weight(lambda));
  i128 box = 1;
  for (int i = 0; i < sys_->rank() && box < clamp; ++i)
    box *= (rc.coords[i] + rc_dual.coords[i]).floor() + 1;
  long long estimate = box < clamp ? static_cast<long long>(box) : clamp;
  // |Pi(lambda)| <= dim(lambda), usually much tighter for small modules
  unsigned long long d;
  try {
    d = dim(lambda);
  } catch (const GuardExceeded&) {
    d = static_cast<unsigned long long>(clamp);
  }
  if (d < static_cast<unsigned long long>(estimate)) estimate = static_cast<long long>(d);
  return estimate;
}

const WeightTable& Oracle::weight_table(const WeightVec& lambda) {
  require_dominant(lambda, "weight_table");
  XSIGMA_CHECK(lambda.sys == sys_.get());
  auto it = tables_.find(lambda.coords);
  if (it != tables_.end()) return *it->second;

  unsigned long long d = dim(lambda);
  if (d > static_cast<unsigned long long>(guards_.dim_cap))
    throw GuardExceeded("weight_table: dim " + std::to_string(d) + " exceeds cap " +
                        std::to_string(guards_.dim_cap));

  auto table = std::make_shared<WeightTable>();
  table->highest_ = lambda;
  const RootSystem& sys = *sys_;
  const int r = sys.rank();

  struct Node {
    std::vector<int> wc;
    std::vector<int> depth;
  };
  std::unordered_map<std::vector<int>, long long, VecHash> mult_by_depth;
  std::vector<Node> level = {{lambda.coords, std::vector<int>(r, 0)}};
  mult_by_depth[level[0].depth] = 1;
  table->entries_.push_back({lambda.coords, level[0].depth, 1});

  std::vector<int> two_rho_plus(r);
  auto entry_mult = [&](const std::vector<int>& depth) -> long long {
    auto e = mult_by_depth.find(depth);
    return e == mult_by_depth.end() ? 0 : e->second;
  };

  while (!level.empty()) {
    std::unordered_map<std::vector<int>, std::vector<int>, VecHash> candidates;  // depth -> wc
    for (const auto& node : level) {
      for (int j = 0; j < r; ++j) {
        std::vector<int> depth = node.depth;
        depth[j] += 1;
        if (candidates.count(depth) || mult_by_depth.count(depth)) continue;
        std::vector<int> wc = node.wc;
        for (int t = 0; t < r; ++t) wc[t] -= sys.cartan()[j][t];
        candidates.emplace(std::move(depth), std::move(wc));
      }
    }
    std::vector<Node> next;
    for (auto& [depth, wc] : candidates) {
      // mu is a weight iff its dominant conjugate still lies under lambda
      WeightVec x = sys.weight(std::vector<int>(wc));
      WeightVec dom = rootsys::dominant_conjugate_plain(x);
      bool inside = true;
      {
        // depth of dom relative to lambda must stay componentwise >= 0
        auto delta = rootsys::to_root_basis(dom - x);  // integer by construction
        for (int i = 0; i < r && inside; ++i) {
          Rat nd = Rat(depth[i]) - delta.coords[i];
          XSIGMA_CHECK(nd.is_integer());
          inside = nd.num() >= 0;
        }
      }
      if (!inside) continue;

      // Freudenthal recursion seeded at the highest weight
      i128 numer = 0;
      for (const auto& beta : sys.positive_roots()) {
        long long base = form(sys, wc, beta.root_coords);
        long long step = 2 * beta.half_norm;  // (beta, beta)
        for (int k = 1;; ++k) {
          std::vector<int> up = depth;
          bool ok = true;
          for (int i = 0; i < r && ok; ++i) {
            up[i] -= k * beta.root_coords[i];
            ok = up[i] >= 0;
          }
          if (!ok) break;
          long long m = entry_mult(up);
          if (m == 0) break;
          numer += i128(m) * (base + static_cast<long long>(k) * step);
        }
      }
      long long denom = 0;
      for (int i = 0; i < r; ++i)
        denom += static_cast<long long>(lambda.coords[i] + wc[i] + 2) * sys.symmetrizer()[i] *
                 depth[i];
      XSIGMA_CHECK(denom > 0);
      i128 twice = 2 * numer;
      XSIGMA_CHECK(twice % denom == 0);
      i128 m128 = twice / denom;
      XSIGMA_CHECK(m128 > 0 && m128 < i128(INT64_MAX));
      long long m = static_cast<long long>(m128);
      mult_by_depth.emplace(depth, m);
      table->entries_.push_back({wc, depth, m});
      next.push_back({std::move(wc), std::move(depth)});
    }
    level = std::move(next);
  }

  unsigned long long total = 0;
  for (const auto& e : table->entries_) total += static_cast<unsigned long long>(e.mult);
  XSIGMA_CHECK(total == d);

  for (const auto& e : table->entries_) table->index_.emplace(e.weight_coords, e.mult);
  auto [pos, fresh] = tables_.emplace(lambda.coords, std::move(table));
  XSIGMA_CHECK(fresh);
  return *pos->second;
}

long long Oracle::weight_multiplicity(const WeightVec& lambda, const WeightVec& mu) {
  return weight_table(lambda).multiplicity(mu.coords);
}

const WeightTable& Oracle::table_of_smaller(const WeightVec& a, const WeightVec& b,
                                            const WeightVec** other) {
  unsigned long long da = dim(a), db = dim(b);
  const WeightVec& tabled = (db <= da) ? b : a;
  *other = (db <= da) ? &a : &b;
  return weight_table(tabled);
}

const TensorMultiset& Oracle::tensor_decompose(const WeightVec& lambda, const WeightVec& mu) {
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  XSIGMA_CHECK(lambda.sys == sys_.get() && mu.sys == sys_.get());
  auto key = std::make_pair(lambda.coords, mu.coords);
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return *it->second;

  {
    i128 product = i128(table_size_estimate(lambda)) * table_size_estimate(mu);
    if (product > guards_.table_product_cap)
      throw GuardExceeded("tensor_decompose: weight-table size product exceeds cap");
  }

  const WeightVec* other = nullptr;
  const WeightTable& table = table_of_smaller(lambda, mu, &other);

  auto result = std::make_shared<TensorMultiset>();
  for (const auto& e : table.entries_) {
    WeightVec t = *other;
    for (int i = 0; i < t.rank(); ++i) t.coords[i] += e.weight_coords[i];
    auto [dom, sign] = dominant_conjugate(t);
    if (sign == 0) continue;
    result->entries[dom.coords] += sign * e.mult;
  }
  for (auto it2 = result->entries.begin(); it2 != result->entries.end();) {
    XSIGMA_CHECK(it2->second >= 0);
    it2 = (it2->second == 0) ? result->entries.erase(it2) : std::next(it2);
  }

  // dimension identity, checked on every decomposition
  {
    i128 total = 0;
    for (const auto& [nu, m] : result->entries) total += i128(m) * dim(sys_->weight(std::vector<int>(nu)));
    XSIGMA_CHECK(total == i128(dim(lambda)) * dim(mu));
  }

  if (on_tensor) on_tensor(lambda, mu);
  auto [pos, fresh] = tensors_.emplace(std::move(key), std::move(result));
  XSIGMA_CHECK(fresh);
  return *pos->second;
}

bool Oracle::tensor_contains(const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu) {
  require_dominant(nu, "tensor_contains");
  return tensor_decompose(lambda, mu).contains(nu);
}

bool Oracle::iterated_contains(const std::vector<WeightVec>& factors, const WeightVec& nu) {
  if (factors.empty()) throw PreconditionError("iterated_contains: no factors");
  require_dominant(nu, "iterated_contains");

  // suffix sums of the remaining highest weights, for the dominance prune
  std::vector<WeightVec> suffix(factors.size() + 1, sys_->zero_weight());
  for (size_t i = factors.size(); i-- > 0;) suffix[i] = suffix[i + 1] + factors[i];

  std::vector<WeightVec> state;
  auto admissible = [&](const WeightVec& kappa, size_t next) {
    return rootsys::dominance_leq(nu, kappa + suffix[next]);
  };
  if (admissible(factors[0], 1)) state.push_back(factors[0]);

  for (size_t i = 1; i < factors.size() && !state.empty(); ++i) {
    std::set<std::vector<int>> seen;
    std::vector<WeightVec> next_state;
    for (const auto& kappa : state) {
      const auto& dec = tensor_decompose(kappa, factors[i]);
      for (const auto& [coords, m] : dec.entries) {
        (void)m;
        if (!seen.insert(coords).second) continue;
        WeightVec cand = sys_->weight(std::vector<int>(coords));
        if (admissible(cand, i + 1)) next_state.push_back(std::move(cand));
      }
    }
    state = std::move(next_state);
  }
  for (const auto& kappa : state)
    if (kappa == nu) return true;
  return false;
}

}  // namespace xsigma::repthy
