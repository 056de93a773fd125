#include "cgw/growth.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cgw/conjugacy.hpp"
#include "cgw/error.hpp"
#include "cgw/hnn.hpp"
#include "arith.hpp"
#include "parallel.hpp"

namespace cgw {

namespace {

GrowthTable blank(const GroupEngine& e, GrowthKind kind, std::size_t budget) {
  GrowthTable t;
  t.kind = kind;
  t.engine = e.descriptor().to_string();
  t.generators = e.generators();
  t.budget = budget;
  return t;
}

template <typename F>
std::vector<Payload> map_layer(const std::vector<Payload>& layer,
                               std::size_t threads, F&& f) {
  std::vector<Payload> out(layer.size());
  std::size_t t = detail::effective_threads(threads, layer.size() / 64 + 1);
  detail::run_workers(t, [&](std::size_t w) {
    auto [lo, hi] = detail::chunk(layer.size(), w, t);
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = f(layer[i]);
    }
  });
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

GrowthTable bracketed_conjugacy_table(const GroupEngine& e, const Ball& ball,
                                      const GrowthOptions& opts) {
  GrowthTable t = blank(e, GrowthKind::xi, opts.budget);
  t.bracketed = true;

  std::vector<const Payload*> members;
  std::unordered_map<Payload, std::size_t, PayloadHash> index;
  for (const auto& layer : ball.layers) {
    for (const Payload& p : layer) {
      index.emplace(p, members.size());
      members.push_back(&p);
    }
  }

  Ball conjugators = enumerate_ball(e, opts.conjugator_radius,
                                    BallOptions{opts.budget, opts.threads});
  if (members.size() * conjugators.size() > opts.pair_budget) {
    throw BudgetExceeded(
        "bracketed class merging needs " +
            std::to_string(members.size() * conjugators.size()) +
            " conjugation tests, over the budget of " +
            std::to_string(opts.pair_budget),
        0);
  }
  std::vector<const Payload*> conj_list;
  for (const auto& layer : conjugators.layers) {
    for (const Payload& p : layer) {
      conj_list.push_back(&p);
    }
  }

  std::size_t threads =
      detail::effective_threads(opts.threads, members.size() / 64 + 1);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(threads);
  std::vector<Payload> invariants(members.size());
  detail::run_workers(threads, [&](std::size_t w) {
    auto [lo, hi] = detail::chunk(members.size(), w, threads);
    for (std::size_t i = lo; i < hi; ++i) {
      invariants[i] = conjugacy_invariant(e, view(*members[i]));
      for (const Payload* u : conj_list) {
        Payload c = e.conjugate(view(*members[i]), view(*u));
        auto it = index.find(c);
        if (it != index.end() && it->second != i) {
          found[w].emplace_back(i, it->second);
        }
      }
    }
  });

  UnionFind uf(members.size());
  for (const auto& part : found) {
    for (auto [a, b] : part) {
      uf.unite(a, b);
    }
  }
  // Invariants tagged 1 are complete: equal values mean conjugate.
  std::unordered_map<Payload, std::size_t, PayloadHash> first_with;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!invariants[i].empty() && invariants[i][0] == 1) {
      auto [it, fresh] = first_with.emplace(invariants[i], i);
      if (!fresh) {
        uf.unite(it->second, i);
      }
    }
  }

  std::unordered_set<std::size_t> roots;
  std::unordered_set<Payload, PayloadHash> distinct;
  std::size_t i = 0;
  for (const auto& layer : ball.layers) {
    for (std::size_t j = 0; j < layer.size(); ++j, ++i) {
      roots.insert(uf.find(i));
      distinct.insert(invariants[i]);
    }
    t.upper.push_back(roots.size());
    t.lower.push_back(distinct.size());
  }
  t.values = t.upper;
  t.note = "bracketed: conjugator radius " +
           std::to_string(opts.conjugator_radius);
  return t;
}

}  // namespace

std::string to_string(GrowthKind k) {
  switch (k) {
    case GrowthKind::gamma:
      return "gamma";
    case GrowthKind::xi:
      return "xi";
    case GrowthKind::pi:
      return "pi";
  }
  return "gamma";
}

GrowthKind parse_growth_kind(std::string_view s) {
  if (s == "gamma") {
    return GrowthKind::gamma;
  }
  if (s == "xi") {
    return GrowthKind::xi;
  }
  if (s == "pi") {
    return GrowthKind::pi;
  }
  throw InputError("unknown growth kind '" + std::string(s) + "'");
}

GrowthTable growth_table(const GroupEngine& e, const Ball& ball) {
  GrowthTable t = blank(e, GrowthKind::gamma, kDefaultBallBudget);
  for (std::size_t n = 0; n <= ball.radius; ++n) {
    t.values.push_back(ball.count_within(n));
  }
  return t;
}

GrowthTable growth_table(const GroupEngine& e, std::size_t N,
                         const GrowthOptions& opts) {
  GrowthTable t =
      growth_table(e, enumerate_ball(e, N, {opts.budget, opts.threads}));
  t.budget = opts.budget;
  return t;
}

GrowthTable conjugacy_growth_table(const GroupEngine& e, const Ball& ball,
                                   const GrowthOptions& opts) {
  if (e.conjugacy_capability() != ConjugacyCapability::canonical) {
    return bracketed_conjugacy_table(e, ball, opts);
  }
  GrowthTable t = blank(e, GrowthKind::xi, opts.budget);
  std::unordered_set<Payload, PayloadHash> keys;
  for (const auto& layer : ball.layers) {
    auto ks = map_layer(layer, opts.threads, [&](const Payload& g) {
      return class_key_payload(e, view(g));
    });
    keys.insert(ks.begin(), ks.end());
    t.values.push_back(keys.size());
  }
  return t;
}

GrowthTable conjugacy_growth_table(const GroupEngine& e, std::size_t N,
                                   const GrowthOptions& opts) {
  return conjugacy_growth_table(
      e, enumerate_ball(e, N, {opts.budget, opts.threads}), opts);
}

GrowthTable primitive_growth_table(const GroupEngine& e, const Ball& ball,
                                   const GrowthOptions& opts) {
  if (e.conjugacy_capability() != ConjugacyCapability::canonical) {
    throw CapabilityError("primitive conjugacy growth needs canonical class "
                          "keys; " +
                          e.descriptor().to_string() + " has capability " +
                          to_string(e.conjugacy_capability()));
  }
  GrowthTable t = blank(e, GrowthKind::pi, opts.budget);
  std::unordered_set<Payload, PayloadHash> keys;
  for (const auto& layer : ball.layers) {
    // Empty marks the identity or a non-primitive class.
    auto ks = map_layer(layer, opts.threads, [&](const Payload& g) {
      if (e.is_identity(view(g))) {
        return Payload{};
      }
      Payload key = class_key_payload(e, view(g));
      if (!is_primitive(e, view(key))) {
        return Payload{};
      }
      key.insert(key.begin(), 1);
      return key;
    });
    for (Payload& k : ks) {
      if (!k.empty()) {
        keys.insert(std::move(k));
      }
    }
    t.values.push_back(keys.size());
  }
  return t;
}

GrowthTable primitive_growth_table(const GroupEngine& e, std::size_t N,
                                   const GrowthOptions& opts) {
  return primitive_growth_table(
      e, enumerate_ball(e, N, {opts.budget, opts.threads}), opts);
}

Payload conjugacy_invariant(const GroupEngine& e, PayloadView g) {
  if (e.conjugacy_capability() == ConjugacyCapability::canonical) {
    Payload key = class_key_payload(e, g);
    key.insert(key.begin(), 1);
    return key;
  }
  if (e.kind() != EngineKind::hnn) {
    return Payload{0};
  }
  const auto& H = static_cast<const HnnEngine&>(e);
  const GroupEngine& B = H.base();
  HnnEngine::Reduction red = H.cyclic_reduce(g);
  if (H.t_length(view(red.core)) == 0 &&
      B.conjugacy_capability() == ConjugacyCapability::canonical) {
    Payload g0 = H.base_part(view(red.core));
    if (conjugate_into_cyclic(B, view(g0), view(H.edge_a())) == Verdict::no &&
        conjugate_into_cyclic(B, view(g0), view(H.edge_b())) == Verdict::no) {
      Payload key = class_key_payload(B, view(g0));
      key.insert(key.begin(), 1);
      return key;
    }
  }
  return Payload{0, detail::narrow_coordinate(H.t_exponent_sum(g))};
}

bool is_non_decreasing(const std::vector<std::uint64_t>& values) {
  return std::is_sorted(values.begin(), values.end());
}

bool within_exponential_bound(const std::vector<std::uint64_t>& values,
                              std::uint64_t a) {
  __extension__ typedef unsigned __int128 u128;
  u128 bound = 1;
  const u128 cap = static_cast<u128>(1) << 100;
  for (std::uint64_t v : values) {
    if (v > bound) {
      return false;
    }
    bound = bound >= cap ? cap : bound * a;
  }
  return true;
}

}  // namespace cgw
