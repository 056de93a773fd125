#include <unordered_map>
#include <unordered_set>

#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/growth.hpp"

namespace cgw {

namespace {

Payload embed_factor(const GroupEngine& e, int factor, PayloadView h) {
  if (e.kind() == EngineKind::free_product) {
    return static_cast<const FreeProductEngine&>(e).embed(factor, h);
  }
  return static_cast<const DirectProductEngine&>(e).embed(factor, h);
}

const GroupEngine& factor_of(const GroupEngine& e, int factor) {
  if (e.kind() == EngineKind::free_product) {
    return static_cast<const FreeProductEngine&>(e).factor(factor);
  }
  return static_cast<const DirectProductEngine&>(e).factor(factor);
}

}  // namespace

HatMetric::HatMetric(const GroupEngine& e, int factor, std::size_t radius,
                     std::size_t budget)
    : e_(e), factor_(factor), radius_(radius), budget_(budget) {
  if (e.kind() != EngineKind::free_product &&
      e.kind() != EngineKind::direct_product) {
    throw InputError("the relative metric needs a free or direct product, got " +
                     e.descriptor().to_string());
  }
  if (factor != 0 && factor != 1) {
    throw InputError("designated factor must be 0 or 1");
  }
  const GroupEngine& H = factor_of(e, factor);
  const GroupEngine& other = factor_of(e, 1 - factor);

  Ball hb = enumerate_ball(H, radius, {budget, 1});
  for (const auto& layer : hb.layers) {
    for (const Payload& h : layer) {
      if (!H.is_identity(view(h))) {
        h_letters_.push_back(embed_factor(e, factor, view(h)));
      }
    }
  }
  LetterSet xs = LetterSet::standard(other);
  for (const Payload& x : xs.letters()) {
    x_letters_.push_back(embed_factor(e, 1 - factor, view(x)));
  }
}

bool HatMetric::in_subgroup(PayloadView g) const {
  if (e_.kind() == EngineKind::free_product) {
    const auto& fp = static_cast<const FreeProductEngine&>(e_);
    auto syls = fp.syllables(g);
    return syls.empty() || (syls.size() == 1 && syls[0].factor == factor_);
  }
  const auto& dp = static_cast<const DirectProductEngine&>(e_);
  return dp.factor(1 - factor_).is_identity(dp.component(g, 1 - factor_));
}

std::vector<Payload> HatMetric::neighbours(
    const Payload& g) const {
  std::vector<Payload> out;
  for (const Payload& x : x_letters_) {
    out.push_back(e_.multiply(view(g), view(x)));
  }
  // Edges of the subgroup's own Cayley graph are excluded.
  if (!in_subgroup(view(g))) {
    for (const Payload& h : h_letters_) {
      out.push_back(e_.multiply(view(g), view(h)));
    }
  }
  return out;
}

HatMetricResult HatMetric::distance(PayloadView h1, PayloadView h2) const {
  if (!in_subgroup(h1) || !in_subgroup(h2)) {
    throw InputError("relative distance is defined on the designated factor only");
  }
  HatMetricResult out{to_payload(h1), to_payload(h2), std::nullopt, radius_};
  if (out.h1 == out.h2) {
    out.value = 0;
    return out;
  }
  using Map = std::unordered_map<Payload, std::uint32_t, PayloadHash>;
  Map dist[2];
  std::vector<Payload> frontier[2] = {{out.h1}, {out.h2}};
  std::size_t depth[2] = {0, 0};
  dist[0].emplace(out.h1, 0);
  dist[1].emplace(out.h2, 0);
  while (depth[0] + depth[1] < radius_) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) {
      return out;
    }
    std::uint32_t d = static_cast<std::uint32_t>(depth[side] + 1);
    std::vector<Payload> next;
    for (const Payload& g : frontier[side]) {
      for (Payload& y : neighbours(g)) {
        if (!dist[side].emplace(y, d).second) {
          continue;
        }
        auto hit = dist[1 - side].find(y);
        if (hit != dist[1 - side].end()) {
          std::size_t total = d + hit->second;
          if (!out.value || total < *out.value) {
            out.value = total;
          }
        }
        next.push_back(std::move(y));
      }
    }
    depth[side] = d;
    frontier[side] = std::move(next);
    if (out.value) {
      return out;
    }
    if (dist[0].size() + dist[1].size() > budget_) {
      throw BudgetExceeded("relative distance search exceeded the budget of " +
                               std::to_string(budget_) + " elements",
                           depth[0] + depth[1]);
    }
  }
  return out;
}

std::size_t HatMetric::subgroup_ball_size(std::size_t r) const {
  Payload one = e_.identity();
  std::unordered_set<Payload, PayloadHash> seen{one};
  std::vector<Payload> frontier{one};
  std::size_t count = 1;
  for (std::size_t d = 1; d <= r && !frontier.empty(); ++d) {
    std::vector<Payload> next;
    for (const Payload& g : frontier) {
      for (Payload& y : neighbours(g)) {
        if (seen.insert(y).second) {
          if (in_subgroup(view(y))) {
            ++count;
          }
          next.push_back(std::move(y));
        }
      }
    }
    if (seen.size() > budget_) {
      throw BudgetExceeded("relative ball exceeded the budget of " +
                               std::to_string(budget_) + " elements",
                           d - 1);
    }
    frontier = std::move(next);
  }
  return count;
}

HatMetricResult hat_distance(const GroupEngine& e, int factor, PayloadView h1,
                             PayloadView h2, std::size_t radius) {
  return HatMetric(e, factor, radius).distance(h1, h2);
}

}  // namespace cgw
