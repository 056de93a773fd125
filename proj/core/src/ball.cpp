#include "cgw/ball.hpp"

#include <algorithm>
#include <unordered_set>

#include "cgw/error.hpp"
#include "parallel.hpp"

namespace cgw {

LetterSet LetterSet::standard(const GroupEngine& e) {
  LetterSet out;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    out.add(e, e.generator(i), Word::letter(e.generators()[i]));
  }
  return out;
}

LetterSet LetterSet::from_words(const GroupEngine& e,
                                const std::vector<Word>& words) {
  LetterSet out;
  for (const Word& w : words) {
    out.add(e, e.evaluate(w), w);
  }
  return out;
}

void LetterSet::add(const GroupEngine& e, Payload g, Word label) {
  if (e.is_identity(view(g)) ||
      std::find(letters_.begin(), letters_.end(), g) != letters_.end()) {
    return;
  }
  Payload inv = e.invert(view(g));
  std::size_t i = letters_.size();
  letters_.push_back(std::move(g));
  labels_.push_back(label);
  if (inv == letters_.back()) {
    inverse_.push_back(i);
    return;
  }
  letters_.push_back(std::move(inv));
  labels_.push_back(label.inverse());
  inverse_.push_back(i + 1);
  inverse_.push_back(i);
}

std::size_t Ball::count_within(std::size_t r) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i <= r && i < layers.size(); ++i) {
    n += layers[i].size();
  }
  return n;
}

std::optional<std::size_t> Ball::length_of(const Payload& g) const {
  auto it = length.find(g);
  if (it == length.end()) {
    return std::nullopt;
  }
  return it->second;
}

Ball enumerate_ball(const GroupEngine& e, std::size_t radius,
                    const BallOptions& options) {
  return enumerate_ball(e, LetterSet::standard(e), radius, options);
}

Ball enumerate_ball(const GroupEngine& e, const LetterSet& letters,
                    std::size_t radius, const BallOptions& options) {
  Ball ball;
  ball.engine_tag = e.tag();
  ball.layers.push_back({e.identity()});
  ball.length.emplace(e.identity(), 0);
  PayloadHash hasher;

  for (std::size_t r = 1; r <= radius; ++r) {
    const std::vector<Payload>& frontier = ball.layers.back();
    std::size_t threads =
        detail::effective_threads(options.threads, frontier.size() / 64 + 1);

    // Phase 1: expand chunks of the frontier into per-owner buckets.
    std::vector<std::vector<std::vector<Payload>>> buckets(
        threads, std::vector<std::vector<Payload>>(threads));
    detail::run_workers(threads, [&](std::size_t w) {
      auto [lo, hi] = detail::chunk(frontier.size(), w, threads);
      for (std::size_t i = lo; i < hi; ++i) {
        for (const Payload& l : letters.letters()) {
          Payload next = e.multiply(view(frontier[i]), view(l));
          if (ball.length.count(next) != 0) {
            continue;
          }
          buckets[w][hasher(next) % threads].push_back(std::move(next));
        }
      }
    });

    // Phase 2: each owner deduplicates its hash partition.
    std::vector<std::vector<Payload>> owned(threads);
    detail::run_workers(threads, [&](std::size_t owner) {
      std::unordered_set<Payload, PayloadHash> seen;
      for (std::size_t w = 0; w < threads; ++w) {
        for (Payload& p : buckets[w][owner]) {
          if (seen.insert(p).second) {
            owned[owner].push_back(std::move(p));
          }
        }
      }
    });

    std::vector<Payload> layer;
    for (auto& part : owned) {
      std::move(part.begin(), part.end(), std::back_inserter(layer));
    }
    std::sort(layer.begin(), layer.end(), ShortlexLess{});
    if (ball.length.size() + layer.size() > options.budget) {
      throw BudgetExceeded("ball enumeration exceeded the budget of " +
                               std::to_string(options.budget) + " elements",
                           r - 1);
    }
    for (const Payload& p : layer) {
      ball.length.emplace(p, static_cast<std::uint32_t>(r));
    }
    ball.layers.push_back(std::move(layer));
    ball.radius = r;
  }
  return ball;
}

std::optional<std::size_t> word_length(const GroupEngine& e,
                                       const LetterSet& letters, PayloadView g,
                                       std::size_t max_radius,
                                       std::size_t budget) {
  Payload start = e.identity();
  Payload goal = to_payload(g);
  if (start == goal) {
    return 0;
  }
  using Map = std::unordered_map<Payload, std::uint32_t, PayloadHash>;
  Map dist[2];
  std::vector<Payload> frontier[2];
  std::size_t depth[2] = {0, 0};
  dist[0].emplace(start, 0);
  dist[1].emplace(goal, 0);
  frontier[0].push_back(start);
  frontier[1].push_back(goal);

  while (depth[0] + depth[1] < max_radius) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) {
      return std::nullopt;
    }
    std::vector<Payload> next;
    std::optional<std::size_t> best;
    std::uint32_t d = static_cast<std::uint32_t>(depth[side] + 1);
    for (const Payload& x : frontier[side]) {
      for (const Payload& l : letters.letters()) {
        Payload y = e.multiply(view(x), view(l));
        if (!dist[side].emplace(y, d).second) {
          continue;
        }
        auto hit = dist[1 - side].find(y);
        if (hit != dist[1 - side].end()) {
          std::size_t total = d + hit->second;
          if (!best || total < *best) {
            best = total;
          }
        }
        next.push_back(std::move(y));
      }
    }
    depth[side] = d;
    frontier[side] = std::move(next);
    if (best) {
      return best;
    }
    if (dist[0].size() + dist[1].size() > budget) {
      throw BudgetExceeded("word-length search exceeded the budget of " +
                               std::to_string(budget) + " elements",
                           depth[0] + depth[1]);
    }
  }
  return std::nullopt;
}

}  // namespace cgw
