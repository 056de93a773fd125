#pragma once

// Growth tables (ordinary, conjugacy, primitive conjugacy), the relative
// metric on a designated factor, and translation-number estimates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgw/ball.hpp"
#include "cgw/engine.hpp"

namespace cgw {

enum class GrowthKind { gamma, xi, pi };
std::string to_string(GrowthKind k);
GrowthKind parse_growth_kind(std::string_view s);

// values[n] for n = 0..N. Bracketed tables carry lower[n] <= true value <=
// upper[n]; values then holds the upper bound.
struct GrowthTable {
  GrowthKind kind = GrowthKind::gamma;
  std::string engine;
  std::vector<std::string> generators;
  std::vector<std::uint64_t> values;
  bool bracketed = false;
  std::vector<std::uint64_t> lower;
  std::vector<std::uint64_t> upper;
  std::size_t budget = kDefaultBallBudget;
  std::string note;

  std::size_t radius() const noexcept {
    return values.empty() ? 0 : values.size() - 1;
  }
  bool operator==(const GrowthTable&) const = default;
};

struct GrowthOptions {
  std::size_t budget = kDefaultBallBudget;
  std::size_t threads = 1;
  // Bracketed mode: cap on conjugation tests (ball size times conjugator
  // ball size) and the conjugator radius used to merge classes.
  std::size_t pair_budget = 100'000'000;
  std::size_t conjugator_radius = 2;
};

GrowthTable growth_table(const GroupEngine& e, std::size_t N,
                         const GrowthOptions& opts = {});
GrowthTable growth_table(const GroupEngine& e, const Ball& ball);

// Exact for canonical engines. Bounded-search engines get a bracketed
// table: upper counts the classes left after merging by found conjugators,
// lower counts distinct values of an exact conjugacy invariant.
GrowthTable conjugacy_growth_table(const GroupEngine& e, std::size_t N,
                                   const GrowthOptions& opts = {});
GrowthTable conjugacy_growth_table(const GroupEngine& e, const Ball& ball,
                                   const GrowthOptions& opts = {});

// Canonical engines only.
GrowthTable primitive_growth_table(const GroupEngine& e, std::size_t N,
                                   const GrowthOptions& opts = {});
GrowthTable primitive_growth_table(const GroupEngine& e, const Ball& ball,
                                   const GrowthOptions& opts = {});

// A conjugacy invariant used for the lower bound of bracketed tables.
Payload conjugacy_invariant(const GroupEngine& e, PayloadView g);

bool is_non_decreasing(const std::vector<std::uint64_t>& values);
// values[n] <= a^n for every n.
bool within_exponential_bound(const std::vector<std::uint64_t>& values,
                              std::uint64_t a);

// The relative metric on a factor H of a direct or free product G, over the
// generators of the other factor together with every nontrivial element of
// H of word length (in H) at most the search radius, never using an
// H-labelled edge between two elements of H.
struct HatMetricResult {
  Payload h1;
  Payload h2;
  std::optional<std::size_t> value;  // nullopt: not found within radius
  std::size_t radius = 0;
};

class HatMetric {
 public:
  // factor is the index (0 or 1) of H inside the product engine e.
  HatMetric(const GroupEngine& e, int factor, std::size_t radius,
            std::size_t budget = kDefaultBallBudget);

  bool in_subgroup(PayloadView g) const;
  HatMetricResult distance(PayloadView h1, PayloadView h2) const;
  // Number of elements of H within relative distance r of the identity.
  std::size_t subgroup_ball_size(std::size_t r) const;

  const std::vector<Payload>& subgroup_letters() const { return h_letters_; }
  const std::vector<Payload>& other_letters() const { return x_letters_; }

 private:
  std::vector<Payload> neighbours(const Payload& g) const;

  const GroupEngine& e_;
  int factor_;
  std::size_t radius_;
  std::size_t budget_;
  std::vector<Payload> h_letters_;
  std::vector<Payload> x_letters_;
};

HatMetricResult hat_distance(const GroupEngine& e, int factor, PayloadView h1,
                             PayloadView h2, std::size_t radius);

// |g^n| / n for n = 1..N over the standard generators.
struct TranslationEstimate {
  Payload element;
  std::vector<std::size_t> lengths;  // lengths[n-1] = |g^n|
  std::size_t inf_numerator = 0;     // running infimum as a fraction
  std::size_t inf_denominator = 1;
  // The running infimum dropped during the last half of the samples.
  bool distorted = false;

  double sample(std::size_t n) const {
    return static_cast<double>(lengths[n - 1]) / static_cast<double>(n);
  }
};

TranslationEstimate translation_number_estimate(
    const GroupEngine& e, PayloadView g, std::size_t N,
    std::size_t budget = kDefaultBallBudget);

}  // namespace cgw
