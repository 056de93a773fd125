#pragma once

// Balls in Cayley graphs: layered breadth-first enumeration and
// bidirectional word-length search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cgw/engine.hpp"

namespace cgw {

inline constexpr std::size_t kDefaultBallBudget = 10'000'000;

// A finite symmetric set of letters (generators and their inverses, plus
// optional extra letters) together with a printable label per letter.
class LetterSet {
 public:
  // X u X^-1 for the engine's generating set.
  static LetterSet standard(const GroupEngine& e);
  // The given words and their inverses, deduplicated; identity words dropped.
  static LetterSet from_words(const GroupEngine& e,
                              const std::vector<Word>& words);

  // Adds g and g^-1 unless present or trivial.
  void add(const GroupEngine& e, Payload g, Word label);

  const std::vector<Payload>& letters() const noexcept { return letters_; }
  const std::vector<Word>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return letters_.size(); }
  // Index of the inverse letter.
  std::size_t inverse_of(std::size_t i) const { return inverse_[i]; }

 private:
  std::vector<Payload> letters_;
  std::vector<Word> labels_;
  std::vector<std::size_t> inverse_;
};

struct BallOptions {
  std::size_t budget = kDefaultBallBudget;
  std::size_t threads = 1;
};

// B(n) with exact word lengths. layers[r] holds the elements of length r in
// shortlex payload order, so the layout is independent of thread count.
struct Ball {
  std::uint64_t engine_tag = 0;
  std::size_t radius = 0;
  std::vector<std::vector<Payload>> layers;
  std::unordered_map<Payload, std::uint32_t, PayloadHash> length;

  std::size_t size() const noexcept { return length.size(); }
  std::size_t count_within(std::size_t r) const;
  bool contains(const Payload& g) const { return length.count(g) != 0; }
  std::optional<std::size_t> length_of(const Payload& g) const;
};

// Throws BudgetExceeded once the ball would exceed options.budget elements.
Ball enumerate_ball(const GroupEngine& e, std::size_t radius,
                    const BallOptions& options = {});
Ball enumerate_ball(const GroupEngine& e, const LetterSet& letters,
                    std::size_t radius, const BallOptions& options = {});

// |g| over the letter set when it is at most max_radius, by bidirectional
// search from 1 and g; nullopt beyond. Throws BudgetExceeded when the
// explored region exceeds the budget.
std::optional<std::size_t> word_length(const GroupEngine& e,
                                       const LetterSet& letters, PayloadView g,
                                       std::size_t max_radius,
                                       std::size_t budget = kDefaultBallBudget);

}  // namespace cgw
