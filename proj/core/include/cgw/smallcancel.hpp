#pragma once

// Symmetrized word sets, quasi-geodesic checks, pieces and the C / C1
// small cancellation conditions, and W-word generation.

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cgw/ball.hpp"
#include "cgw/engine.hpp"
#include "cgw/word.hpp"

namespace cgw {

using Rational = boost::rational<std::int64_t>;

// "p/q" or "p".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Letters usable in relator words: the engine's generators and, for free
// products, parabolic letters "i.[w]" denoting the element w of factor i.
// The finite letter set used for Y, Z and for distances holds the
// generators plus every parabolic letter whose word length in its factor is
// at most letter_bound.
class RelativeAlphabet {
 public:
  RelativeAlphabet(const GroupEngine& e, std::size_t letter_bound);

  const GroupEngine& engine() const noexcept { return e_; }
  std::size_t letter_bound() const noexcept { return letter_bound_; }
  const LetterSet& letters() const noexcept { return letters_; }

  Payload letter(const Letter& l) const;
  Payload evaluate(const Word& w) const;
  // Word length over letters(), nullopt when it exceeds max_radius. On free
  // products it is the sum over syllables h of ceil(|h| / letter_bound);
  // elsewhere a bounded search that may throw BudgetExceeded.
  std::optional<std::size_t> length(PayloadView g, std::size_t max_radius,
                                    std::size_t budget) const;

 private:
  const GroupEngine& e_;
  std::size_t letter_bound_;
  LetterSet letters_;
};

// Name of the parabolic letter for element h of factor i of a free product.
std::string parabolic_letter_name(const GroupEngine& e, int factor,
                                  PayloadView h);

class SymmetrizedSet {
 public:
  // Base words must be nonempty, freely and cyclically reduced.
  static SymmetrizedSet symmetrize(const std::vector<Word>& base);

  const std::vector<Word>& base() const noexcept { return base_; }
  // All cyclic shifts of every R and R^-1, sorted and deduplicated.
  const std::vector<Word>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::vector<Word> base_;
  std::vector<Word> members_;
};

// One DSL word per line; blank lines and lines starting with '#' skipped.
std::vector<Word> read_word_list(std::string_view text);

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);
// fail dominates inconclusive, which dominates pass.
CheckStatus combine(CheckStatus a, CheckStatus b);

struct QuasiGeodesicReport {
  CheckStatus status = CheckStatus::pass;
  Word worst;  // subword with the smallest margin (first failure if any)
  std::size_t worst_distance = 0;
  bool worst_distance_exact = true;  // false: only a lower bound
  Rational worst_margin{0};          // dist - lambda * |q| + c
  std::size_t subwords_checked = 0;
  std::size_t inconclusive = 0;
};

inline constexpr std::size_t kDefaultDistanceBudget = 2'000'000;

// Checks dist(1, q) >= lambda |q| - c for every subword q of every cyclic
// shift of R, with distances over the alphabet's letter set. A distance
// search that runs out of budget yields a lower bound; subwords that the
// bound cannot settle are inconclusive, never failures.
QuasiGeodesicReport quasigeodesic_check(
    const RelativeAlphabet& alphabet, const Word& R, const Rational& lambda,
    std::int64_t c, std::size_t budget = kDefaultDistanceBudget);

enum class PieceKind { epsilon, epsilon_prime };
std::string to_string(PieceKind k);

// epsilon: U = R[0, u_len), U' = R'[0, u2_len), U' = Y U Z, Y R Y^-1 != R'.
// epsilon_prime: R = U V U' V' with U = R[0, u_len), U' = R[u2_start,
// u2_start + u2_len), U' = Y U^sign Z (r2 == r).
struct PieceReport {
  PieceKind kind = PieceKind::epsilon;
  std::size_t r = 0;
  std::size_t r2 = 0;
  std::size_t u_len = 0;
  std::size_t u2_start = 0;
  std::size_t u2_len = 0;
  int sign = 1;
  Word y;
  Word z;
  Rational ratio{0};  // max(|U|, |U'|) / |R|

  auto key() const {
    return std::tuple(static_cast<int>(kind), r, r2, u_len, u2_start, u2_len,
                      sign);
  }
};

struct PieceOptions {
  std::size_t budget = 1'000'000'000;  // word-problem evaluations
  std::size_t threads = 1;
  std::size_t distance_budget = kDefaultDistanceBudget;
};

// All epsilon- and epsilon'-pieces with nonempty U and U'. A piece is
// reported when any (Y, Z) satisfies every clause; the reported witness is
// the first in shortlex ball order. Sorted by (kind, r, r2, positions).
std::vector<PieceReport> find_pieces(const RelativeAlphabet& alphabet,
                                     const SymmetrizedSet& S, std::size_t eps,
                                     const PieceOptions& opts = {});

struct SCParams {
  std::size_t eps = 0;
  Rational mu{1, 2};
  Rational lambda{1};
  std::int64_t c = 0;
  std::size_t rho = 1;
};

void validate(const SCParams& p);

struct SCReport {
  SCParams params;
  std::size_t letter_bound = 0;
  CheckStatus length = CheckStatus::pass;          // condition (1)
  std::vector<std::size_t> short_relators;         // members with |R| < rho
  CheckStatus quasigeodesic = CheckStatus::pass;   // condition (2)
  std::vector<QuasiGeodesicReport> quasigeodesic_reports;  // per base word
  CheckStatus pieces = CheckStatus::pass;          // (3), epsilon-pieces
  CheckStatus prime_pieces = CheckStatus::pass;    // (3), epsilon'-pieces
  std::vector<PieceReport> violations;
  std::size_t pieces_found = 0;
  CheckStatus c = CheckStatus::pass;
  CheckStatus c1 = CheckStatus::pass;
};

SCReport check_condition(const RelativeAlphabet& alphabet,
                         const SymmetrizedSet& S, const SCParams& params,
                         const PieceOptions& opts = {});

// W = x a_1 b_1 ... a_n b_n with a_i in factor alpha and b_i in factor beta
// of a free product.
struct WWordHypothesis {
  std::string name;
  std::string status;  // "verified", "failed" or "not checkable"
  std::string detail;
};

struct WWord {
  Word word;
  std::vector<Payload> a;  // factor payloads
  std::vector<Payload> b;
  std::vector<WWordHypothesis> certificate;
  bool certified() const;
};

// a_i = g_alpha^p_i and b_i = g_beta^q_i for the first generators of the
// factors; an empty plan means p_i = q_i = i.
WWord generate_W_word(const GroupEngine& e, const Word& x, std::size_t n,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>&
                          exponent_plan = {},
                      int alpha = 0, int beta = 1);

}  // namespace cgw
