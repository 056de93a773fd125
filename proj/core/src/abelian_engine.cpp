#include "arith.hpp"
#include "cgw/engines.hpp"

namespace cgw {

using detail::narrow_coordinate;

namespace {

std::vector<std::string> abelian_generator_names(std::int64_t rank) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::int64_t i = 0; i < rank; ++i) {
    out.push_back(rank <= 3 ? std::string(small[i])
                            : "x" + std::to_string(i + 1));
  }
  return out;
}

}  // namespace

AbelianEngine::AbelianEngine(GroupExpr descriptor, std::int64_t rank)
    : GroupEngine(std::move(descriptor), abelian_generator_names(rank)),
      rank_(static_cast<std::size_t>(rank)) {}

Payload AbelianEngine::identity() const { return Payload(rank_, 0); }

Payload AbelianEngine::generator(std::size_t i) const {
  Payload g(rank_, 0);
  g[i] = 1;
  return g;
}

Payload AbelianEngine::multiply(PayloadView g, PayloadView h) const {
  Payload out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    out[i] = narrow_coordinate(std::int64_t{g[i]} + h[i]);
  }
  return out;
}

Payload AbelianEngine::invert(PayloadView g) const {
  Payload out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    out[i] = narrow_coordinate(-std::int64_t{g[i]});
  }
  return out;
}

std::int64_t AbelianEngine::order(PayloadView g) const {
  return is_identity(g) ? 1 : 0;
}

PowerSolutions AbelianEngine::power_solutions(PayloadView x,
                                              PayloadView g) const {
  std::size_t i = 0;
  while (i < rank_ && x[i] == 0) {
    ++i;
  }
  if (i == rank_) {
    return is_identity(g) ? PowerSolutions::all() : PowerSolutions::none();
  }
  if (g[i] % x[i] != 0) {
    return PowerSolutions::none();
  }
  std::int64_t k = g[i] / x[i];
  for (std::size_t j = 0; j < rank_; ++j) {
    if (std::int64_t{x[j]} * k != g[j]) {
      return PowerSolutions::none();
    }
  }
  return PowerSolutions::single(k);
}

CosetRep AbelianEngine::coset_rep(PayloadView x, PayloadView g) const {
  std::size_t i = 0;
  while (i < rank_ && x[i] == 0) {
    ++i;
  }
  if (i == rank_) {
    return {0, to_payload(g)};
  }
  std::int64_t target = detail::floor_mod(g[i], detail::abs64(x[i]));
  std::int64_t k = (g[i] - target) / x[i];
  Payload rep(rank_, 0);
  for (std::size_t j = 0; j < rank_; ++j) {
    rep[j] = narrow_coordinate(g[j] - detail::checked_mul(k, x[j]));
  }
  return {k, rep};
}

Word AbelianEngine::to_word(PayloadView g) const {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < rank_; ++i) {
    int sign = g[i] < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < detail::abs64(g[i]); ++k) {
      letters.push_back(Letter{generators()[i], sign});
    }
  }
  return Word(std::move(letters));
}

std::string AbelianEngine::format(PayloadView g) const {
  std::string out;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (g[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += generators()[i];
    if (g[i] != 1) {
      out += '^' + std::to_string(g[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool AbelianEngine::is_canonical(PayloadView p) const {
  return p.size() == rank_;
}

}  // namespace cgw
