#include "arith.hpp"
#include "cgw/engines.hpp"

namespace cgw {

using detail::checked_mul;
using detail::narrow_coordinate;

HeisenbergEngine::HeisenbergEngine(GroupExpr descriptor)
    : GroupEngine(std::move(descriptor), {"a", "b", "c"}) {}

Payload HeisenbergEngine::make(std::int64_t a, std::int64_t b,
                               std::int64_t c) {
  return {narrow_coordinate(a), narrow_coordinate(b), narrow_coordinate(c)};
}

Payload HeisenbergEngine::generator(std::size_t i) const {
  Payload g{0, 0, 0};
  g[i] = 1;
  return g;
}

Payload HeisenbergEngine::multiply(PayloadView g, PayloadView h) const {
  return make(std::int64_t{g[0]} + h[0], std::int64_t{g[1]} + h[1],
              std::int64_t{g[2]} + h[2] + std::int64_t{g[0]} * h[1]);
}

Payload HeisenbergEngine::invert(PayloadView g) const {
  return make(-std::int64_t{g[0]}, -std::int64_t{g[1]},
              -std::int64_t{g[2]} + std::int64_t{g[0]} * g[1]);
}

std::int64_t HeisenbergEngine::order(PayloadView g) const {
  return is_identity(g) ? 1 : 0;
}

namespace {

// x^k = (k p, k q, k r + k(k-1)/2 p q); valid for all integers k.
Payload heisenberg_power(PayloadView x, std::int64_t k) {
  std::int64_t pq = checked_mul(x[0], x[1]);
  std::int64_t tri = checked_mul(k, k - 1) / 2;
  return HeisenbergEngine::make(
      checked_mul(k, x[0]), checked_mul(k, x[1]),
      checked_mul(k, x[2]) + checked_mul(tri, pq));
}

}  // namespace

PowerSolutions HeisenbergEngine::power_solutions(PayloadView x,
                                                 PayloadView g) const {
  std::int64_t k = 0;
  if (x[0] != 0 || x[1] != 0) {
    int i = x[0] != 0 ? 0 : 1;
    if (g[i] % x[i] != 0) {
      return PowerSolutions::none();
    }
    k = g[i] / x[i];
  } else if (x[2] != 0) {
    if (g[0] != 0 || g[1] != 0 || g[2] % x[2] != 0) {
      return PowerSolutions::none();
    }
    k = g[2] / x[2];
  } else {
    return is_identity(g) ? PowerSolutions::all() : PowerSolutions::none();
  }
  Payload xk = heisenberg_power(x, k);
  if (std::equal(g.begin(), g.end(), xk.begin(), xk.end())) {
    return PowerSolutions::single(k);
  }
  return PowerSolutions::none();
}

CosetRep HeisenbergEngine::coset_rep(PayloadView x, PayloadView g) const {
  // x^k g has first coordinates (k p + g0, k q + g1); pin the first
  // nonzero one into [0, |p|) (or the center coordinate when p = q = 0).
  std::int64_t k = 0;
  if (x[0] != 0 || x[1] != 0) {
    int i = x[0] != 0 ? 0 : 1;
    std::int64_t target = detail::floor_mod(g[i], detail::abs64(x[i]));
    k = (target - g[i]) / x[i];
  } else if (x[2] != 0) {
    std::int64_t target = detail::floor_mod(g[2], detail::abs64(x[2]));
    k = (target - g[2]) / x[2];
  } else {
    return {0, to_payload(g)};
  }
  Payload xk = heisenberg_power(x, k);
  return {-k, multiply(view(xk), g)};
}

Word HeisenbergEngine::to_word(PayloadView g) const {
  // (a, b, c) = a^a b^b c^(c - ab)
  std::int64_t exps[3] = {g[0], g[1], std::int64_t{g[2]} - std::int64_t{g[0]} * g[1]};
  std::vector<Letter> letters;
  for (int i = 0; i < 3; ++i) {
    int sign = exps[i] < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < detail::abs64(exps[i]); ++k) {
      letters.push_back(Letter{generators()[static_cast<std::size_t>(i)], sign});
    }
  }
  return Word(std::move(letters));
}

std::string HeisenbergEngine::format(PayloadView g) const {
  std::int64_t exps[3] = {g[0], g[1], std::int64_t{g[2]} - std::int64_t{g[0]} * g[1]};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (exps[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += generators()[static_cast<std::size_t>(i)];
    if (exps[i] != 1) {
      out += '^' + std::to_string(exps[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool HeisenbergEngine::is_canonical(PayloadView p) const {
  return p.size() == 3;
}

}  // namespace cgw
