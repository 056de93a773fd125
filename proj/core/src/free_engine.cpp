#include <algorithm>

#include "cgw/engines.hpp"
#include "cgw/error.hpp"

namespace cgw {

namespace {

std::vector<std::string> free_generator_names(std::int64_t rank) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::int64_t i = 0; i < rank; ++i) {
    out.push_back(rank <= 3 ? std::string(small[i])
                            : "x" + std::to_string(i + 1));
  }
  return out;
}

}  // namespace

FreeEngine::FreeEngine(GroupExpr descriptor, std::int64_t rank)
    : GroupEngine(std::move(descriptor), free_generator_names(rank)) {}

Payload FreeEngine::generator(std::size_t i) const {
  return {static_cast<std::int32_t>(2 * i)};
}

Payload FreeEngine::multiply(PayloadView g, PayloadView h) const {
  std::size_t k = 0;
  std::size_t limit = std::min(g.size(), h.size());
  while (k < limit && g[g.size() - 1 - k] == inverse_code(h[k])) {
    ++k;
  }
  Payload out;
  out.reserve(g.size() + h.size() - 2 * k);
  out.insert(out.end(), g.begin(), g.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), h.begin() + static_cast<std::ptrdiff_t>(k), h.end());
  return out;
}

Payload FreeEngine::invert(PayloadView g) const {
  Payload out(g.rbegin(), g.rend());
  for (auto& c : out) {
    c = inverse_code(c);
  }
  return out;
}

std::int64_t FreeEngine::order(PayloadView g) const { return g.empty() ? 1 : 0; }

FreeEngine::Reduction FreeEngine::cyclic_reduce(PayloadView g) const {
  std::size_t lo = 0;
  std::size_t hi = g.size();
  while (hi - lo >= 2 && g[lo] == inverse_code(g[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Payload(g.begin() + static_cast<std::ptrdiff_t>(lo),
                  g.begin() + static_cast<std::ptrdiff_t>(hi)),
          Payload(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(lo))};
}

PowerSolutions FreeEngine::power_solutions(PayloadView x, PayloadView g) const {
  if (x.empty()) {
    return g.empty() ? PowerSolutions::all() : PowerSolutions::none();
  }
  Reduction red = cyclic_reduce(x);
  Payload pinv = invert(view(red.conjugator));
  Payload w = multiply(view(multiply(view(pinv), g)), view(red.conjugator));
  if (w.empty()) {
    return PowerSolutions::single(0);
  }
  if (w.size() % red.core.size() != 0) {
    return PowerSolutions::none();
  }
  auto k = static_cast<std::int64_t>(w.size() / red.core.size());
  if (power(view(red.core), k) == w) {
    return PowerSolutions::single(k);
  }
  if (power(view(red.core), -k) == w) {
    return PowerSolutions::single(-k);
  }
  return PowerSolutions::none();
}

CosetRep FreeEngine::coset_rep(PayloadView x, PayloadView g) const {
  if (x.empty()) {
    return {0, to_payload(g)};
  }
  // x = p r p^-1 and x^j g = p r^j w with w = p^-1 g. |x^j g| > |g| once
  // |j| |r| > |g| + |w| + |p|, so the shortlex-least x^j g lies in a
  // bounded window; the identity wins whenever g lies in <x>.
  Reduction red = cyclic_reduce(x);
  const Payload& p = red.conjugator;
  const Payload& r = red.core;
  Payload w = multiply(view(invert(view(p))), g);
  auto window = static_cast<std::int64_t>(
      (g.size() + w.size() + p.size()) / r.size() + 1);
  Payload rinv = invert(view(r));

  Payload best = to_payload(g);
  std::int64_t best_j = 0;
  Payload up = w;
  Payload down = w;
  for (std::int64_t j = 1; j <= window; ++j) {
    up = multiply(view(r), view(up));
    down = multiply(view(rinv), view(down));
    Payload cu = multiply(view(p), view(up));
    Payload cd = multiply(view(p), view(down));
    if (shortlex_less(view(cu), view(best))) {
      best = std::move(cu);
      best_j = j;
    }
    if (shortlex_less(view(cd), view(best))) {
      best = std::move(cd);
      best_j = -j;
    }
  }
  return {-best_j, best};
}

Word FreeEngine::to_word(PayloadView g) const {
  std::vector<Letter> letters;
  letters.reserve(g.size());
  for (std::int32_t c : g) {
    letters.push_back(
        Letter{generators()[static_cast<std::size_t>(c / 2)], (c & 1) ? -1 : 1});
  }
  return Word(std::move(letters));
}

bool FreeEngine::is_canonical(PayloadView p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= 2 * rank()) {
      return false;
    }
    if (i > 0 && p[i] == inverse_code(p[i - 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace cgw
