#include <algorithm>
#include <numeric>

#include "cgw/engines.hpp"
#include "cgw/error.hpp"

namespace cgw {

namespace {

std::vector<std::string> prefixed_names(const GroupEngine& left,
                                        const GroupEngine& right) {
  std::vector<std::string> out;
  for (const auto& n : left.generators()) {
    out.push_back("0." + n);
  }
  for (const auto& n : right.generators()) {
    out.push_back("1." + n);
  }
  return out;
}

Word prefixed_word(const Word& w, int factor) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  const std::string prefix = std::to_string(factor) + ".";
  for (const Letter& l : w.letters()) {
    letters.push_back(Letter{prefix + l.generator, l.sign});
  }
  return Word(std::move(letters));
}

constexpr std::int64_t kMaxEnumeratedOrder = 1000000;

}  // namespace

DirectProductEngine::DirectProductEngine(GroupExpr descriptor, EnginePtr left,
                                         EnginePtr right)
    : GroupEngine(std::move(descriptor), prefixed_names(*left, *right)),
      factors_{std::move(left), std::move(right)} {}

ConjugacyCapability DirectProductEngine::conjugacy_capability() const {
  return std::max(factors_[0]->conjugacy_capability(),
                  factors_[1]->conjugacy_capability());
}

PayloadView DirectProductEngine::component(PayloadView g, int i) const {
  auto len0 = static_cast<std::size_t>(g[0]);
  if (i == 0) {
    return g.subspan(1, len0);
  }
  return g.subspan(1 + len0);
}

Payload DirectProductEngine::pair(PayloadView g0, PayloadView g1) const {
  Payload out;
  out.reserve(1 + g0.size() + g1.size());
  out.push_back(static_cast<std::int32_t>(g0.size()));
  out.insert(out.end(), g0.begin(), g0.end());
  out.insert(out.end(), g1.begin(), g1.end());
  return out;
}

Payload DirectProductEngine::embed(int factor, PayloadView h) const {
  if (factor == 0) {
    return pair(h, view(factors_[1]->identity()));
  }
  return pair(view(factors_[0]->identity()), h);
}

Payload DirectProductEngine::identity() const {
  return pair(view(factors_[0]->identity()), view(factors_[1]->identity()));
}

Payload DirectProductEngine::generator(std::size_t i) const {
  std::size_t r0 = factors_[0]->rank();
  if (i < r0) {
    return embed(0, view(factors_[0]->generator(i)));
  }
  return embed(1, view(factors_[1]->generator(i - r0)));
}

Payload DirectProductEngine::multiply(PayloadView g, PayloadView h) const {
  return pair(view(factors_[0]->multiply(component(g, 0), component(h, 0))),
              view(factors_[1]->multiply(component(g, 1), component(h, 1))));
}

Payload DirectProductEngine::invert(PayloadView g) const {
  return pair(view(factors_[0]->invert(component(g, 0))),
              view(factors_[1]->invert(component(g, 1))));
}

std::int64_t DirectProductEngine::order(PayloadView g) const {
  std::int64_t a = factors_[0]->order(component(g, 0));
  std::int64_t b = factors_[1]->order(component(g, 1));
  if (a == 0 || b == 0) {
    return 0;
  }
  return std::lcm(a, b);
}

PowerSolutions DirectProductEngine::power_solutions(PayloadView x,
                                                    PayloadView g) const {
  return intersect(
      factors_[0]->power_solutions(component(x, 0), component(g, 0)),
      factors_[1]->power_solutions(component(x, 1), component(g, 1)));
}

CosetRep DirectProductEngine::coset_rep(PayloadView x, PayloadView g) const {
  for (int i = 0; i < 2; ++i) {
    const GroupEngine& f = *factors_[i];
    if (f.order(component(x, i)) == 0) {
      // x^j is determined by its i-th component, which is already pinned
      // by the factor's coset representative.
      std::int64_t k = f.coset_rep(component(x, i), component(g, i)).k;
      Payload rep = multiply(view(power(x, -k)), g);
      return {k, rep};
    }
  }
  std::int64_t m = order(x);
  if (m > kMaxEnumeratedOrder) {
    throw Error("coset representative: element order " + std::to_string(m) +
                " too large to enumerate");
  }
  Payload best = to_payload(g);
  std::int64_t best_j = 0;
  Payload cur = to_payload(g);
  for (std::int64_t j = 1; j < m; ++j) {
    cur = multiply(x, view(cur));
    bool better = is_identity(view(cur)) ||
                  (!is_identity(view(best)) &&
                   shortlex_less(view(cur), view(best)));
    if (better) {
      best = cur;
      best_j = j;
    }
  }
  return {best_j == 0 ? 0 : m - best_j, best};
}

Word DirectProductEngine::to_word(PayloadView g) const {
  return prefixed_word(factors_[0]->to_word(component(g, 0)), 0) *
         prefixed_word(factors_[1]->to_word(component(g, 1)), 1);
}

bool DirectProductEngine::is_canonical(PayloadView p) const {
  if (p.empty() || p[0] < 0 || static_cast<std::size_t>(p[0]) + 1 > p.size()) {
    return false;
  }
  return factors_[0]->is_canonical(component(p, 0)) &&
         factors_[1]->is_canonical(component(p, 1));
}

}  // namespace cgw
