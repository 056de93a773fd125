#include "arith.hpp"
#include "cgw/engines.hpp"

namespace cgw {

using detail::floor_mod;

CyclicEngine::CyclicEngine(GroupExpr descriptor, std::int64_t order)
    : GroupEngine(std::move(descriptor), {"u"}), n_(order) {}

Payload CyclicEngine::generator(std::size_t) const {
  return {static_cast<std::int32_t>(floor_mod(1, n_))};
}

Payload CyclicEngine::multiply(PayloadView g, PayloadView h) const {
  return {static_cast<std::int32_t>(
      floor_mod(std::int64_t{g[0]} + std::int64_t{h[0]}, n_))};
}

Payload CyclicEngine::invert(PayloadView g) const {
  return {static_cast<std::int32_t>(floor_mod(-std::int64_t{g[0]}, n_))};
}

std::int64_t CyclicEngine::order(PayloadView g) const {
  return n_ / std::gcd(std::int64_t{g[0]}, n_);
}

PowerSolutions CyclicEngine::power_solutions(PayloadView x,
                                             PayloadView g) const {
  // s*k = t (mod n)
  std::int64_t s = x[0];
  std::int64_t t = g[0];
  std::int64_t d = std::gcd(s, n_);
  if (t % d != 0) {
    return PowerSolutions::none();
  }
  std::int64_t m = n_ / d;
  std::int64_t k = floor_mod((t / d) * detail::mod_inverse(s / d, m), m);
  return PowerSolutions::progression(k, m);
}

CosetRep CyclicEngine::coset_rep(PayloadView x, PayloadView g) const {
  std::int64_t d = std::gcd(std::int64_t{x[0]}, n_);
  std::int64_t rep = floor_mod(g[0], d);
  Payload diff{static_cast<std::int32_t>(floor_mod(g[0] - rep, n_))};
  std::int64_t k = power_solutions(x, view(diff)).representative();
  return {k, Payload{static_cast<std::int32_t>(rep)}};
}

Word CyclicEngine::to_word(PayloadView g) const {
  return Word(std::vector<Letter>(static_cast<std::size_t>(g[0]),
                                  Letter{"u", 1}));
}

std::string CyclicEngine::format(PayloadView g) const {
  if (g[0] == 0) {
    return "1";
  }
  return g[0] == 1 ? std::string("u") : "u^" + std::to_string(g[0]);
}

bool CyclicEngine::is_canonical(PayloadView p) const {
  return p.size() == 1 && p[0] >= 0 && p[0] < n_;
}

}  // namespace cgw
