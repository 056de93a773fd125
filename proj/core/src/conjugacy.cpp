#include "cgw/conjugacy.hpp"

#include <algorithm>
#include <numeric>

#include "arith.hpp"
#include "cgw/ball.hpp"
#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/hnn.hpp"

namespace cgw {

namespace {

constexpr std::int64_t kMaxFinitePowerScan = 1000000;

// Booth's least rotation.
std::size_t least_rotation(PayloadView s) {
  const std::size_t n = s.size();
  if (n == 0) {
    return 0;
  }
  std::vector<std::int32_t> d(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    d[i] = s[i % n];
  }
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < static_cast<std::ptrdiff_t>(2 * n); ++j) {
    std::int32_t sj = d[static_cast<std::size_t>(j)];
    std::ptrdiff_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != d[static_cast<std::size_t>(k + i + 1)]) {
      if (sj < d[static_cast<std::size_t>(k + i + 1)]) {
        k = j - i - 1;
      }
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != d[static_cast<std::size_t>(k + i + 1)]) {
      if (sj < d[static_cast<std::size_t>(k)]) {
        k = j;
      }
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k) % n;
}

// Smallest period p of the sequence (p = n when aperiodic as a string).
template <typename Eq>
std::size_t smallest_period(std::size_t n, Eq&& eq) {
  if (n == 0) {
    return 0;
  }
  std::vector<std::size_t> fail(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && !eq(i, k)) {
      k = fail[k];
    }
    if (eq(i, k)) {
      ++k;
    }
    fail[i + 1] = k;
  }
  return n - fail[n];
}

// m with core = r^m for r primitive, for a cyclically reduced sequence.
template <typename Eq>
std::size_t power_multiplicity(std::size_t n, Eq&& eq) {
  if (n == 0) {
    return 0;
  }
  std::size_t p = smallest_period(n, eq);
  return n % p == 0 ? n / p : 1;
}

std::size_t free_multiplicity(PayloadView core) {
  return power_multiplicity(
      core.size(), [&](std::size_t i, std::size_t j) { return core[i] == core[j]; });
}

std::size_t syllable_multiplicity(
    const std::vector<FreeProductEngine::Syllable>& syls) {
  return power_multiplicity(syls.size(), [&](std::size_t i, std::size_t j) {
    return syls[i].factor == syls[j].factor &&
           std::equal(syls[i].data.begin(), syls[i].data.end(),
                      syls[j].data.begin(), syls[j].data.end());
  });
}

void require_canonical(const GroupEngine& e) {
  if (e.conjugacy_capability() != ConjugacyCapability::canonical) {
    throw CapabilityError("engine " + e.descriptor().to_string() +
                          " has conjugacy capability " +
                          to_string(e.conjugacy_capability()) +
                          "; canonical class keys are not available");
  }
}

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

KeyWithConjugator key_with_conjugator(const GroupEngine& e, PayloadView g) {
  require_canonical(e);
  switch (e.kind()) {
    case EngineKind::free: {
      const auto& f = static_cast<const FreeEngine&>(e);
      FreeEngine::Reduction red = f.cyclic_reduce(g);
      std::size_t k = least_rotation(view(red.core));
      auto split = red.core.begin() + static_cast<std::ptrdiff_t>(k);
      Payload rotated(split, red.core.end());
      rotated.insert(rotated.end(), red.core.begin(), split);
      Payload u(red.core.begin(), split);
      return {std::move(rotated), f.multiply(view(red.conjugator), view(u))};
    }
    case EngineKind::cyclic:
    case EngineKind::abelian:
      return {to_payload(g), e.identity()};
    case EngineKind::heisenberg: {
      // u g u^-1 = (a, b, c + x b - a y) for u = (x, y, z).
      std::int64_t a = g[0];
      std::int64_t b = g[1];
      std::int64_t c = g[2];
      detail::ExtendedGcd eg = detail::extended_gcd(a, b);
      if (eg.g == 0) {
        return {to_payload(g), e.identity()};
      }
      std::int64_t target = detail::floor_mod(c, eg.g);
      std::int64_t d = target - c;
      // Solve x b - a y = d with x reduced mod a / gcd.
      std::int64_t x = 0;
      std::int64_t y = 0;
      if (a == 0) {
        x = d / b;
      } else {
        std::int64_t q = d / eg.g;
        std::int64_t m = detail::abs64(a / eg.g);
        x = detail::floor_mod(detail::floor_mod(eg.y, m) * detail::floor_mod(q, m), m);
        y = (detail::checked_mul(x, b) - d) / a;
      }
      Payload u = HeisenbergEngine::make(x, y, 0);
      return {HeisenbergEngine::make(a, b, target), e.invert(view(u))};
    }
    case EngineKind::finite: {
      const auto& f = static_cast<const FiniteEngine&>(e);
      return {Payload{f.class_representative(g[0])},
              Payload{f.class_conjugator(g[0])}};
    }
    case EngineKind::free_product: {
      const auto& fp = static_cast<const FreeProductEngine&>(e);
      FreeProductEngine::Reduction red = fp.cyclic_reduce(g);
      auto syls = fp.syllables(view(red.core));
      if (syls.empty()) {
        return {Payload{}, Payload{}};
      }
      if (syls.size() == 1) {
        int fi = syls[0].factor;
        KeyWithConjugator inner = key_with_conjugator(fp.factor(fi), syls[0].data);
        Payload u = fp.embed(fi, view(inner.conjugator));
        return {fp.embed(fi, view(inner.key)),
                fp.multiply(view(red.conjugator), view(u))};
      }
      Payload best;
      Payload best_u;
      for (std::size_t k = 0; k < syls.size(); ++k) {
        auto [rotated, u] = fp.rotate(view(red.core), k);
        if (k == 0 || std::lexicographical_compare(
                          rotated.begin(), rotated.end(), best.begin(),
                          best.end())) {
          best = std::move(rotated);
          best_u = std::move(u);
        }
      }
      return {std::move(best), fp.multiply(view(red.conjugator), view(best_u))};
    }
    case EngineKind::direct_product: {
      const auto& dp = static_cast<const DirectProductEngine&>(e);
      KeyWithConjugator k0 = key_with_conjugator(dp.factor(0), dp.component(g, 0));
      KeyWithConjugator k1 = key_with_conjugator(dp.factor(1), dp.component(g, 1));
      return {dp.pair(view(k0.key), view(k1.key)),
              dp.pair(view(k0.conjugator), view(k1.conjugator))};
    }
    case EngineKind::hnn:
      break;
  }
  throw CapabilityError("no canonical class keys for " +
                        e.descriptor().to_string());
}

Payload class_key_payload(const GroupEngine& e, PayloadView g) {
  return key_with_conjugator(e, g).key;
}

ClassKey class_key(const GroupEngine& e, const Element& g) {
  e.check(g);
  return ClassKey{e.tag(), class_key_payload(e, g.view())};
}

std::string format_key(const GroupEngine& e, const ClassKey& key) {
  if (key.engine_tag != e.tag()) {
    throw EngineMismatch("class key does not belong to engine " +
                         e.descriptor().to_string());
  }
  return "~" + e.format(view(key.rep));
}

namespace {

ConjugacyResult bounded_search(const GroupEngine& e, PayloadView g,
                               PayloadView h, std::size_t radius) {
  ConjugacyResult out;
  out.radius = radius;
  out.method = "bounded conjugator search";
  Ball ball = enumerate_ball(e, radius);
  for (const auto& layer : ball.layers) {
    for (const Payload& w : layer) {
      Payload c = e.conjugate(g, view(w));
      if (std::equal(c.begin(), c.end(), h.begin(), h.end())) {
        out.verdict = Verdict::yes;
        out.witness = w;
        return out;
      }
    }
  }
  out.verdict = Verdict::unknown;
  return out;
}

// Upper bound on |k| with g ~ x^k, for x of infinite order in a canonical
// engine.
std::int64_t power_bound(const GroupEngine& e, PayloadView g, PayloadView x) {
  switch (e.kind()) {
    case EngineKind::free: {
      const auto& f = static_cast<const FreeEngine&>(e);
      auto cg = f.cyclic_reduce(g).core.size();
      auto cx = f.cyclic_reduce(x).core.size();
      return static_cast<std::int64_t>(cg / cx);
    }
    case EngineKind::abelian: {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) {
          return detail::abs64(g[i]) / detail::abs64(x[i]);
        }
      }
      return 0;
    }
    case EngineKind::heisenberg: {
      for (std::size_t i = 0; i < 3; ++i) {
        if (x[i] != 0) {
          return detail::abs64(g[i]) / detail::abs64(x[i]);
        }
      }
      return 0;
    }
    case EngineKind::free_product: {
      const auto& fp = static_cast<const FreeProductEngine&>(e);
      auto rg = fp.cyclic_reduce(g);
      auto rx = fp.cyclic_reduce(x);
      auto sg = fp.syllables(view(rg.core));
      auto sx = fp.syllables(view(rx.core));
      if (sx.size() >= 2) {
        return static_cast<std::int64_t>(sg.size() / sx.size());
      }
      if (sg.size() == 1 && sg[0].factor == sx[0].factor) {
        return power_bound(fp.factor(sx[0].factor), sg[0].data, sx[0].data);
      }
      return 0;
    }
    case EngineKind::direct_product: {
      const auto& dp = static_cast<const DirectProductEngine&>(e);
      std::int64_t best = -1;
      for (int i = 0; i < 2; ++i) {
        if (dp.factor(i).order(dp.component(x, i)) == 0) {
          std::int64_t b = power_bound(dp.factor(i), dp.component(g, i),
                                       dp.component(x, i));
          best = best < 0 ? b : std::min(best, b);
        }
      }
      return std::max<std::int64_t>(best, 0);
    }
    case EngineKind::hnn: {
      const auto& H = static_cast<const HnnEngine&>(e);
      std::size_t tx = H.t_length(view(H.cyclic_reduce(x).core));
      std::size_t tg = H.t_length(view(H.cyclic_reduce(g).core));
      return tx == 0 ? 0 : static_cast<std::int64_t>(tg / tx);
    }
    case EngineKind::cyclic:
    case EngineKind::finite:
      break;
  }
  return 0;
}

}  // namespace

Verdict conjugate_into_cyclic(const GroupEngine& e, PayloadView g,
                              PayloadView x, std::size_t radius) {
  if (e.is_identity(g)) {
    return Verdict::yes;
  }
  if (e.is_identity(x)) {
    return Verdict::no;
  }
  std::int64_t m = e.order(x);
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (m > 0) {
    if (m > kMaxFinitePowerScan) {
      throw Error("element order " + std::to_string(m) + " too large to scan");
    }
    hi = m - 1;
  } else if (e.conjugacy_capability() == ConjugacyCapability::canonical) {
    hi = power_bound(e, g, x);
    lo = -hi;
  } else {
    hi = std::max<std::int64_t>(power_bound(e, g, x),
                                static_cast<std::int64_t>(radius));
    lo = -hi;
  }

  if (e.conjugacy_capability() == ConjugacyCapability::canonical) {
    Payload key = class_key_payload(e, g);
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (class_key_payload(e, view(e.power(x, k))) == key) {
        return Verdict::yes;
      }
    }
    return Verdict::no;
  }
  for (std::int64_t k = lo; k <= hi; ++k) {
    Payload xk = e.power(x, k);
    if (are_conjugate(e, g, view(xk), radius).verdict == Verdict::yes) {
      return Verdict::yes;
    }
  }
  return Verdict::unknown;
}

ConjugacyResult are_conjugate(const GroupEngine& e, PayloadView g,
                              PayloadView h, std::size_t radius) {
  if (e.conjugacy_capability() == ConjugacyCapability::canonical) {
    KeyWithConjugator kg = key_with_conjugator(e, g);
    KeyWithConjugator kh = key_with_conjugator(e, h);
    ConjugacyResult out;
    out.method = "class key";
    if (kg.key != kh.key) {
      out.verdict = Verdict::no;
      return out;
    }
    out.verdict = Verdict::yes;
    out.witness =
        e.multiply(view(kg.conjugator), view(e.invert(view(kh.conjugator))));
    return out;
  }
  if (e.kind() != EngineKind::hnn) {
    return bounded_search(e, g, h, radius);
  }

  const auto& H = static_cast<const HnnEngine&>(e);
  if (H.t_exponent_sum(g) != H.t_exponent_sum(h)) {
    ConjugacyResult out;
    out.verdict = Verdict::no;
    out.method = "t-exponent sum";
    return out;
  }
  HnnEngine::Reduction rg = H.cyclic_reduce(g);
  HnnEngine::Reduction rh = H.cyclic_reduce(h);
  if (H.t_length(view(rg.core)) == 0 && H.t_length(view(rh.core)) == 0) {
    const GroupEngine& B = H.base();
    Payload g0 = H.base_part(view(rg.core));
    Payload h0 = H.base_part(view(rh.core));
    auto outside = [&](const Payload& y) {
      return conjugate_into_cyclic(B, view(y), view(H.edge_a()), radius) ==
                 Verdict::no &&
             conjugate_into_cyclic(B, view(y), view(H.edge_b()), radius) ==
                 Verdict::no;
    };
    if (outside(g0) && outside(h0)) {
      ConjugacyResult inner = are_conjugate(B, view(g0), view(h0), radius);
      inner.method = "base transfer (" + inner.method + ")";
      if (inner.witness) {
        // w = ug W uh^-1 with W^-1 g0 W = h0.
        Payload w = H.multiply(view(rg.conjugator), view(H.embed(view(*inner.witness))));
        inner.witness = H.multiply(view(w), view(H.invert(view(rh.conjugator))));
      }
      return inner;
    }
  }
  return bounded_search(e, g, h, radius);
}

ConjugacyResult are_conjugate(const GroupEngine& e, const Element& g,
                              const Element& h, std::size_t radius) {
  e.check(g);
  e.check(h);
  return are_conjugate(e, g.view(), h.view(), radius);
}

bool is_torsion_free(const GroupEngine& e) {
  switch (e.kind()) {
    case EngineKind::free:
    case EngineKind::abelian:
    case EngineKind::heisenberg:
      return true;
    case EngineKind::cyclic:
      return static_cast<const CyclicEngine&>(e).group_order() == 1;
    case EngineKind::finite:
      return static_cast<const FiniteEngine&>(e).group_order() == 1;
    case EngineKind::free_product: {
      const auto& fp = static_cast<const FreeProductEngine&>(e);
      return is_torsion_free(fp.factor(0)) && is_torsion_free(fp.factor(1));
    }
    case EngineKind::direct_product: {
      const auto& dp = static_cast<const DirectProductEngine&>(e);
      return is_torsion_free(dp.factor(0)) && is_torsion_free(dp.factor(1));
    }
    case EngineKind::hnn:
      return is_torsion_free(static_cast<const HnnEngine&>(e).base());
  }
  return false;
}

bool has_root(const GroupEngine& e, PayloadView g, std::int64_t n) {
  if (n <= 0) {
    throw InputError("root degree must be positive");
  }
  if (n == 1 || e.is_identity(g)) {
    return true;
  }
  switch (e.kind()) {
    case EngineKind::free: {
      const auto& f = static_cast<const FreeEngine&>(e);
      auto m = static_cast<std::int64_t>(free_multiplicity(view(f.cyclic_reduce(g).core)));
      return m % n == 0;
    }
    case EngineKind::cyclic: {
      std::int64_t N = static_cast<const CyclicEngine&>(e).group_order();
      return g[0] % std::gcd(n, N) == 0;
    }
    case EngineKind::abelian:
      return std::all_of(g.begin(), g.end(),
                         [&](std::int32_t c) { return c % n == 0; });
    case EngineKind::heisenberg: {
      if (g[0] % n != 0 || g[1] % n != 0) {
        return false;
      }
      std::int64_t p = g[0] / n;
      std::int64_t q = g[1] / n;
      std::int64_t tri = detail::checked_mul(n, n - 1) / 2;
      std::int64_t rest = g[2] - detail::checked_mul(tri, detail::checked_mul(p, q));
      return rest % n == 0;
    }
    case EngineKind::finite: {
      const auto& f = static_cast<const FiniteEngine&>(e);
      for (std::size_t h = 0; h < f.group_order(); ++h) {
        Payload ph{static_cast<std::int32_t>(h)};
        if (f.power(view(ph), n)[0] == g[0]) {
          return true;
        }
      }
      return false;
    }
    case EngineKind::free_product: {
      const auto& fp = static_cast<const FreeProductEngine&>(e);
      auto red = fp.cyclic_reduce(g);
      auto syls = fp.syllables(view(red.core));
      if (syls.size() == 1) {
        return has_root(fp.factor(syls[0].factor), syls[0].data, n);
      }
      return static_cast<std::int64_t>(syllable_multiplicity(syls)) % n == 0;
    }
    case EngineKind::direct_product: {
      const auto& dp = static_cast<const DirectProductEngine&>(e);
      return has_root(dp.factor(0), dp.component(g, 0), n) &&
             has_root(dp.factor(1), dp.component(g, 1), n);
    }
    case EngineKind::hnn:
      break;
  }
  throw CapabilityError("root test not available for " +
                        e.descriptor().to_string());
}

std::int64_t root_bound(const GroupEngine& e, PayloadView g) {
  switch (e.kind()) {
    case EngineKind::free: {
      const auto& f = static_cast<const FreeEngine&>(e);
      return static_cast<std::int64_t>(
          free_multiplicity(view(f.cyclic_reduce(g).core)));
    }
    case EngineKind::abelian: {
      std::int64_t d = 0;
      for (std::int32_t c : g) {
        d = std::gcd(d, detail::abs64(c));
      }
      return d;
    }
    case EngineKind::heisenberg: {
      std::int64_t d = std::gcd(detail::abs64(g[0]), detail::abs64(g[1]));
      return d != 0 ? d : detail::abs64(g[2]);
    }
    case EngineKind::free_product: {
      const auto& fp = static_cast<const FreeProductEngine&>(e);
      auto syls = fp.syllables(view(fp.cyclic_reduce(g).core));
      if (syls.size() == 1) {
        return root_bound(fp.factor(syls[0].factor), syls[0].data);
      }
      return static_cast<std::int64_t>(syllable_multiplicity(syls));
    }
    case EngineKind::direct_product: {
      const auto& dp = static_cast<const DirectProductEngine&>(e);
      std::int64_t best = -1;
      for (int i = 0; i < 2; ++i) {
        if (dp.factor(i).order(dp.component(g, i)) == 0) {
          std::int64_t b = root_bound(dp.factor(i), dp.component(g, i));
          best = best < 0 ? b : std::min(best, b);
        }
      }
      return std::max<std::int64_t>(best, 1);
    }
    case EngineKind::cyclic:
    case EngineKind::finite:
    case EngineKind::hnn:
      break;
  }
  return 1;
}

bool is_primitive(const GroupEngine& e, PayloadView g) {
  if (e.is_identity(g)) {
    throw InputError("primitivity is not defined for the identity");
  }
  if (e.kind() == EngineKind::hnn) {
    throw CapabilityError("primitivity test not available for " +
                          e.descriptor().to_string());
  }
  if (e.order(g) != 0) {
    return false;
  }
  // An n-th root yields a p-th root for every prime p dividing n.
  std::int64_t bound = root_bound(e, g);
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (is_prime(n) && has_root(e, g, n)) {
      return false;
    }
  }
  return true;
}

bool is_primitive(const GroupEngine& e, const Element& g) {
  e.check(g);
  return is_primitive(e, g.view());
}

namespace {

// Lemma conditions: primitive loxodromic elements of a torsion-free
// relatively hyperbolic group (free groups, or free products relative to
// their factors).
bool commensurability_is_exact(const GroupEngine& e, PayloadView f,
                               PayloadView g) {
  if (e.kind() == EngineKind::free) {
    return is_primitive(e, f) && is_primitive(e, g);
  }
  if (e.kind() == EngineKind::free_product && is_torsion_free(e)) {
    const auto& fp = static_cast<const FreeProductEngine&>(e);
    auto loxodromic = [&](PayloadView y) {
      return fp.syllable_length(view(fp.cyclic_reduce(y).core)) >= 2;
    };
    return loxodromic(f) && loxodromic(g) && is_primitive(e, f) &&
           is_primitive(e, g);
  }
  return false;
}

}  // namespace

CommensurabilityResult are_commensurable_bounded(const GroupEngine& e,
                                                 PayloadView f, PayloadView g,
                                                 std::int64_t K) {
  if (K <= 0) {
    throw InputError("commensurability bound K must be at least 1");
  }
  require_canonical(e);
  std::vector<Payload> gkeys;  // g^1, g^-1, g^2, g^-2, ...
  std::vector<std::int64_t> gexps;
  for (std::int64_t l = 1; l <= K; ++l) {
    for (std::int64_t s : {l, -l}) {
      gkeys.push_back(class_key_payload(e, view(e.power(g, s))));
      gexps.push_back(s);
    }
  }
  CommensurabilityResult out;
  for (std::int64_t k = 1; k <= K; ++k) {
    Payload fk = e.power(f, k);
    Payload key = class_key_payload(e, view(fk));
    for (std::size_t i = 0; i < gkeys.size(); ++i) {
      if (gkeys[i] == key) {
        out.verdict = Verdict::yes;
        out.k = k;
        out.l = gexps[i];
        out.exact = true;
        Payload gl = e.power(g, gexps[i]);
        out.witness = are_conjugate(e, view(fk), view(gl), 0).witness;
        out.note = "found within K=" + std::to_string(K);
        return out;
      }
    }
  }
  out.note = "no within K=" + std::to_string(K);
  if (commensurability_is_exact(e, f, g)) {
    out.verdict = Verdict::no;
    out.exact = true;
    out.note +=
        "; exact: both primitive loxodromic in a torsion-free relatively "
        "hyperbolic group, so commensurable iff f^(+-1) ~ g";
  }
  return out;
}

}  // namespace cgw
