#include <algorithm>
#include <tuple>

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

struct OwnedSyllable {
  int factor;
  Payload data;
};

Word prefixed_word(const Word& w, int factor) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  const std::string prefix = std::to_string(factor) + ".";
  for (const Letter& l : w.letters()) {
    letters.push_back(Letter{prefix + l.generator, l.sign});
  }
  return Word(std::move(letters));
}

}  // namespace

FreeProductEngine::FreeProductEngine(GroupExpr descriptor, EnginePtr left,
                                     EnginePtr right)
    : GroupEngine(std::move(descriptor), prefixed_names(*left, *right)),
      factors_{std::move(left), std::move(right)} {}

ConjugacyCapability FreeProductEngine::conjugacy_capability() const {
  return std::max(factors_[0]->conjugacy_capability(),
                  factors_[1]->conjugacy_capability());
}

std::vector<FreeProductEngine::Syllable> FreeProductEngine::syllables(
    PayloadView g) const {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < g.size()) {
    auto len = static_cast<std::size_t>(g[i + 1]);
    out.push_back(Syllable{g[i], g.subspan(i + 2, len)});
    i += 2 + len;
  }
  return out;
}

std::size_t FreeProductEngine::syllable_length(PayloadView g) const {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < g.size()) {
    i += 2 + static_cast<std::size_t>(g[i + 1]);
    ++n;
  }
  return n;
}

Payload FreeProductEngine::encode(const std::vector<Syllable>& syls) const {
  Payload out;
  for (const Syllable& s : syls) {
    out.push_back(s.factor);
    out.push_back(static_cast<std::int32_t>(s.data.size()));
    out.insert(out.end(), s.data.begin(), s.data.end());
  }
  return out;
}

Payload FreeProductEngine::embed(int factor, PayloadView h) const {
  if (factors_[factor]->is_identity(h)) {
    return {};
  }
  return encode({Syllable{factor, h}});
}

Payload FreeProductEngine::generator(std::size_t i) const {
  std::size_t r0 = factors_[0]->rank();
  if (i < r0) {
    return embed(0, view(factors_[0]->generator(i)));
  }
  return embed(1, view(factors_[1]->generator(i - r0)));
}

Payload FreeProductEngine::multiply(PayloadView g, PayloadView h) const {
  if (g.empty()) {
    return to_payload(h);
  }
  if (h.empty()) {
    return to_payload(g);
  }
  std::vector<Syllable> left = syllables(g);
  std::vector<Syllable> right = syllables(h);
  // Cancel and merge at the junction only; the interiors are already
  // alternating and nontrivial.
  std::size_t kept = left.size();
  std::size_t next = 0;
  Payload merged;
  bool have_merged = false;
  while (kept > 0 && next < right.size() &&
         left[kept - 1].factor == right[next].factor) {
    const GroupEngine& f = *factors_[right[next].factor];
    Payload m = f.multiply(left[kept - 1].data, right[next].data);
    if (!f.is_identity(view(m))) {
      merged = std::move(m);
      have_merged = true;
      break;
    }
    --kept;
    ++next;
  }
  std::vector<Syllable> out(left.begin(),
                            left.begin() + static_cast<std::ptrdiff_t>(kept));
  if (have_merged) {
    out.back().data = view(merged);
    ++next;
  }
  out.insert(out.end(), right.begin() + static_cast<std::ptrdiff_t>(next),
             right.end());
  return encode(out);
}

Payload FreeProductEngine::invert(PayloadView g) const {
  std::vector<Syllable> syls = syllables(g);
  std::vector<OwnedSyllable> owned;
  owned.reserve(syls.size());
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    owned.push_back({it->factor, factors_[it->factor]->invert(it->data)});
  }
  std::vector<Syllable> out;
  out.reserve(owned.size());
  for (const auto& s : owned) {
    out.push_back(Syllable{s.factor, view(s.data)});
  }
  return encode(out);
}

FreeProductEngine::Reduction FreeProductEngine::cyclic_reduce(
    PayloadView g) const {
  Payload core = to_payload(g);
  Payload conj;
  for (;;) {
    std::vector<Syllable> syls = syllables(view(core));
    if (syls.size() < 2 || syls.front().factor != syls.back().factor) {
      break;
    }
    Payload c = embed(syls.front().factor, syls.front().data);
    Payload next = conjugate(view(core), view(c));
    conj = multiply(view(conj), view(c));
    core = std::move(next);
  }
  return {std::move(core), std::move(conj)};
}

std::pair<Payload, Payload> FreeProductEngine::rotate(PayloadView core,
                                                      std::size_t k) const {
  std::vector<Syllable> syls = syllables(core);
  if (syls.empty()) {
    return {to_payload(core), Payload{}};
  }
  k %= syls.size();
  std::vector<Syllable> rotated(syls.begin() + static_cast<std::ptrdiff_t>(k),
                                syls.end());
  rotated.insert(rotated.end(), syls.begin(),
                 syls.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Syllable> prefix(syls.begin(),
                               syls.begin() + static_cast<std::ptrdiff_t>(k));
  return {encode(rotated), encode(prefix)};
}

std::int64_t FreeProductEngine::order(PayloadView g) const {
  Reduction red = cyclic_reduce(g);
  std::vector<Syllable> syls = syllables(view(red.core));
  if (syls.empty()) {
    return 1;
  }
  if (syls.size() >= 2) {
    return 0;
  }
  return factors_[syls[0].factor]->order(syls[0].data);
}

PowerSolutions FreeProductEngine::power_solutions(PayloadView x,
                                                  PayloadView g) const {
  if (x.empty()) {
    return g.empty() ? PowerSolutions::all() : PowerSolutions::none();
  }
  Reduction red = cyclic_reduce(x);
  Payload w = conjugate(g, view(red.conjugator));
  std::vector<Syllable> rs = syllables(view(red.core));
  std::vector<Syllable> ws = syllables(view(w));
  if (rs.size() == 1) {
    const GroupEngine& f = *factors_[rs[0].factor];
    if (ws.empty()) {
      return f.power_solutions(rs[0].data, view(f.identity()));
    }
    if (ws.size() != 1 || ws[0].factor != rs[0].factor) {
      return PowerSolutions::none();
    }
    return f.power_solutions(rs[0].data, ws[0].data);
  }
  if (ws.empty()) {
    return PowerSolutions::single(0);
  }
  if (ws.size() % rs.size() != 0) {
    return PowerSolutions::none();
  }
  auto k = static_cast<std::int64_t>(ws.size() / rs.size());
  if (power(view(red.core), k) == w) {
    return PowerSolutions::single(k);
  }
  if (power(view(red.core), -k) == w) {
    return PowerSolutions::single(-k);
  }
  return PowerSolutions::none();
}

CosetRep FreeProductEngine::coset_rep(PayloadView x, PayloadView g) const {
  if (x.empty()) {
    return {0, to_payload(g)};
  }
  Reduction red = cyclic_reduce(x);
  const Payload& p = red.conjugator;
  std::vector<Syllable> rs = syllables(view(red.core));
  Payload w = multiply(view(invert(view(p))), g);

  if (rs.size() == 1) {
    // x^j g = p r^j w; only the first syllable of w can absorb r^j.
    std::vector<Syllable> ws = syllables(view(w));
    if (ws.empty() || ws[0].factor != rs[0].factor) {
      return {0, to_payload(g)};
    }
    const GroupEngine& f = *factors_[rs[0].factor];
    CosetRep inner = f.coset_rep(rs[0].data, ws[0].data);
    std::vector<Syllable> tail(ws.begin() + 1, ws.end());
    Payload rest = multiply(view(embed(rs[0].factor, view(inner.rep))),
                            view(encode(tail)));
    Payload rep = multiply(view(p), view(rest));
    PowerSolutions in_x = power_solutions(x, view(rep));
    if (!in_x.empty()) {
      return {power_solutions(x, g).representative(), Payload{}};
    }
    return {inner.k, rep};
  }

  // |x^j g| exceeds |g| once |j| |r| > |g| + |w| + |p| + 2 syllables.
  std::size_t lg = syllable_length(g);
  std::size_t lw = syllable_length(view(w));
  std::size_t lp = syllable_length(view(p));
  auto window =
      static_cast<std::int64_t>((lg + lw + lp + 2) / rs.size() + 1);
  auto key = [&](const Payload& c) {
    return std::make_pair(syllable_length(view(c)), c);
  };
  auto less = [&](const Payload& a, const Payload& b) {
    auto ka = key(a);
    auto kb = key(b);
    if (ka.first != kb.first) {
      return ka.first < kb.first;
    }
    return shortlex_less(view(a), view(b));
  };
  Payload rinv = invert(view(red.core));
  Payload best = to_payload(g);
  std::int64_t best_j = 0;
  Payload up = w;
  Payload down = w;
  for (std::int64_t j = 1; j <= window; ++j) {
    up = multiply(view(red.core), view(up));
    down = multiply(view(rinv), view(down));
    Payload cu = multiply(view(p), view(up));
    Payload cd = multiply(view(p), view(down));
    if (less(cu, best)) {
      best = std::move(cu);
      best_j = j;
    }
    if (less(cd, best)) {
      best = std::move(cd);
      best_j = -j;
    }
  }
  return {-best_j, best};
}

Word FreeProductEngine::to_word(PayloadView g) const {
  Word out;
  for (const Syllable& s : syllables(g)) {
    out = out * prefixed_word(factors_[s.factor]->to_word(s.data), s.factor);
  }
  return out;
}

bool FreeProductEngine::is_canonical(PayloadView p) const {
  std::size_t i = 0;
  int last = -1;
  while (i < p.size()) {
    if (i + 2 > p.size()) {
      return false;
    }
    int f = p[i];
    if ((f != 0 && f != 1) || f == last || p[i + 1] < 0 ||
        i + 2 + static_cast<std::size_t>(p[i + 1]) > p.size()) {
      return false;
    }
    PayloadView data = p.subspan(i + 2, static_cast<std::size_t>(p[i + 1]));
    if (!factors_[f]->is_canonical(data) || factors_[f]->is_identity(data)) {
      return false;
    }
    last = f;
    i += 2 + data.size();
  }
  return true;
}

}  // namespace cgw
