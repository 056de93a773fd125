#include "cgw/hnn.hpp"

#include <algorithm>

#include "cgw/error.hpp"

namespace cgw {

namespace {

std::vector<std::string> hnn_names(const GroupEngine& base) {
  // The stable letter is "t", or "t2", "t3", ... when the base already
  // uses that name (hnn over hnn).
  std::vector<std::string> out = base.generators();
  std::string name = "t";
  for (int i = 2; std::find(out.begin(), out.end(), name) != out.end(); ++i) {
    name = "t" + std::to_string(i);
  }
  out.push_back(name);
  return out;
}

}  // namespace

HnnEngine::HnnEngine(GroupExpr descriptor, EnginePtr base, Payload a,
                     Payload b)
    : GroupEngine(std::move(descriptor), hnn_names(*base)),
      base_(std::move(base)),
      a_(std::move(a)),
      b_(std::move(b)) {
  if (base_->is_identity(view(a_)) || base_->is_identity(view(b_))) {
    throw InputError("hnn: edge word is trivial in the base group");
  }
  if (base_->order(view(a_)) != base_->order(view(b_))) {
    throw InputError(
        "hnn: edge elements have different orders, so <a> and <b> are not "
        "isomorphic via a -> b");
  }
}

HnnWord HnnEngine::decode(PayloadView g) const {
  HnnWord w;
  auto k = static_cast<std::size_t>(g[0]);
  std::size_t pos = 1;
  for (std::size_t i = 0; i < k; ++i) {
    w.signs.push_back(g[pos++]);
  }
  for (std::size_t i = 0; i <= k; ++i) {
    auto len = static_cast<std::size_t>(g[pos++]);
    w.pieces.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(pos),
                          g.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return w;
}

Payload HnnEngine::encode(const HnnWord& w) const {
  Payload out;
  out.push_back(static_cast<std::int32_t>(w.signs.size()));
  for (int e : w.signs) {
    out.push_back(e);
  }
  for (const Payload& p : w.pieces) {
    out.push_back(static_cast<std::int32_t>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Payload HnnEngine::embed(PayloadView base_element) const {
  return encode(HnnWord{{to_payload(base_element)}, {}});
}

Payload HnnEngine::identity() const { return embed(view(base_->identity())); }

Payload HnnEngine::t_power(int sign) const {
  return encode(
      HnnWord{{base_->identity(), base_->identity()}, {sign < 0 ? -1 : 1}});
}

Payload HnnEngine::generator(std::size_t i) const {
  if (i == t_index()) {
    return t_power(1);
  }
  return embed(view(base_->generator(i)));
}

bool HnnEngine::in_edge(const Payload& edge, const Payload& g,
                        std::int64_t& m) const {
  PowerSolutions ps = base_->power_solutions(view(edge), view(g));
  if (ps.empty()) {
    return false;
  }
  m = ps.representative();
  return true;
}

HnnWord HnnEngine::britton_reduce(HnnWord raw) const {
  const GroupEngine& B = *base_;
  std::vector<Payload> pieces{std::move(raw.pieces[0])};
  std::vector<int> signs;
  for (std::size_t i = 0; i < raw.signs.size(); ++i) {
    int e = raw.signs[i];
    Payload& next = raw.pieces[i + 1];
    if (!signs.empty() && signs.back() == -e) {
      std::int64_t m = 0;
      // t^-1 a^m t = b^m and t b^m t^-1 = a^m
      const Payload& edge = signs.back() < 0 ? a_ : b_;
      const Payload& image = signs.back() < 0 ? b_ : a_;
      if (in_edge(edge, pieces.back(), m)) {
        pieces.pop_back();
        signs.pop_back();
        Payload moved = B.power(view(image), m);
        pieces.back() = B.multiply(
            view(B.multiply(view(pieces.back()), view(moved))), view(next));
        continue;
      }
    }
    signs.push_back(e);
    pieces.push_back(std::move(next));
  }
  // Right-to-left coset normalization: t b^m = a^m t, t^-1 a^m = b^m t^-1.
  for (std::size_t i = signs.size(); i >= 1; --i) {
    bool positive = signs[i - 1] > 0;
    CosetRep cr = B.coset_rep(view(positive ? b_ : a_), view(pieces[i]));
    if (cr.k != 0) {
      Payload moved = B.power(view(positive ? a_ : b_), cr.k);
      pieces[i - 1] = B.multiply(view(pieces[i - 1]), view(moved));
    }
    pieces[i] = std::move(cr.rep);
  }
  return HnnWord{std::move(pieces), std::move(signs)};
}

Payload HnnEngine::multiply(PayloadView g, PayloadView h) const {
  HnnWord left = decode(g);
  HnnWord right = decode(h);
  left.pieces.back() =
      base_->multiply(view(left.pieces.back()), view(right.pieces.front()));
  left.pieces.insert(left.pieces.end(), right.pieces.begin() + 1,
                     right.pieces.end());
  left.signs.insert(left.signs.end(), right.signs.begin(), right.signs.end());
  return encode(britton_reduce(std::move(left)));
}

Payload HnnEngine::invert(PayloadView g) const {
  HnnWord w = decode(g);
  HnnWord out;
  for (auto it = w.pieces.rbegin(); it != w.pieces.rend(); ++it) {
    out.pieces.push_back(base_->invert(view(*it)));
  }
  for (auto it = w.signs.rbegin(); it != w.signs.rend(); ++it) {
    out.signs.push_back(-*it);
  }
  return encode(britton_reduce(std::move(out)));
}

std::size_t HnnEngine::t_length(PayloadView g) const {
  return static_cast<std::size_t>(g[0]);
}

std::int64_t HnnEngine::t_exponent_sum(PayloadView g) const {
  std::int64_t s = 0;
  for (std::int32_t i = 0; i < g[0]; ++i) {
    s += g[static_cast<std::size_t>(1 + i)];
  }
  return s;
}

Payload HnnEngine::base_part(PayloadView g) const {
  return decode(g).pieces.front();
}

HnnEngine::Reduction HnnEngine::cyclic_reduce(PayloadView g) const {
  Payload cur = to_payload(g);
  Payload conj = identity();
  for (;;) {
    HnnWord w = decode(view(cur));
    if (w.signs.empty()) {
      return {std::move(cur), std::move(conj)};
    }
    // Conjugating by g0 leaves t^e1 g1 ... t^ek (gk g0); the cyclic
    // junction t^ek (gk g0) t^e1 is the only place a pinch can appear.
    Payload g0 = embed(view(w.pieces.front()));
    Payload h = base_->multiply(view(w.pieces.back()), view(w.pieces.front()));
    int e1 = w.signs.front();
    int ek = w.signs.back();
    std::int64_t m = 0;
    bool pinch = (ek < 0 && e1 > 0 && in_edge(a_, h, m)) ||
                 (ek > 0 && e1 < 0 && in_edge(b_, h, m));
    cur = conjugate(view(cur), view(g0));
    conj = multiply(view(conj), view(g0));
    if (!pinch) {
      return {std::move(cur), std::move(conj)};
    }
    Payload t = t_power(e1);
    cur = conjugate(view(cur), view(t));
    conj = multiply(view(conj), view(t));
  }
}

std::int64_t HnnEngine::order(PayloadView g) const {
  Reduction red = cyclic_reduce(g);
  if (t_length(view(red.core)) > 0) {
    return 0;
  }
  return base_->order(view(base_part(view(red.core))));
}

PowerSolutions HnnEngine::power_solutions(PayloadView x, PayloadView g) const {
  if (is_identity(x)) {
    return is_identity(g) ? PowerSolutions::all() : PowerSolutions::none();
  }
  Reduction red = cyclic_reduce(x);
  Payload w = conjugate(g, view(red.conjugator));
  std::size_t lr = t_length(view(red.core));
  std::size_t lw = t_length(view(w));
  if (lr == 0) {
    if (lw != 0) {
      return PowerSolutions::none();
    }
    return base_->power_solutions(view(base_part(view(red.core))),
                                  view(base_part(view(w))));
  }
  if (lw == 0) {
    return is_identity(view(w)) ? PowerSolutions::single(0)
                                : PowerSolutions::none();
  }
  if (lw % lr != 0) {
    return PowerSolutions::none();
  }
  auto k = static_cast<std::int64_t>(lw / lr);
  if (power(view(red.core), k) == w) {
    return PowerSolutions::single(k);
  }
  if (power(view(red.core), -k) == w) {
    return PowerSolutions::single(-k);
  }
  return PowerSolutions::none();
}

CosetRep HnnEngine::coset_rep(PayloadView x, PayloadView g) const {
  if (is_identity(x)) {
    return {0, to_payload(g)};
  }
  Reduction red = cyclic_reduce(x);
  const Payload& p = red.conjugator;
  Payload w = multiply(view(invert(view(p))), g);
  std::size_t lr = t_length(view(red.core));

  if (lr == 0) {
    // x^j g = p r^j w and r^j only touches the leading base piece of w.
    HnnWord ww = decode(view(w));
    CosetRep inner = base_->coset_rep(view(base_part(view(red.core))),
                                      view(ww.pieces.front()));
    ww.pieces.front() = std::move(inner.rep);
    Payload rep = multiply(view(p), view(encode(ww)));
    if (!power_solutions(x, view(rep)).empty()) {
      return {power_solutions(x, g).representative(), identity()};
    }
    return {inner.k, rep};
  }

  // |x^j g|_t >= |j| |r|_t - |w|_t - |p|_t, so the minimum lies in a window.
  std::size_t bound = t_length(g) + t_length(view(w)) + t_length(view(p)) + 2;
  auto window = static_cast<std::int64_t>(bound / lr + 1);
  auto less = [&](const Payload& a, const Payload& b) {
    bool ia = is_identity(view(a));
    bool ib = is_identity(view(b));
    if (ia || ib) {
      return ia && !ib;
    }
    if (a[0] != b[0]) {
      return a[0] < b[0];
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

Word HnnEngine::to_word(PayloadView g) const {
  HnnWord w = decode(g);
  Word out = base_->to_word(view(w.pieces[0]));
  for (std::size_t i = 0; i < w.signs.size(); ++i) {
    out = out * Word::letter(generators()[t_index()], w.signs[i]) *
          base_->to_word(view(w.pieces[i + 1]));
  }
  return out;
}

bool HnnEngine::is_canonical(PayloadView p) const {
  if (p.empty() || p[0] < 0) {
    return false;
  }
  auto k = static_cast<std::size_t>(p[0]);
  std::size_t pos = 1 + k;
  if (pos > p.size()) {
    return false;
  }
  for (std::size_t i = 1; i <= k; ++i) {
    if (p[i] != 1 && p[i] != -1) {
      return false;
    }
  }
  for (std::size_t i = 0; i <= k; ++i) {
    if (pos >= p.size() || p[pos] < 0 ||
        pos + 1 + static_cast<std::size_t>(p[pos]) > p.size()) {
      return false;
    }
    PayloadView piece = p.subspan(pos + 1, static_cast<std::size_t>(p[pos]));
    if (!base_->is_canonical(piece)) {
      return false;
    }
    pos += 1 + piece.size();
  }
  if (pos != p.size()) {
    return false;
  }
  Payload normal = encode(britton_reduce(decode(p)));
  return std::equal(p.begin(), p.end(), normal.begin(), normal.end());
}

}  // namespace cgw
