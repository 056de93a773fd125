#include "cgw/engine.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "cgw/error.hpp"

namespace cgw {

std::size_t PayloadHash::operator()(const Payload& p) const noexcept {
  return boost::hash_range(p.begin(), p.end());
}

std::size_t PayloadHash::operator()(PayloadView p) const noexcept {
  return boost::hash_range(p.begin(), p.end());
}

bool shortlex_less(PayloadView a, PayloadView b) noexcept {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(ConjugacyCapability c) {
  switch (c) {
    case ConjugacyCapability::canonical:
      return "canonical";
    case ConjugacyCapability::tester:
      return "tester";
    case ConjugacyCapability::bounded_search:
      return "bounded-search";
  }
  return "unknown";
}

namespace {

__extension__ typedef __int128 i128;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  i128 old_r = floor_mod(a, m);
  i128 r = m;
  i128 old_s = 1;
  i128 s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return floor_mod(static_cast<std::int64_t>(old_s % m), m);
}

}  // namespace

PowerSolutions PowerSolutions::progression(std::int64_t k, std::int64_t m) {
  if (m <= 0) {
    return single(k);
  }
  if (m == 1) {
    return all();
  }
  return {Kind::progression, floor_mod(k, m), m};
}

bool PowerSolutions::contains(std::int64_t k) const noexcept {
  switch (kind) {
    case Kind::none:
      return false;
    case Kind::single:
      return k == value;
    case Kind::progression:
      return floor_mod(k - value, modulus) == 0;
    case Kind::all:
      return true;
  }
  return false;
}

PowerSolutions intersect(const PowerSolutions& a, const PowerSolutions& b) {
  using K = PowerSolutions::Kind;
  if (a.kind == K::none || b.kind == K::none) {
    return PowerSolutions::none();
  }
  if (a.kind == K::all) {
    return b;
  }
  if (b.kind == K::all) {
    return a;
  }
  if (a.kind == K::single) {
    return b.contains(a.value) ? a : PowerSolutions::none();
  }
  if (b.kind == K::single) {
    return a.contains(b.value) ? b : PowerSolutions::none();
  }
  std::int64_t m = a.modulus;
  std::int64_t n = b.modulus;
  std::int64_t g = std::gcd(m, n);
  std::int64_t diff = b.value - a.value;
  if (diff % g != 0) {
    return PowerSolutions::none();
  }
  std::int64_t n_red = n / g;
  i128 t = static_cast<i128>(floor_mod(diff / g, n_red)) *
               mod_inverse(m / g, n_red) % n_red;
  i128 lcm = static_cast<i128>(m / g) * n;
  i128 k = a.value + m * t;
  return PowerSolutions::progression(static_cast<std::int64_t>(k % lcm),
                                     static_cast<std::int64_t>(lcm));
}

namespace {
std::atomic<std::uint64_t> next_engine_tag{1};
}

GroupEngine::GroupEngine(GroupExpr descriptor,
                         std::vector<std::string> generators)
    : descriptor_(std::move(descriptor)),
      generators_(std::move(generators)),
      tag_(next_engine_tag.fetch_add(1)) {}

std::optional<std::size_t> GroupEngine::generator_index(
    std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - generators_.begin());
}

bool GroupEngine::is_identity(PayloadView g) const {
  Payload e = identity();
  return std::equal(g.begin(), g.end(), e.begin(), e.end());
}

std::string GroupEngine::format(PayloadView g) const {
  return cgw::to_string(to_word(g));
}

Payload GroupEngine::power(PayloadView g, std::int64_t k) const {
  Payload base = k < 0 ? invert(g) : to_payload(g);
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Payload result = identity();
  while (e != 0) {
    if (e & 1U) {
      result = multiply(view(result), view(base));
    }
    e >>= 1U;
    if (e != 0) {
      base = multiply(view(base), view(base));
    }
  }
  return result;
}

Payload GroupEngine::conjugate(PayloadView g, PayloadView u) const {
  Payload ui = invert(u);
  Payload t = multiply(view(ui), g);
  return multiply(view(t), u);
}

Payload GroupEngine::letter_payload(const Letter& l) const {
  auto idx = generator_index(l.generator);
  if (!idx) {
    throw InputError("unknown generator '" + l.generator + "' for " +
                     descriptor_.to_string());
  }
  Payload g = generator(*idx);
  return l.sign < 0 ? invert(view(g)) : g;
}

Payload GroupEngine::evaluate(const Word& w) const {
  Payload result = identity();
  for (const Letter& l : w.letters()) {
    Payload p = letter_payload(l);
    result = multiply(view(result), view(p));
  }
  return result;
}

void GroupEngine::check(const Element& g) const {
  if (g.engine_tag() != tag_) {
    throw EngineMismatch("element does not belong to engine " +
                         descriptor_.to_string());
  }
}

Element GroupEngine::multiply(const Element& g, const Element& h) const {
  check(g);
  check(h);
  return element(multiply(g.view(), h.view()));
}

Element GroupEngine::invert(const Element& g) const {
  check(g);
  return element(invert(g.view()));
}

Element GroupEngine::power(const Element& g, std::int64_t k) const {
  check(g);
  return element(power(g.view(), k));
}

Element GroupEngine::parse_element(std::string_view word_text) const {
  return word_to_element(parse_word(word_text, generators_));
}

std::string GroupEngine::format(const Element& g) const {
  check(g);
  return format(g.view());
}

}  // namespace cgw
