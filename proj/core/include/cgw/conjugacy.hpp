#pragma once

// Conjugacy class keys, conjugacy tests, primitivity and commensurability.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cgw/engine.hpp"

namespace cgw {

// Canonical representative of a conjugacy class.
struct ClassKey {
  std::uint64_t engine_tag = 0;
  Payload rep;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const noexcept {
    return PayloadHash{}(k.rep);
  }
};

struct KeyWithConjugator {
  Payload key;
  Payload conjugator;  // g = conjugator * key * conjugator^-1
};

// Throws CapabilityError when the engine (or a factor) is bounded-search.
KeyWithConjugator key_with_conjugator(const GroupEngine& e, PayloadView g);
Payload class_key_payload(const GroupEngine& e, PayloadView g);
ClassKey class_key(const GroupEngine& e, const Element& g);
// "~" followed by the canonical print of the representative.
std::string format_key(const GroupEngine& e, const ClassKey& key);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct ConjugacyResult {
  Verdict verdict = Verdict::unknown;
  std::optional<Payload> witness;  // w with w^-1 g w = h
  std::size_t radius = 0;          // search radius used, 0 when exact
  std::string method;
};

// Exact for canonical engines. For hnn engines: differing t-exponent sums
// give an exact no; base elements not conjugate into <a> u <b> are decided
// in the base; everything else is a bounded conjugator search.
ConjugacyResult are_conjugate(const GroupEngine& e, PayloadView g,
                              PayloadView h, std::size_t radius);
ConjugacyResult are_conjugate(const GroupEngine& e, const Element& g,
                              const Element& h, std::size_t radius);

// Is g conjugate to some power x^k? Exact for canonical engines; unknown is
// possible only for bounded-search engines.
Verdict conjugate_into_cyclic(const GroupEngine& e, PayloadView g,
                              PayloadView x, std::size_t radius = 4);

// True iff h^n = g for some h.
bool has_root(const GroupEngine& e, PayloadView g, std::int64_t n);
// Every n >= 2 with an n-th root of g satisfies n <= root_bound (g of
// infinite order).
std::int64_t root_bound(const GroupEngine& e, PayloadView g);
// g is not a proper power: h^n = g forces n = +-1. Elements of finite order
// are never primitive (g = g^(ord+1)). The identity is rejected.
bool is_primitive(const GroupEngine& e, PayloadView g);
bool is_primitive(const GroupEngine& e, const Element& g);

// Whether every element of the group has infinite order (recursively known).
bool is_torsion_free(const GroupEngine& e);

struct CommensurabilityResult {
  Verdict verdict = Verdict::unknown;  // unknown means "no within K"
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::optional<Payload> witness;  // w with w^-1 f^k w = g^l
  bool exact = false;
  std::string note;
};

// Searches 1 <= k <= K, 1 <= |l| <= K for f^k ~ g^l. For primitive
// elements of infinite order in a free group, or of syllable length >= 2 in a
// free product of torsion-free factors, the answer is exact: commensurable
// iff f^(+-1) ~ g.
CommensurabilityResult are_commensurable_bounded(const GroupEngine& e,
                                                 PayloadView f, PayloadView g,
                                                 std::int64_t K);

}  // namespace cgw
