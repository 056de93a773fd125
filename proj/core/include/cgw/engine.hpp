#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgw/group_expr.hpp"
#include "cgw/word.hpp"

namespace cgw {

// Engine-specific canonical normal form of a group element, flattened to
// integers. Equal elements have equal payloads.
using Payload = boost::container::small_vector<std::int32_t, 6>;
using PayloadView = std::span<const std::int32_t>;

inline PayloadView view(const Payload& p) noexcept {
  return PayloadView(p.data(), p.size());
}
inline Payload to_payload(PayloadView v) { return Payload(v.begin(), v.end()); }

struct PayloadHash {
  std::size_t operator()(const Payload& p) const noexcept;
  std::size_t operator()(PayloadView p) const noexcept;
};

// Shortlex order: shorter payloads first, then lexicographic.
bool shortlex_less(PayloadView a, PayloadView b) noexcept;
struct ShortlexLess {
  bool operator()(const Payload& a, const Payload& b) const noexcept {
    return shortlex_less(view(a), view(b));
  }
};

// The set {k in Z : x^k = g}: empty, a single integer, a residue class
// value + modulus * Z, or all of Z.
struct PowerSolutions {
  enum class Kind { none, single, progression, all };

  Kind kind = Kind::none;
  std::int64_t value = 0;
  std::int64_t modulus = 0;

  static PowerSolutions none() { return {}; }
  static PowerSolutions single(std::int64_t k) {
    return {Kind::single, k, 0};
  }
  static PowerSolutions progression(std::int64_t k, std::int64_t m);
  static PowerSolutions all() { return {Kind::all, 0, 1}; }

  bool empty() const noexcept { return kind == Kind::none; }
  std::int64_t representative() const noexcept { return value; }
  bool contains(std::int64_t k) const noexcept;

  friend bool operator==(const PowerSolutions&,
                         const PowerSolutions&) = default;
};

PowerSolutions intersect(const PowerSolutions& a, const PowerSolutions& b);

// g = x^k * rep, where rep is the same for every element of the coset <x>g.
// rep is the identity whenever g lies in <x>.
struct CosetRep {
  std::int64_t k = 0;
  Payload rep;
};

enum class EngineKind {
  free,
  cyclic,
  abelian,
  heisenberg,
  finite,
  free_product,
  direct_product,
  hnn,
};

enum class ConjugacyCapability { canonical, tester, bounded_search };

std::string to_string(ConjugacyCapability c);

// A group element tagged with the engine that produced it.
class Element {
 public:
  Element() = default;
  Element(std::uint64_t tag, Payload payload)
      : tag_(tag), payload_(std::move(payload)) {}

  std::uint64_t engine_tag() const noexcept { return tag_; }
  const Payload& payload() const noexcept { return payload_; }
  PayloadView view() const noexcept { return cgw::view(payload_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::uint64_t tag_ = 0;
  Payload payload_;
};

// One concrete group with a finite generating set X and a solvable word
// problem. Engines are immutable after construction and safe to share
// between threads.
class GroupEngine {
 public:
  GroupEngine(GroupExpr descriptor, std::vector<std::string> generators);
  virtual ~GroupEngine() = default;

  GroupEngine(const GroupEngine&) = delete;
  GroupEngine& operator=(const GroupEngine&) = delete;

  const GroupExpr& descriptor() const noexcept { return descriptor_; }
  std::uint64_t tag() const noexcept { return tag_; }
  const std::vector<std::string>& generators() const noexcept {
    return generators_;
  }
  std::size_t rank() const noexcept { return generators_.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  virtual EngineKind kind() const noexcept = 0;
  virtual ConjugacyCapability conjugacy_capability() const {
    return ConjugacyCapability::canonical;
  }

  // Payload-level operations. Inputs must be canonical payloads of this
  // engine; outputs always are.
  virtual Payload identity() const = 0;
  virtual Payload generator(std::size_t i) const = 0;
  virtual Payload multiply(PayloadView g, PayloadView h) const = 0;
  virtual Payload invert(PayloadView g) const = 0;
  virtual bool is_identity(PayloadView g) const;
  // 0 for elements of infinite order.
  virtual std::int64_t order(PayloadView g) const = 0;
  virtual PowerSolutions power_solutions(PayloadView x, PayloadView g) const = 0;
  virtual CosetRep coset_rep(PayloadView x, PayloadView g) const = 0;
  // A word over generators() representing g; deterministic.
  virtual Word to_word(PayloadView g) const = 0;
  virtual std::string format(PayloadView g) const;
  // True iff p is a well-formed canonical payload.
  virtual bool is_canonical(PayloadView p) const = 0;

  Payload power(PayloadView g, std::int64_t k) const;
  // u^-1 g u
  Payload conjugate(PayloadView g, PayloadView u) const;
  Payload evaluate(const Word& w) const;
  Payload letter_payload(const Letter& l) const;
  bool contains_power(PayloadView x, PayloadView g) const {
    return !power_solutions(x, g).empty();
  }

  // Tagged element API; throws EngineMismatch on foreign elements.
  Element element(Payload p) const { return Element(tag_, std::move(p)); }
  Element identity_element() const { return element(identity()); }
  Element generator_element(std::size_t i) const {
    return element(generator(i));
  }
  Element multiply(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  Element power(const Element& g, std::int64_t k) const;
  Element word_to_element(const Word& w) const {
    return element(evaluate(w));
  }
  Element parse_element(std::string_view word_text) const;
  std::string format(const Element& g) const;
  void check(const Element& g) const;

 private:
  GroupExpr descriptor_;
  std::vector<std::string> generators_;
  std::uint64_t tag_;
};

using EnginePtr = std::shared_ptr<const GroupEngine>;

// Generator names of composite engines are "<child-index>.<name>"; hnn keeps
// the base names and adds "t". Nesting depth is capped at 8, hnn depth at 2.
EnginePtr build_engine(const GroupExpr& expr);
EnginePtr build_engine(std::string_view dsl);

}  // namespace cgw
