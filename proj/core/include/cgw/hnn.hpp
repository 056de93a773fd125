#pragma once

// HNN extension <B, t | t^-1 a t = b> with cyclic edge groups <a> and <b>.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cgw/engine.hpp"

namespace cgw {

// g0 t^e1 g1 ... t^ek gk; pieces.size() == signs.size() + 1.
struct HnnWord {
  std::vector<Payload> pieces;
  std::vector<int> signs;

  std::size_t t_length() const noexcept { return signs.size(); }
};

// Payload: [k, e1..ek, len0, g0..., ..., lenk, gk...]. The normal form is
// pinch-free with each gi (i >= 1) the canonical coset representative of
// <b> gi after t and of <a> gi after t^-1; g0 is arbitrary.
class HnnEngine final : public GroupEngine {
 public:
  HnnEngine(GroupExpr descriptor, EnginePtr base, Payload a, Payload b);

  EngineKind kind() const noexcept override { return EngineKind::hnn; }
  ConjugacyCapability conjugacy_capability() const override {
    return ConjugacyCapability::bounded_search;
  }

  const GroupEngine& base() const { return *base_; }
  const EnginePtr& base_ptr() const { return base_; }
  const Payload& edge_a() const { return a_; }
  const Payload& edge_b() const { return b_; }
  std::size_t t_index() const noexcept { return rank() - 1; }

  Payload identity() const override;
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  HnnWord decode(PayloadView g) const;
  Payload encode(const HnnWord& w) const;
  // Base element as an element of the extension.
  Payload embed(PayloadView base_element) const;
  Payload t_power(int sign) const;

  // Pinch removal followed by coset normalization. Accepts any sequence.
  HnnWord britton_reduce(HnnWord raw) const;
  std::size_t t_length(PayloadView g) const;
  std::int64_t t_exponent_sum(PayloadView g) const;
  // Base element when g has t-length 0.
  Payload base_part(PayloadView g) const;

  struct Reduction {
    Payload core;
    Payload conjugator;  // g = conjugator * core * conjugator^-1
  };
  // No cyclic shift of the core contains a pinch.
  Reduction cyclic_reduce(PayloadView g) const;

 private:
  // Exponent m with g = a^m (resp. b^m), if any.
  bool in_edge(const Payload& edge, const Payload& g, std::int64_t& m) const;

  EnginePtr base_;
  Payload a_;
  Payload b_;
};

}  // namespace cgw
