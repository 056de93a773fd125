#pragma once

// Concrete group engines. Most callers only need engine.hpp and
// build_engine(); the classes are exposed for algorithms that work on a
// specific normal form (conjugacy keys, free-product syllables, ...).

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cgw/engine.hpp"

namespace cgw {

// Free group. Payload: freely reduced word as letter codes 2*i (generator i)
// and 2*i+1 (its inverse).
class FreeEngine final : public GroupEngine {
 public:
  FreeEngine(GroupExpr descriptor, std::int64_t rank);

  EngineKind kind() const noexcept override { return EngineKind::free; }
  Payload identity() const override { return {}; }
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  static constexpr std::int32_t inverse_code(std::int32_t c) noexcept {
    return c ^ 1;
  }

  struct Reduction {
    Payload core;
    Payload conjugator;  // g = conjugator * core * conjugator^-1
  };
  Reduction cyclic_reduce(PayloadView g) const;
};

// Z/n with generator u. Payload: [k], 0 <= k < n.
class CyclicEngine final : public GroupEngine {
 public:
  CyclicEngine(GroupExpr descriptor, std::int64_t order);

  EngineKind kind() const noexcept override { return EngineKind::cyclic; }
  std::int64_t group_order() const noexcept { return n_; }

  Payload identity() const override { return {0}; }
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  std::string format(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

 private:
  std::int64_t n_;
};

// Z^r. Payload: exponent vector.
class AbelianEngine final : public GroupEngine {
 public:
  AbelianEngine(GroupExpr descriptor, std::int64_t rank);

  EngineKind kind() const noexcept override { return EngineKind::abelian; }
  Payload identity() const override;
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  std::string format(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

 private:
  std::size_t rank_;
};

// UT_3(Z) = <a, b, c | [a,b] = c, [a,c] = [b,c] = 1>. Payload: [a, b, c]
// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
class HeisenbergEngine final : public GroupEngine {
 public:
  explicit HeisenbergEngine(GroupExpr descriptor);

  EngineKind kind() const noexcept override { return EngineKind::heisenberg; }
  Payload identity() const override { return {0, 0, 0}; }
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  std::string format(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  static Payload make(std::int64_t a, std::int64_t b, std::int64_t c);
};

// A finite group given by its multiplication table. Payload: [index] with
// index 0 the identity. Built-in tables come from permutation generators.
class FiniteEngine final : public GroupEngine {
 public:
  FiniteEngine(GroupExpr descriptor, std::vector<std::string> generator_names,
               std::vector<std::vector<int>> generator_permutations);

  EngineKind kind() const noexcept override { return EngineKind::finite; }
  std::size_t group_order() const noexcept { return inverse_.size(); }

  Payload identity() const override { return {0}; }
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  // Conjugacy class id (the least element index in the class) and a
  // conjugator u with g = u * rep * u^-1.
  std::int32_t class_representative(std::int32_t g) const {
    return class_rep_[g];
  }
  std::int32_t class_conjugator(std::int32_t g) const {
    return class_conj_[g];
  }
  std::int32_t product(std::int32_t g, std::int32_t h) const {
    return table_[static_cast<std::size_t>(g) * inverse_.size() +
                  static_cast<std::size_t>(h)];
  }

  // Names accepted by table(NAME).
  static std::vector<std::string> builtin_tables();

 private:
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> inverse_;
  std::vector<std::int32_t> generators_;
  std::vector<Word> words_;  // shortlex-least word per element
  std::vector<std::int32_t> class_rep_;
  std::vector<std::int32_t> class_conj_;
};

std::shared_ptr<const FiniteEngine> make_table_engine(
    const GroupExpr& descriptor);

// Free product of two engines. Payload: alternating nontrivial syllables
// [factor, length, data...]*.
class FreeProductEngine final : public GroupEngine {
 public:
  FreeProductEngine(GroupExpr descriptor, EnginePtr left, EnginePtr right);

  EngineKind kind() const noexcept override {
    return EngineKind::free_product;
  }
  ConjugacyCapability conjugacy_capability() const override;

  const GroupEngine& factor(int i) const { return *factors_[i]; }
  const EnginePtr& factor_ptr(int i) const { return factors_[i]; }

  Payload identity() const override { return {}; }
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  struct Syllable {
    int factor;
    PayloadView data;
  };
  std::vector<Syllable> syllables(PayloadView g) const;
  std::size_t syllable_length(PayloadView g) const;
  // Injection of factor i.
  Payload embed(int factor, PayloadView h) const;
  Payload encode(const std::vector<Syllable>& syllables) const;

  struct Reduction {
    Payload core;
    Payload conjugator;  // g = conjugator * core * conjugator^-1
  };
  // Syllable-level cyclic reduction: the core has length <= 1 or its first
  // and last syllables lie in different factors.
  Reduction cyclic_reduce(PayloadView g) const;
  // Rotation of a cyclically reduced core by k syllables, with the
  // conjugator u such that core = u * rotated * u^-1.
  std::pair<Payload, Payload> rotate(PayloadView core, std::size_t k) const;

 private:
  EnginePtr factors_[2];
};

// Direct product of two engines. Payload: [len0, data0..., data1...].
class DirectProductEngine final : public GroupEngine {
 public:
  DirectProductEngine(GroupExpr descriptor, EnginePtr left, EnginePtr right);

  EngineKind kind() const noexcept override {
    return EngineKind::direct_product;
  }
  ConjugacyCapability conjugacy_capability() const override;

  const GroupEngine& factor(int i) const { return *factors_[i]; }
  const EnginePtr& factor_ptr(int i) const { return factors_[i]; }

  Payload identity() const override;
  Payload generator(std::size_t i) const override;
  Payload multiply(PayloadView g, PayloadView h) const override;
  Payload invert(PayloadView g) const override;
  std::int64_t order(PayloadView g) const override;
  PowerSolutions power_solutions(PayloadView x, PayloadView g) const override;
  CosetRep coset_rep(PayloadView x, PayloadView g) const override;
  Word to_word(PayloadView g) const override;
  bool is_canonical(PayloadView p) const override;

  PayloadView component(PayloadView g, int i) const;
  Payload pair(PayloadView g0, PayloadView g1) const;
  Payload embed(int factor, PayloadView h) const;

 private:
  EnginePtr factors_[2];
};

}  // namespace cgw
