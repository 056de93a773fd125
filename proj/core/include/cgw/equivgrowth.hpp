#pragma once

// The preorder f <= g (f(n) <= g(Cn)) and the equivalence f ~ g on sampled
// functions, with exact reference functions for comparison.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgw/growth.hpp"

namespace cgw {

using BigRational = boost::multiprecision::cpp_rational;

struct ReferenceSpec {
  enum class Kind { poly, exp, nsq_log };
  Kind kind = Kind::poly;
  std::int64_t degree = 0;  // poly
  BigRational base = 2;     // exp

  BigRational operator()(std::size_t n) const;
  std::string to_string() const;
};

// "poly(d)", "exp(a)" with a an integer or p/q, "nsq_log".
ReferenceSpec parse_reference(std::string_view text);

// Values on 1..N. Reference functions can also be evaluated past N.
struct SampledFunction {
  std::string name;
  std::string provenance;  // "table: ..." or "reference: ..."
  std::vector<BigRational> values;  // values[n-1] = f(n)
  std::optional<ReferenceSpec> formula;

  std::size_t size() const noexcept { return values.size(); }
  std::optional<BigRational> at(std::size_t n) const;
};

// log is realized as ceil(log2(n+1)).
SampledFunction reference_function(const ReferenceSpec& spec, std::size_t N);
SampledFunction reference_function(std::string_view spec, std::size_t N);
// Drops n = 0; rejects a table whose sampled values are below 1.
SampledFunction from_table(const GrowthTable& t);

struct Counterexample {
  std::int64_t C = 0;
  std::size_t n = 0;  // 0 when no n could be checked for this C
  BigRational f_value;
  BigRational g_value;
};

inline constexpr const char* kFiniteScaleNote = "finite-scale evidence only";

struct PreceqResult {
  bool holds = false;
  std::int64_t C = 0;  // minimal witness when holds
  std::size_t checked_up_to = 0;  // largest n checked for the witness C
  std::vector<Counterexample> refutations;  // per C, the largest violating n
};

struct EquivVerdict {
  enum class Relation { preceq, equiv, refuted };
  Relation relation = Relation::refuted;
  std::int64_t C = 0;
  std::optional<std::int64_t> C_reverse;  // equiv: witness for g <= f
  std::string failing_direction;  // "f<=g" or "g<=f" when refuted
  std::vector<Counterexample> refutations;
  std::size_t N = 0;
  std::int64_t Cmax = 0;
  std::string f_name;
  std::string g_name;
  std::string note = kFiniteScaleNote;
};
std::string to_string(EquivVerdict::Relation r);

// For C = 1..Cmax checks f(n) <= g(Cn) on every n <= |f| with g(Cn)
// available.
PreceqResult preceq(const SampledFunction& f, const SampledFunction& g,
                    std::int64_t Cmax);
EquivVerdict preceq_witness(const SampledFunction& f, const SampledFunction& g,
                            std::int64_t Cmax);
EquivVerdict equiv_verdict(const SampledFunction& f, const SampledFunction& g,
                           std::int64_t Cmax);

}  // namespace cgw
