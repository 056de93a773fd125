#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/smallcancel.hpp"

namespace cgw {

namespace {

// Number of elements h of H with h != h^-1, or nullopt when H is infinite
// or too large to list.
std::optional<std::size_t> non_involutions(const GroupEngine& H) {
  std::int64_t order = 0;
  if (H.kind() == EngineKind::cyclic) {
    order = static_cast<const CyclicEngine&>(H).group_order();
  } else if (H.kind() == EngineKind::finite) {
    order = static_cast<std::int64_t>(
        static_cast<const FiniteEngine&>(H).group_order());
  } else {
    return std::nullopt;
  }
  if (H.kind() == EngineKind::cyclic) {
    // Z/m: h = -h iff 2h = 0.
    return static_cast<std::size_t>(order - (order % 2 == 0 ? 2 : 1));
  }
  std::size_t count = 0;
  for (std::int32_t i = 0; i < order; ++i) {
    Payload h{i};
    if (!(H.invert(view(h)) == h)) {
      ++count;
    }
  }
  return count;
}

WWordHypothesis hypothesis(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? "verified" : "failed", std::move(detail)};
}

}  // namespace

bool WWord::certified() const {
  for (const auto& h : certificate) {
    if (h.status == "failed") {
      return false;
    }
  }
  return true;
}

WWord generate_W_word(
    const GroupEngine& e, const Word& x, std::size_t n,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& exponent_plan,
    int alpha, int beta) {
  if (e.kind() != EngineKind::free_product) {
    throw InputError("W-words need a free product, got " +
                     e.descriptor().to_string());
  }
  if (n == 0) {
    throw InputError("W-words need n >= 1");
  }
  if (alpha == beta || alpha < 0 || alpha > 1 || beta < 0 || beta > 1) {
    throw InputError("alpha and beta must be the two distinct factors 0 and 1");
  }
  if (!exponent_plan.empty() && exponent_plan.size() != n) {
    throw InputError("exponent plan has " + std::to_string(exponent_plan.size()) +
                     " entries, expected " + std::to_string(n));
  }
  const auto& fp = static_cast<const FreeProductEngine&>(e);
  const GroupEngine& Ha = fp.factor(alpha);
  const GroupEngine& Hb = fp.factor(beta);
  for (auto [H, label] : {std::pair(&Ha, "alpha"), std::pair(&Hb, "beta")}) {
    auto supply = non_involutions(*H);
    if (H->rank() == 0 || (supply && *supply / 2 < n)) {
      throw InputError(std::string("factor ") + label + " (" +
                       H->descriptor().to_string() + ") cannot supply " +
                       std::to_string(n) +
                       " pairwise non-inverse elements with a_i != a_i^-1");
    }
  }

  WWord out;
  std::vector<Letter> letters;
  bool x_ok = x.empty() || (x.length() == 1 && e.generator_index(x[0].generator));
  if (!x.empty()) {
    letters.push_back(x[0]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t p = exponent_plan.empty() ? static_cast<std::int64_t>(i)
                                           : exponent_plan[i - 1].first;
    std::int64_t q = exponent_plan.empty() ? static_cast<std::int64_t>(i)
                                           : exponent_plan[i - 1].second;
    Payload a = Ha.power(view(Ha.generator(0)), p);
    Payload b = Hb.power(view(Hb.generator(0)), q);
    if (Ha.is_identity(view(a)) || Hb.is_identity(view(b))) {
      throw InputError("exponent plan entry " + std::to_string(i) +
                       " gives a trivial letter");
    }
    letters.push_back(Letter{parabolic_letter_name(e, alpha, view(a)), 1});
    letters.push_back(Letter{parabolic_letter_name(e, beta, view(b)), 1});
    out.a.push_back(std::move(a));
    out.b.push_back(std::move(b));
  }
  out.word = Word(std::move(letters));

  out.certificate.push_back(hypothesis(
      "W1: W = x a_1 b_1 ... a_n b_n", true, "n = " + std::to_string(n)));
  out.certificate.push_back(hypothesis(
      "W2: x in X or x = 1", x_ok,
      x.empty() ? "x = 1" : "x = " + to_string(x)));
  out.certificate.push_back(hypothesis(
      "W3: a_i in H_alpha, b_i in H_beta, H_alpha and H_beta meet trivially",
      true, "distinct free factors " + std::to_string(alpha) + " and " +
                std::to_string(beta)));

  auto distinct = [&](const GroupEngine& H, const std::vector<Payload>& v,
                      const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      Payload inv = H.invert(view(v[i]));
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (i != j && (v[j] == v[i] || v[j] == inv)) {
          return hypothesis(std::string(name) + "_i != " + name + "_j^(+-1)",
                            false,
                            "i = " + std::to_string(i + 1) +
                                ", j = " + std::to_string(j + 1));
        }
      }
    }
    return hypothesis(std::string(name) + "_i != " + name + "_j^(+-1)", true,
                      "all " + std::to_string(v.size()) + " pairs checked");
  };
  auto non_involution = [&](const GroupEngine& H, const std::vector<Payload>& v,
                            const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (H.invert(view(v[i])) == v[i]) {
        return hypothesis(std::string(name) + "_i != " + name + "_i^-1", false,
                          "i = " + std::to_string(i + 1));
      }
    }
    return hypothesis(std::string(name) + "_i != " + name + "_i^-1", true,
                      "all " + std::to_string(v.size()) + " checked");
  };
  out.certificate.push_back(distinct(Ha, out.a, "a"));
  out.certificate.push_back(distinct(Hb, out.b, "b"));
  out.certificate.push_back(non_involution(Ha, out.a, "a"));
  out.certificate.push_back(non_involution(Hb, out.b, "b"));
  out.certificate.push_back(
      {"a_i, b_i avoid {g in <Omega> : |g|_Omega <= L}", "not checkable",
       "Omega and L are existential"});
  return out;
}

}  // namespace cgw
