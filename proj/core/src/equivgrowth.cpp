#include "cgw/equivgrowth.hpp"

#include <charconv>

#include "cgw/error.hpp"
#include "cgw/smallcancel.hpp"

namespace cgw {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t ceil_log2_plus1(std::size_t n) {
  std::int64_t k = 0;
  while ((std::size_t{1} << k) < n + 1) {
    ++k;
  }
  return k;
}

BigRational pow_rational(const BigRational& a, std::size_t n) {
  cpp_int num = pow(boost::multiprecision::numerator(a), static_cast<unsigned>(n));
  cpp_int den =
      pow(boost::multiprecision::denominator(a), static_cast<unsigned>(n));
  return BigRational(num, den);
}

std::string rational_text(const BigRational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

BigRational ReferenceSpec::operator()(std::size_t n) const {
  switch (kind) {
    case Kind::poly:
      return BigRational(pow(cpp_int(n), static_cast<unsigned>(degree)));
    case Kind::exp:
      return pow_rational(base, n);
    case Kind::nsq_log:
      return BigRational(cpp_int(n) * n * ceil_log2_plus1(n));
  }
  return 0;
}

std::string ReferenceSpec::to_string() const {
  switch (kind) {
    case Kind::poly:
      return "poly(" + std::to_string(degree) + ")";
    case Kind::exp:
      return "exp(" + rational_text(base) + ")";
    case Kind::nsq_log:
      return "nsq_log";
  }
  return "";
}

ReferenceSpec parse_reference(std::string_view text) {
  ReferenceSpec spec;
  auto arg = [&](std::string_view head) -> std::optional<std::string_view> {
    if (text.size() > head.size() + 1 && text.substr(0, head.size()) == head &&
        text[head.size()] == '(' && text.back() == ')') {
      return text.substr(head.size() + 1, text.size() - head.size() - 2);
    }
    return std::nullopt;
  };
  if (text == "nsq_log") {
    spec.kind = ReferenceSpec::Kind::nsq_log;
    return spec;
  }
  if (auto a = arg("poly")) {
    spec.kind = ReferenceSpec::Kind::poly;
    auto [ptr, ec] = std::from_chars(a->data(), a->data() + a->size(), spec.degree);
    if (ec != std::errc() || ptr != a->data() + a->size() || spec.degree < 0) {
      throw InputError("poly degree must be a nonnegative integer: '" +
                       std::string(text) + "'");
    }
    return spec;
  }
  if (auto a = arg("exp")) {
    spec.kind = ReferenceSpec::Kind::exp;
    Rational r = parse_rational(*a);
    spec.base = BigRational(r.numerator(), r.denominator());
    if (spec.base <= 1) {
      throw InputError("exp base must exceed 1: '" + std::string(text) + "'");
    }
    return spec;
  }
  throw InputError("unknown reference function '" + std::string(text) +
                   "' (expected poly(d), exp(a) or nsq_log)");
}

std::optional<BigRational> SampledFunction::at(std::size_t n) const {
  if (n >= 1 && n <= values.size()) {
    return values[n - 1];
  }
  if (n >= 1 && formula) {
    return (*formula)(n);
  }
  return std::nullopt;
}

SampledFunction reference_function(const ReferenceSpec& spec, std::size_t N) {
  if (N == 0) {
    throw InputError("reference functions need N >= 1");
  }
  SampledFunction f;
  f.name = spec.to_string();
  f.provenance = "reference: " + spec.to_string() +
                 (spec.kind == ReferenceSpec::Kind::nsq_log
                      ? " with log = ceil(log2(n+1))"
                      : "");
  f.formula = spec;
  for (std::size_t n = 1; n <= N; ++n) {
    f.values.push_back(spec(n));
  }
  return f;
}

SampledFunction reference_function(std::string_view spec, std::size_t N) {
  return reference_function(parse_reference(spec), N);
}

SampledFunction from_table(const GrowthTable& t) {
  SampledFunction f;
  f.name = to_string(t.kind) + "[" + t.engine + "]";
  f.provenance = "table: " + to_string(t.kind) + " of " + t.engine;
  for (std::size_t n = 1; n < t.values.size(); ++n) {
    if (t.values[n] < 1) {
      throw InputError("sampled values must be at least 1");
    }
    f.values.emplace_back(t.values[n]);
  }
  return f;
}

std::string to_string(EquivVerdict::Relation r) {
  switch (r) {
    case EquivVerdict::Relation::preceq:
      return "preceq";
    case EquivVerdict::Relation::equiv:
      return "equiv";
    case EquivVerdict::Relation::refuted:
      return "refuted-within";
  }
  return "refuted-within";
}

PreceqResult preceq(const SampledFunction& f, const SampledFunction& g,
                    std::int64_t Cmax) {
  if (Cmax < 1) {
    throw InputError("Cmax must be at least 1");
  }
  if (f.size() < static_cast<std::size_t>(Cmax)) {
    throw InputError("checkable range too small: N = " +
                     std::to_string(f.size()) + " < Cmax = " +
                     std::to_string(Cmax));
  }
  PreceqResult out;
  for (std::int64_t C = 1; C <= Cmax; ++C) {
    Counterexample cx{C, 0, 0, 0};
    std::size_t checked = 0;
    bool ok = true;
    for (std::size_t n = 1; n <= f.size(); ++n) {
      auto gv = g.at(static_cast<std::size_t>(C) * n);
      if (!gv) {
        break;
      }
      checked = n;
      if (f.values[n - 1] > *gv) {
        cx = Counterexample{C, n, f.values[n - 1], *gv};
        ok = false;
      }
    }
    if (ok && checked > 0) {
      out.holds = true;
      out.C = C;
      out.checked_up_to = checked;
      out.refutations.clear();
      return out;
    }
    out.refutations.push_back(cx);
  }
  return out;
}

namespace {

EquivVerdict base_verdict(const SampledFunction& f, const SampledFunction& g,
                          std::int64_t Cmax) {
  EquivVerdict v;
  v.N = f.size();
  v.Cmax = Cmax;
  v.f_name = f.name;
  v.g_name = g.name;
  return v;
}

}  // namespace

EquivVerdict preceq_witness(const SampledFunction& f, const SampledFunction& g,
                            std::int64_t Cmax) {
  EquivVerdict v = base_verdict(f, g, Cmax);
  PreceqResult r = preceq(f, g, Cmax);
  if (r.holds) {
    v.relation = EquivVerdict::Relation::preceq;
    v.C = r.C;
  } else {
    v.failing_direction = "f<=g";
    v.refutations = std::move(r.refutations);
  }
  return v;
}

EquivVerdict equiv_verdict(const SampledFunction& f, const SampledFunction& g,
                           std::int64_t Cmax) {
  EquivVerdict v = base_verdict(f, g, Cmax);
  PreceqResult fwd = preceq(f, g, Cmax);
  if (!fwd.holds) {
    v.failing_direction = "f<=g";
    v.refutations = std::move(fwd.refutations);
    return v;
  }
  PreceqResult bwd = preceq(g, f, Cmax);
  if (!bwd.holds) {
    v.failing_direction = "g<=f";
    v.refutations = std::move(bwd.refutations);
    return v;
  }
  v.relation = EquivVerdict::Relation::equiv;
  v.C = fwd.C;
  v.C_reverse = bwd.C;
  return v;
}

}  // namespace cgw
