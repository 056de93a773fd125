#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/smallcancel.hpp"

namespace cgw {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

// "i.[w]" -> (i, w)
std::optional<std::pair<int, std::string_view>> split_parabolic(
    std::string_view name) {
  if (name.size() < 5 || name[1] != '.' || name[2] != '[' ||
      name.back() != ']' || (name[0] != '0' && name[0] != '1')) {
    return std::nullopt;
  }
  return std::pair(name[0] - '0', name.substr(3, name.size() - 4));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den =
      slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CheckStatus combine(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::fail || b == CheckStatus::fail) {
    return CheckStatus::fail;
  }
  if (a == CheckStatus::inconclusive || b == CheckStatus::inconclusive) {
    return CheckStatus::inconclusive;
  }
  return CheckStatus::pass;
}

std::string parabolic_letter_name(const GroupEngine& e, int factor,
                                  PayloadView h) {
  if (e.kind() != EngineKind::free_product) {
    throw InputError("parabolic letters exist only for free products");
  }
  const auto& fp = static_cast<const FreeProductEngine&>(e);
  return std::to_string(factor) + ".[" + to_string(fp.factor(factor).to_word(h)) +
         "]";
}

RelativeAlphabet::RelativeAlphabet(const GroupEngine& e,
                                   std::size_t letter_bound)
    : e_(e), letter_bound_(letter_bound), letters_(LetterSet::standard(e)) {
  if (e.kind() != EngineKind::free_product || letter_bound == 0) {
    return;
  }
  const auto& fp = static_cast<const FreeProductEngine&>(e);
  for (int i = 0; i < 2; ++i) {
    Ball hb = enumerate_ball(fp.factor(i), letter_bound);
    for (std::size_t r = 1; r < hb.layers.size(); ++r) {
      for (const Payload& h : hb.layers[r]) {
        letters_.add(e, fp.embed(i, view(h)),
                     Word::letter(parabolic_letter_name(e, i, view(h))));
      }
    }
  }
}

Payload RelativeAlphabet::letter(const Letter& l) const {
  if (e_.generator_index(l.generator)) {
    return e_.letter_payload(l);
  }
  auto parts = split_parabolic(l.generator);
  if (!parts || e_.kind() != EngineKind::free_product) {
    throw InputError("unknown letter '" + l.generator + "' for " +
                     e_.descriptor().to_string());
  }
  const auto& fp = static_cast<const FreeProductEngine&>(e_);
  const GroupEngine& H = fp.factor(parts->first);
  Payload h = H.evaluate(parse_word(parts->second, H.generators()));
  if (H.is_identity(view(h))) {
    throw InputError("parabolic letter '" + l.generator + "' is trivial");
  }
  Payload g = fp.embed(parts->first, view(h));
  return l.sign < 0 ? e_.invert(view(g)) : g;
}

Payload RelativeAlphabet::evaluate(const Word& w) const {
  Payload out = e_.identity();
  for (const Letter& l : w.letters()) {
    Payload p = letter(l);
    out = e_.multiply(view(out), view(p));
  }
  return out;
}

std::optional<std::size_t> RelativeAlphabet::length(PayloadView g,
                                                   std::size_t max_radius,
                                                   std::size_t budget) const {
  if (e_.kind() != EngineKind::free_product) {
    return word_length(e_, letters_, g, max_radius, budget);
  }
  const auto& fp = static_cast<const FreeProductEngine&>(e_);
  const std::size_t step = std::max<std::size_t>(letter_bound_, 1);
  std::size_t total = 0;
  for (const auto& syl : fp.syllables(g)) {
    const GroupEngine& H = fp.factor(syl.factor);
    auto h = word_length(H, LetterSet::standard(H), syl.data,
                         (max_radius - std::min(total, max_radius)) * step,
                         budget);
    if (!h) {
      return std::nullopt;
    }
    total += (*h + step - 1) / step;
    if (total > max_radius) {
      return std::nullopt;
    }
  }
  return total;
}

SymmetrizedSet SymmetrizedSet::symmetrize(const std::vector<Word>& base) {
  SymmetrizedSet out;
  for (const Word& w : base) {
    if (w.empty()) {
      throw InputError("relators must be nonempty");
    }
    if (!(free_reduce(w) == w)) {
      throw InputError("relator " + to_string(w) + " is not freely reduced");
    }
    if (w.length() >= 2 && w[0].is_inverse_of(w[w.length() - 1])) {
      throw InputError("relator " + to_string(w) + " is not cyclically reduced");
    }
    out.base_.push_back(w);
    for (const Word& r : {w, w.inverse()}) {
      auto shifts = cyclic_shifts(r);
      out.members_.insert(out.members_.end(), shifts.begin(), shifts.end());
    }
  }
  std::sort(out.members_.begin(), out.members_.end());
  out.members_.erase(std::unique(out.members_.begin(), out.members_.end()),
                     out.members_.end());
  return out;
}

std::vector<Word> read_word_list(std::string_view text) {
  std::vector<Word> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      continue;
    }
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_word(line.substr(first, last - first + 1)));
  }
  return out;
}

QuasiGeodesicReport quasigeodesic_check(const RelativeAlphabet& alphabet,
                                        const Word& R, const Rational& lambda,
                                        std::int64_t c, std::size_t budget) {
  const GroupEngine& e = alphabet.engine();
  const std::size_t L = R.length();
  std::vector<Payload> lp;
  for (const Letter& l : R.letters()) {
    lp.push_back(alphabet.letter(l));
  }
  struct Known {
    std::size_t dist;
    bool exact;
  };
  std::unordered_map<Payload, Known, PayloadHash> cache;
  QuasiGeodesicReport out;
  bool have_worst = false;

  for (std::size_t s = 0; s < L; ++s) {
    Payload acc = e.identity();
    for (std::size_t len = 1; len <= L; ++len) {
      acc = e.multiply(view(acc), view(lp[(s + len - 1) % L]));
      ++out.subwords_checked;
      auto it = cache.find(acc);
      if (it == cache.end()) {
        Known k{0, true};
        try {
          auto d = alphabet.length(view(acc), len, budget);
          // Beyond len the bound dist > len is all that is needed.
          k = d ? Known{*d, true} : Known{len + 1, false};
        } catch (const BudgetExceeded& ex) {
          k = Known{ex.radius_reached() + 1, false};
        }
        it = cache.emplace(acc, k).first;
      }
      const Known& k = it->second;
      Rational margin = Rational(static_cast<std::int64_t>(k.dist)) -
                        lambda * static_cast<std::int64_t>(len) + c;
      CheckStatus st = CheckStatus::pass;
      if (margin < 0) {
        st = k.exact ? CheckStatus::fail : CheckStatus::inconclusive;
      }
      if (st == CheckStatus::inconclusive) {
        ++out.inconclusive;
      }
      bool worse = !have_worst || margin < out.worst_margin;
      if (out.status == CheckStatus::fail && st != CheckStatus::fail) {
        worse = false;
      }
      if (st == CheckStatus::fail && out.status != CheckStatus::fail) {
        worse = true;
      }
      out.status = combine(out.status, st);
      if (worse) {
        have_worst = true;
        out.worst = R.rotate(s).subword(0, len);
        out.worst_distance = k.dist;
        out.worst_distance_exact = k.exact;
        out.worst_margin = margin;
      }
    }
  }
  return out;
}

}  // namespace cgw
