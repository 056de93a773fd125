// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero when any selected criterion fails.
//
//   cgw_acceptance            run all criteria
//   cgw_acceptance 3 7        run criteria 3 and 7

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgw/ball.hpp"
#include "cgw/conjugacy.hpp"
#include "cgw/engines.hpp"
#include "cgw/equivgrowth.hpp"
#include "cgw/growth.hpp"
#include "cgw/hnn.hpp"
#include "cgw/serialize.hpp"
#include "cgw/smallcancel.hpp"
#include "oracles.hpp"

using namespace cgw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<void(Outcome&)> run;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

void note(Outcome& o, const std::string& what) {
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) {
    out += (out.empty() ? "" : " ") + std::to_string(x);
  }
  return out;
}

GrowthOptions threads(std::size_t t) {
  GrowthOptions o;
  o.threads = t;
  return o;
}

// Tables named by criteria 1-4, built at a given thread count.
struct Tables {
  GrowthTable gamma_f2, xi_f2, pi_f2, xi_c33, pi_c33, xi_h;
  std::vector<const GrowthTable*> all() const {
    return {&gamma_f2, &xi_f2, &pi_f2, &xi_c33, &pi_c33, &xi_h};
  }
};

Tables build_tables(std::size_t t) {
  auto f2 = build_engine("free(2)");
  auto c33 = build_engine("product(cyclic(3),cyclic(3))");
  auto h = build_engine("heisenberg");
  Tables out;
  out.gamma_f2 = growth_table(*f2, 8, threads(t));
  out.xi_f2 = conjugacy_growth_table(*f2, 9, threads(t));
  out.pi_f2 = primitive_growth_table(*f2, 9, threads(t));
  out.xi_c33 = conjugacy_growth_table(*c33, 9, threads(t));
  out.pi_c33 = primitive_growth_table(*c33, 9, threads(t));
  out.xi_h = conjugacy_growth_table(*h, 12, threads(t));
  return out;
}

GrowthTable truncate(GrowthTable t, std::size_t N) {
  t.values.resize(N + 1);
  return t;
}

void criterion1(Outcome& o) {
  auto f2 = build_engine("free(2)");
  GrowthTable t = growth_table(*f2, 8);
  std::uint64_t p = 1;
  for (std::size_t n = 0; n <= 8; ++n) {
    require(o, t.values[n] == 2 * p - 1,
            "gamma(" + std::to_string(n) + ") = " + std::to_string(t.values[n]));
    p *= 3;
  }
  note(o, "gamma = " + join(t.values));
}

void criterion2(Outcome& o) {
  auto f2 = build_engine("free(2)");
  GrowthTable t = conjugacy_growth_table(*f2, 7);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto brute = oracle::free_xi_brute(n, 2 * n);
    require(o, brute[n] == t.values[n],
            "union-find xi(" + std::to_string(n) + ") = " +
                std::to_string(brute[n]) + " vs " + std::to_string(t.values[n]));
  }
  auto neck = oracle::free_xi_necklaces(7);
  require(o, neck == t.values, "necklaces " + join(neck) + " vs " + join(t.values));
  note(o, "xi = " + join(t.values));
}

void criterion3(Outcome& o) {
  for (const char* g : {"free(2)", "product(cyclic(3),cyclic(3))"}) {
    auto e = build_engine(g);
    GrowthTable xi = conjugacy_growth_table(*e, 9);
    GrowthTable pi = primitive_growth_table(*e, 9);
    for (const GrowthTable* t : {&xi, &pi}) {
      std::string bad;
      for (std::size_t n = 3; n <= 8; ++n) {
        if (t->values[n + 1] < 2 * t->values[n]) {
          bad += (bad.empty() ? "" : ", ") + std::to_string(t->values[n + 1]) +
                 "/" + std::to_string(t->values[n]) + " at n=" +
                 std::to_string(n);
        }
      }
      require(o, bad.empty(),
              std::string(g) + " " + to_string(t->kind) + " ratio < 2: " + bad);
    }
    auto v = equiv_verdict(from_table(truncate(xi, 8)),
                           reference_function("exp(2)", 8), 3);
    require(o, v.relation == EquivVerdict::Relation::equiv,
            std::string(g) + " xi vs exp(2): " + to_string(v.relation));
    if (v.relation == EquivVerdict::Relation::equiv) {
      note(o, std::string(g) + " xi ~ exp(2) with C = " + std::to_string(v.C) +
                  ", " + std::to_string(*v.C_reverse));
    }
  }
}

void criterion4(Outcome& o) {
  auto h = build_engine("heisenberg");
  GrowthTable t = conjugacy_growth_table(*h, 12);
  auto brute = oracle::heis_xi_brute(4, 10);
  for (std::size_t n = 0; n <= 4; ++n) {
    require(o, brute[n] == t.values[n],
            "xi_H(" + std::to_string(n) + ") = " + std::to_string(t.values[n]) +
                ", brute force " + std::to_string(brute[n]));
  }
  SampledFunction xi = from_table(t);
  auto lower = preceq_witness(reference_function("poly(2)", 12), xi, 4);
  auto upper = preceq_witness(xi, reference_function("nsq_log", 12), 6);
  require(o, lower.relation == EquivVerdict::Relation::preceq,
          "poly(2) <= xi_H: " + to_string(lower.relation));
  require(o, upper.relation == EquivVerdict::Relation::preceq,
          "xi_H <= nsq_log: " + to_string(upper.relation));
  note(o, "xi_H = " + join(t.values) + "; C = " + std::to_string(lower.C) +
              ", " + std::to_string(upper.C));
}

// Word over x, X, y, Y, t, T mapped into F(x, t).
std::string free_image(const std::string& w) {
  std::string out;
  for (char c : w) {
    switch (c) {
      case 'y': out += "Txt"; break;
      case 'Y': out += "TXt"; break;
      default: out += c;
    }
  }
  return oracle::reduce(out);
}

void criterion5(Outcome& o) {
  auto e = build_engine("hnn(free(2), a='x', b='y')");
  const auto& hnn = static_cast<const HnnEngine&>(*e);
  const GroupEngine& base = hnn.base();
  auto syllables = oracle::ball(2, "xy");
  std::vector<Payload> payloads;
  for (const auto& s : syllables) {
    payloads.push_back(base.evaluate(oracle::to_word(s)));
  }
  std::size_t words = 0, pinch_free = 0, mismatches = 0;
  std::string first;
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<std::size_t> idx(k + 1, 0);
    for (std::size_t sign_bits = 0; sign_bits < (std::size_t{1} << k);
         ++sign_bits) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        oracle::HnnSyllables w;
        HnnWord raw;
        for (std::size_t i = 0; i <= k; ++i) {
          w.pieces.push_back(syllables[idx[i]]);
          raw.pieces.push_back(payloads[idx[i]]);
          if (i < k) {
            int s = (sign_bits >> i) & 1 ? -1 : 1;
            w.signs.push_back(s);
            raw.signs.push_back(s);
          }
        }
        ++words;
        auto expected = oracle::britton_all_orders(w);
        HnnWord got = hnn.britton_reduce(raw);
        std::string got_image =
            free_image(oracle::from_word(hnn.to_word(view(hnn.encode(got)))));
        bool ok = expected.t_lengths.size() == 1 &&
                  expected.images.size() == 1 &&
                  *expected.t_lengths.begin() == got.t_length() &&
                  *expected.images.begin() == got_image &&
                  got_image == oracle::hnn_image(w);
        if (k >= 1 && !oracle::has_pinch(w)) {
          ++pinch_free;
          Payload g = hnn.encode(hnn.britton_reduce(raw));
          ok = ok && !hnn.is_identity(view(g)) && !oracle::hnn_image(w).empty();
        }
        if (!ok) {
          ++mismatches;
          if (first.empty()) {
            first = "t-length " + std::to_string(k) + " word " +
                    std::to_string(words);
          }
        }
        std::size_t i = 0;
        while (i <= k && ++idx[i] == syllables.size()) {
          idx[i++] = 0;
        }
        if (i > k) {
          break;
        }
      }
    }
  }
  require(o, mismatches == 0,
          std::to_string(mismatches) + " disagreements, first " + first);
  note(o, std::to_string(words) + " words, " + std::to_string(pinch_free) +
              " pinch-free with t-length >= 1");
}

void criterion6(Outcome& o) {
  auto f2 = build_engine("free(2)");
  auto e = build_engine("hnn(free(2), a='x', b='y')");
  const auto& hnn = static_cast<const HnnEngine&>(*e);
  std::vector<std::string> pool;
  for (const auto& w : oracle::ball(4, "xy")) {
    std::string core = oracle::cyclic_core(w);
    bool in_x = core.find_first_not_of("xX") == std::string::npos;
    bool in_y = core.find_first_not_of("yY") == std::string::npos;
    if (!in_x && !in_y) {
      pool.push_back(w);
    }
  }
  Ball conjugators = enumerate_ball(hnn, 4);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto conjugates_of = [&](const std::string& f) {
    std::vector<std::string> out;
    for (const auto& g : pool) {
      if (oracle::min_rotation(oracle::cyclic_core(g)) ==
          oracle::min_rotation(oracle::cyclic_core(f))) {
        out.push_back(g);
      }
    }
    return out;
  };
  std::size_t yes = 0, contradictions = 0;
  for (int i = 0; i < 200; ++i) {
    std::string f = pool[pick(rng)];
    std::string g;
    if (i % 2 == 0) {
      auto c = conjugates_of(f);
      g = c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
    } else {
      g = pool[pick(rng)];
    }
    Payload pf = f2->evaluate(oracle::to_word(f));
    Payload pg = f2->evaluate(oracle::to_word(g));
    bool keys = class_key_payload(*f2, view(pf)) == class_key_payload(*f2, view(pg));
    Payload hf = hnn.embed(view(pf));
    Payload hg = hnn.embed(view(pg));
    bool lemma = are_conjugate(hnn, view(hf), view(hg), 4).verdict == Verdict::yes;
    bool search = false;
    for (const auto& layer : conjugators.layers) {
      for (const Payload& u : layer) {
        if (hnn.conjugate(view(hf), view(u)) == hg) {
          search = true;
          break;
        }
      }
      if (search) {
        break;
      }
    }
    yes += keys;
    if (lemma != keys || search != keys) {
      ++contradictions;
    }
  }
  require(o, contradictions == 0,
          std::to_string(contradictions) + " contradictions");
  note(o, "200 pairs, " + std::to_string(yes) + " conjugate, " +
              std::to_string(conjugators.size()) + " conjugators of length <= 4");
}

void criterion7(Outcome& o) {
  auto hz = build_engine("direct(free(1),free(1))");
  auto hs = build_engine("product(free(1),free(1))");
  const auto& dp = static_cast<const DirectProductEngine&>(*hz);
  const auto& fp = static_cast<const FreeProductEngine&>(*hs);
  const GroupEngine& H = dp.factor(0);
  std::vector<Payload> hs_direct, hs_free;
  for (int k = -5; k <= 5; ++k) {
    Payload h = H.power(view(H.generator(0)), k);
    hs_direct.push_back(dp.embed(0, view(h)));
    hs_free.push_back(fp.embed(0, view(h)));
  }
  HatMetric direct(*hz, 0, 10);
  HatMetric free(*hs, 0, 10);
  std::size_t worst = 0, pairs = 0, found = 0;
  for (std::size_t i = 0; i < hs_direct.size(); ++i) {
    for (std::size_t j = 0; j < hs_direct.size(); ++j) {
      auto d = direct.distance(view(hs_direct[i]), view(hs_direct[j]));
      require(o, d.value && *d.value <= 3,
              "H x Z pair " + std::to_string(i) + "," + std::to_string(j));
      if (d.value) {
        worst = std::max(worst, *d.value);
      }
      if (i != j) {
        ++pairs;
        auto f = free.distance(view(hs_free[i]), view(hs_free[j]));
        found += f.value.has_value();
      }
    }
  }
  require(o, found == 0, std::to_string(found) + " H * Z pairs found within 10");
  note(o, "H x Z max d = " + std::to_string(worst) + " over 121 pairs; H * Z " +
              std::to_string(pairs) + " distinct pairs not found within 10");
}

void criterion8(Outcome& o) {
  auto f2 = build_engine("free(2)");
  RelativeAlphabet A(*f2, 0);
  std::mt19937_64 rng(7);
  std::size_t total = 0, bad = 0;
  std::string first;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t words = 1 + rng() % 2;
    std::size_t eps = rng() % 2;
    std::vector<std::string> base;
    while (base.size() < words) {
      std::size_t len = 8 + rng() % 9;
      std::string w;
      const std::string letters = "xXyY";
      while (w.size() < len) {
        char c = letters[rng() % 4];
        if (w.empty() || w.back() != oracle::inv(c)) {
          w += c;
        }
      }
      if (oracle::cyclically_reduced(w)) {
        base.push_back(w);
      }
    }
    std::vector<Word> bw;
    for (const auto& w : base) {
      bw.push_back(oracle::to_word(w));
    }
    SymmetrizedSet S = SymmetrizedSet::symmetrize(bw);
    auto got = find_pieces(A, S, eps);
    std::set<oracle::Piece> mine;
    bool witnesses_ok = true;
    for (const auto& p : got) {
      std::string R = oracle::from_word(S.members()[p.r]);
      std::string R2 = oracle::from_word(S.members()[p.r2]);
      mine.insert(oracle::Piece{p.kind == PieceKind::epsilon ? 0 : 1, R,
                                p.u_len, R2, p.u2_start, p.u2_len, p.sign});
      std::string Y = oracle::from_word(p.y);
      std::string Z = oracle::from_word(p.z);
      std::string U = R.substr(0, p.u_len);
      if (p.sign < 0) {
        U = oracle::inverse(U);
      }
      witnesses_ok = witnesses_ok && Y.size() <= eps && Z.size() <= eps &&
                     oracle::reduce(Y + U + Z) == R2.substr(p.u2_start, p.u2_len);
      if (p.kind == PieceKind::epsilon) {
        witnesses_ok = witnesses_ok &&
                       oracle::reduce(Y + R + oracle::inverse(Y)) != R2;
      }
    }
    auto expected = oracle::brute_pieces(oracle::symmetrize(base), eps);
    SCParams params;
    params.eps = eps;
    params.mu = Rational(1, 2);
    SCReport rep = check_condition(A, S, params);
    std::size_t eps_viol = 0, prime_viol = 0;
    for (const auto& p : expected) {
      if (2 * std::max(p.k, p.k2) >= p.r.size()) {
        (p.kind == 0 ? eps_viol : prime_viol)++;
      }
    }
    bool consistent =
        rep.pieces_found == expected.size() &&
        rep.violations.size() == eps_viol + prime_viol &&
        (rep.pieces == CheckStatus::fail) == (eps_viol > 0) &&
        (rep.prime_pieces == CheckStatus::fail) == (prime_viol > 0);
    total += expected.size();
    if (mine != expected || !witnesses_ok || !consistent) {
      ++bad;
      if (first.empty()) {
        first = "trial " + std::to_string(trial) + " (" +
                std::to_string(mine.size()) + " vs " +
                std::to_string(expected.size()) + " pieces)";
      }
    }
  }
  require(o, bad == 0, std::to_string(bad) + " disagreeing sets, first " + first);
  note(o, "50 sets, " + std::to_string(total) + " pieces");
}

void criterion9(Outcome& o) {
  Tables t = build_tables(1);
  auto f2 = build_engine("free(2)");
  auto c33 = build_engine("product(cyclic(3),cyclic(3))");
  auto h = build_engine("heisenberg");
  std::vector<std::pair<const GrowthTable*, std::uint64_t>> rows{
      {&t.gamma_f2, f2->rank()}, {&t.xi_f2, f2->rank()},
      {&t.pi_f2, f2->rank()},    {&t.xi_c33, c33->rank()},
      {&t.pi_c33, c33->rank()},  {&t.xi_h, h->rank()}};
  for (auto [table, rank] : rows) {
    const auto& v = table->values;
    std::uint64_t bound = 1;
    for (std::size_t n = 0; n < v.size(); ++n) {
      require(o, n == 0 || v[n - 1] <= v[n],
              table->engine + " " + to_string(table->kind) + " decreases at " +
                  std::to_string(n));
      require(o, v[n] <= bound,
              table->engine + " " + to_string(table->kind) + " above (2|X|+1)^n at " +
                  std::to_string(n));
      bound *= 2 * rank + 1;
    }
    require(o, is_non_decreasing(v) && within_exponential_bound(v, 2 * rank + 1),
            "library predicates disagree on " + table->engine);
  }
  note(o, "6 tables checked");
}

void criterion10(Outcome& o) {
  std::vector<std::string> reference;
  for (std::size_t t : {1, 2, 8}) {
    Tables tables = build_tables(t);
    std::vector<std::string> out;
    for (const GrowthTable* table : tables.all()) {
      out.push_back(to_csv(*table) + to_json(*table));
    }
    if (reference.empty()) {
      reference = out;
    } else {
      require(o, out == reference,
              "output at " + std::to_string(t) + " threads differs");
    }
  }
  note(o, "6 tables identical at 1, 2 and 8 threads");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "free-group growth 2*3^n - 1 for n <= 8", 10, criterion1},
      {2, "free-group conjugacy growth vs union-find and necklaces", 60,
       criterion2},
      {3, "xi and pi ratios >= 2 on [3, 8] and xi ~ exp(2)", 0, criterion3},
      {4, "Heisenberg xi vs brute force and the n^2 log n sandwich", 300,
       criterion4},
      {5, "Britton reduction vs all-orders pinch reduction", 120, criterion5},
      {6, "HNN conjugacy of base elements vs free-group keys", 120, criterion6},
      {7, "relative metric on H x Z and H * Z", 60, criterion7},
      {8, "piece search vs brute-force scan", 300, criterion8},
      {9, "monotone tables under the exponential bound", 0, criterion9},
      {10, "tables identical across thread counts", 0, criterion10},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.push_back(std::atoi(argv[i]));
  }
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& ex) {
      require(o, false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      require(o, false, "over the time limit");
    }
    all_pass = all_pass && o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << ": "
         << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << c.title
         << " -- " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
