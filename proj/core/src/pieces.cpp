#include <algorithm>
#include <map>
#include <unordered_map>

#include "cgw/error.hpp"
#include "cgw/smallcancel.hpp"
#include "parallel.hpp"

namespace cgw {

namespace {

struct Labelled {
  std::vector<Payload> elements;  // BFS order, shortlex within a layer
  std::vector<Word> words;
  std::unordered_map<Payload, std::size_t, PayloadHash> index;
};

// Ball of radius eps over the alphabet letters with one word per element.
Labelled labelled_ball(const RelativeAlphabet& A, std::size_t eps) {
  const GroupEngine& e = A.engine();
  const LetterSet& ls = A.letters();
  Labelled out;
  out.elements.push_back(e.identity());
  out.words.emplace_back();
  out.index.emplace(e.identity(), 0);
  std::size_t begin = 0;
  for (std::size_t r = 1; r <= eps; ++r) {
    std::size_t end = out.elements.size();
    std::vector<std::pair<Payload, Word>> layer;
    std::unordered_map<Payload, std::size_t, PayloadHash> fresh;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t l = 0; l < ls.size(); ++l) {
        Payload g = e.multiply(view(out.elements[i]), view(ls.letters()[l]));
        if (out.index.count(g) != 0 || fresh.count(g) != 0) {
          continue;
        }
        fresh.emplace(g, layer.size());
        layer.emplace_back(std::move(g), out.words[i] * ls.labels()[l]);
      }
    }
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) {
      return shortlex_less(view(a.first), view(b.first));
    });
    for (auto& [g, w] : layer) {
      out.index.emplace(g, out.elements.size());
      out.elements.push_back(std::move(g));
      out.words.push_back(std::move(w));
    }
    begin = end;
  }
  return out;
}

struct Relator {
  std::size_t length;
  std::vector<Payload> prefix;  // prefix[k] = element of R[0, k)
  std::vector<Payload> prefix_inv;
};

Rational piece_ratio(std::size_t a, std::size_t b, std::size_t len) {
  return Rational(static_cast<std::int64_t>(std::max(a, b)),
                  static_cast<std::int64_t>(len));
}

}  // namespace

std::string to_string(PieceKind k) {
  return k == PieceKind::epsilon ? "epsilon" : "epsilon_prime";
}

std::vector<PieceReport> find_pieces(const RelativeAlphabet& A,
                                     const SymmetrizedSet& S, std::size_t eps,
                                     const PieceOptions& opts) {
  const GroupEngine& e = A.engine();
  const auto& members = S.members();
  const std::size_t m = members.size();

  std::vector<Relator> rel(m);
  std::size_t total_len = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i].length = members[i].length();
    total_len += rel[i].length;
    rel[i].prefix.push_back(e.identity());
    for (const Letter& l : members[i].letters()) {
      Payload p = A.letter(l);
      rel[i].prefix.push_back(e.multiply(view(rel[i].prefix.back()), view(p)));
    }
    for (const Payload& p : rel[i].prefix) {
      rel[i].prefix_inv.push_back(e.invert(view(p)));
    }
  }

  Labelled ball = labelled_ball(A, eps);
  const std::size_t nb = ball.elements.size();
  std::size_t cost = 2 * total_len * nb;
  for (const Relator& r : rel) {
    cost += r.length * r.length * nb / 2 + 2 * r.length * nb;
  }
  if (cost > opts.budget) {
    throw BudgetExceeded("piece enumeration needs about " +
                             std::to_string(cost) +
                             " word-problem evaluations, over the budget of " +
                             std::to_string(opts.budget),
                         0);
  }

  std::vector<Payload> ball_inv;
  for (const Payload& y : ball.elements) {
    ball_inv.push_back(e.invert(view(y)));
  }

  // Y^-1 U' for every Y and every nonempty prefix U' of every member.
  struct Hit {
    std::size_t y, i, j;
  };
  std::unordered_map<Payload, std::vector<Hit>, PayloadHash> shifted;
  // Y R Y^-1 for every Y and every member.
  std::vector<std::vector<Payload>> conj(nb);
  for (std::size_t y = 0; y < nb; ++y) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 1; k <= rel[r].length; ++k) {
        shifted[e.multiply(view(ball_inv[y]), view(rel[r].prefix[k]))]
            .push_back({y, r, k});
      }
      Payload t = e.multiply(view(ball.elements[y]), view(rel[r].prefix.back()));
      conj[y].push_back(e.multiply(view(t), view(ball_inv[y])));
    }
  }

  // Keeps the witness (Y, Z) first in ball order.
  auto keep = [](auto& found, const auto& key, std::pair<std::size_t, std::size_t> yz) {
    auto [it, fresh] = found.try_emplace(key, yz);
    if (!fresh && yz < it->second) {
      it->second = yz;
    }
  };

  std::vector<std::vector<PieceReport>> per(m);
  std::size_t threads = detail::effective_threads(opts.threads, m);
  detail::run_workers(threads, [&](std::size_t w) {
    auto [lo, hi] = detail::chunk(m, w, threads);
    for (std::size_t r = lo; r < hi; ++r) {
      const Relator& R = rel[r];
      // epsilon-pieces: U' = Y U Z  <=>  Y^-1 U' = U Z.
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
               std::pair<std::size_t, std::size_t>>
          found;
      for (std::size_t k = 1; k <= R.length; ++k) {
        for (std::size_t z = 0; z < nb; ++z) {
          Payload uz = e.multiply(view(R.prefix[k]), view(ball.elements[z]));
          auto it = shifted.find(uz);
          if (it == shifted.end()) {
            continue;
          }
          for (const Hit& h : it->second) {
            if (conj[h.y][r] == rel[h.i].prefix.back()) {
              continue;
            }
            keep(found, std::tuple{k, h.i, h.j}, std::pair{h.y, z});
          }
        }
      }
      for (const auto& [key, yz] : found) {
        auto [k, r2, k2] = key;
        PieceReport p;
        p.kind = PieceKind::epsilon;
        p.r = r;
        p.r2 = r2;
        p.u_len = k;
        p.u2_len = k2;
        p.y = ball.words[yz.first];
        p.z = ball.words[yz.second];
        p.ratio = piece_ratio(k, k2, R.length);
        per[r].push_back(std::move(p));
      }

      // epsilon'-pieces: R = U V U' V', U' = Y U^s Z  <=>  Y^-1 U' = U^s Z.
      std::map<std::tuple<std::size_t, std::size_t, std::size_t, int>,
               std::pair<std::size_t, std::size_t>>
          found_prime;
      std::unordered_map<Payload, std::vector<Hit>, PayloadHash> sub;
      for (std::size_t y = 0; y < nb; ++y) {
        for (std::size_t s = 1; s < R.length; ++s) {
          for (std::size_t k2 = 1; s + k2 <= R.length; ++k2) {
            Payload u2 = e.multiply(view(R.prefix_inv[s]), view(R.prefix[s + k2]));
            sub[e.multiply(view(ball_inv[y]), view(u2))].push_back({y, s, k2});
          }
        }
      }
      for (std::size_t k = 1; k < R.length; ++k) {
        for (int sign : {1, -1}) {
          const Payload& u = sign > 0 ? R.prefix[k] : R.prefix_inv[k];
          for (std::size_t z = 0; z < nb; ++z) {
            Payload uz = e.multiply(view(u), view(ball.elements[z]));
            auto it = sub.find(uz);
            if (it == sub.end()) {
              continue;
            }
            for (const Hit& h : it->second) {
              if (h.i >= k) {
                keep(found_prime, std::tuple{k, h.i, h.j, sign},
                     std::pair{h.y, z});
              }
            }
          }
        }
      }
      for (const auto& [key, yz] : found_prime) {
        auto [k, s, k2, sign] = key;
        PieceReport p;
        p.kind = PieceKind::epsilon_prime;
        p.r = r;
        p.r2 = r;
        p.u_len = k;
        p.u2_start = s;
        p.u2_len = k2;
        p.sign = sign;
        p.y = ball.words[yz.first];
        p.z = ball.words[yz.second];
        p.ratio = piece_ratio(k, k2, R.length);
        per[r].push_back(std::move(p));
      }
    }
  });

  std::vector<PieceReport> out;
  for (auto& part : per) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(),
            [](const PieceReport& a, const PieceReport& b) {
              return a.key() < b.key();
            });
  return out;
}

void validate(const SCParams& p) {
  if (p.mu <= 0 || p.mu >= 1) {
    throw InputError("mu must lie in (0, 1), got " + to_string(p.mu));
  }
  if (p.lambda <= 0 || p.lambda > 1) {
    throw InputError("lambda must lie in (0, 1], got " + to_string(p.lambda));
  }
  if (p.c < 0) {
    throw InputError("c must be nonnegative");
  }
  if (p.rho == 0) {
    throw InputError("rho must be positive");
  }
}

SCReport check_condition(const RelativeAlphabet& A, const SymmetrizedSet& S,
                         const SCParams& params, const PieceOptions& opts) {
  validate(params);
  SCReport rep;
  rep.params = params;
  rep.letter_bound = A.letter_bound();

  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S.members()[i].length() < params.rho) {
      rep.short_relators.push_back(i);
    }
  }
  rep.length = rep.short_relators.empty() ? CheckStatus::pass : CheckStatus::fail;

  for (const Word& R : S.base()) {
    rep.quasigeodesic_reports.push_back(quasigeodesic_check(
        A, R, params.lambda, params.c, opts.distance_budget));
    rep.quasigeodesic =
        combine(rep.quasigeodesic, rep.quasigeodesic_reports.back().status);
  }

  auto pieces = find_pieces(A, S, params.eps, opts);
  rep.pieces_found = pieces.size();
  for (PieceReport& p : pieces) {
    if (p.ratio >= params.mu) {
      if (p.kind == PieceKind::epsilon) {
        rep.pieces = CheckStatus::fail;
      } else {
        rep.prime_pieces = CheckStatus::fail;
      }
      rep.violations.push_back(std::move(p));
    }
  }
  rep.c = combine(combine(rep.length, rep.quasigeodesic), rep.pieces);
  rep.c1 = combine(rep.c, rep.prime_pieces);
  return rep;
}

}  // namespace cgw
