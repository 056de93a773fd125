#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace oracle {

char inv(char c) {
  return std::islower(static_cast<unsigned char>(c))
             ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
             : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string reduce(std::string_view w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string inverse(std::string_view w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(inv(*it));
  }
  return out;
}

std::string mul(std::string_view a, std::string_view b) {
  return reduce(std::string(a) + std::string(b));
}

std::string conj(std::string_view g, std::string_view u) {
  return reduce(inverse(u) + std::string(g) + std::string(u));
}

std::vector<std::string> reduced_words(std::size_t n, std::string_view gens) {
  std::string letters;
  for (char g : gens) {
    letters += g;
    letters += inv(g);
  }
  std::vector<std::string> layer{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : letters) {
        if (w.empty() || w.back() != inv(c)) {
          next.push_back(w + c);
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<std::string> ball(std::size_t n, std::string_view gens) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= n; ++i) {
    auto layer = reduced_words(i, gens);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

bool cyclically_reduced(std::string_view w) {
  return w.size() < 2 || w.front() != inv(w.back());
}

std::string cyclic_core(std::string_view w) {
  std::string r = reduce(w);
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == inv(r[j - 1])) {
    ++i;
    --j;
  }
  return r.substr(i, j - i);
}

std::string rotate(std::string_view w, std::size_t k) {
  if (w.empty()) {
    return {};
  }
  k %= w.size();
  return std::string(w.substr(k)) + std::string(w.substr(0, k));
}

std::string min_rotation(std::string_view w) {
  std::string best(w);
  for (std::size_t k = 1; k < w.size(); ++k) {
    best = std::min(best, rotate(w, k));
  }
  return best;
}

bool periodic(std::string_view w) {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d == 0 && rotate(w, d) == w) {
      return true;
    }
  }
  return false;
}

std::string from_word(const cgw::Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    char c = l.generator.at(0);
    out.push_back(l.sign > 0 ? c : inv(c));
  }
  return out;
}

cgw::Word to_word(std::string_view w) {
  std::vector<cgw::Letter> letters;
  for (char c : w) {
    bool lower = std::islower(static_cast<unsigned char>(c));
    letters.push_back(cgw::Letter{
        std::string(1, lower ? c : inv(c)), lower ? 1 : -1});
  }
  return cgw::Word(std::move(letters));
}

std::set<std::string> all_order_reductions(const std::string& w) {
  std::set<std::string> out;
  std::set<std::string> seen;
  std::function<void(const std::string&)> go = [&](const std::string& s) {
    if (!seen.insert(s).second) {
      return;
    }
    bool any = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == inv(s[i + 1])) {
        any = true;
        go(s.substr(0, i) + s.substr(i + 2));
      }
    }
    if (!any) {
      out.insert(s);
    }
  };
  go(w);
  return out;
}

std::vector<std::uint64_t> free_xi_brute(std::size_t N, std::size_t conj_len) {
  auto elems = ball(N, "xy");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
  }
  DisjointSets ds(elems.size());
  const std::string letters = "xXyY";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    // Depth-first over reduced conjugators u, carrying u^-1 g u.
    std::function<void(const std::string&, char, std::size_t)> walk =
        [&](const std::string& cur, char last, std::size_t depth) {
          auto it = index.find(cur);
          if (it != index.end()) {
            ds.unite(i, it->second);
          }
          if (depth == conj_len) {
            return;
          }
          for (char c : letters) {
            if (last != 0 && c == inv(last)) {
              continue;
            }
            walk(conj(cur, std::string(1, c)), c, depth + 1);
          }
        };
    walk(elems[i], 0, 0);
  }
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= N; ++n) {
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].size() <= n) {
        roots.insert(ds.find(i));
      }
    }
    out.push_back(roots.size());
  }
  return out;
}

namespace {

std::vector<std::uint64_t> necklaces(std::size_t N, bool aperiodic_only) {
  std::vector<std::uint64_t> out;
  std::set<std::string> classes;
  for (std::size_t n = 0; n <= N; ++n) {
    for (const auto& w : reduced_words(n, "xy")) {
      if (n == 0) {
        if (!aperiodic_only) {
          classes.insert(w);
        }
        continue;
      }
      if (!cyclically_reduced(w) || (aperiodic_only && periodic(w))) {
        continue;
      }
      classes.insert(min_rotation(w));
    }
    out.push_back(classes.size());
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> free_xi_necklaces(std::size_t N) {
  return necklaces(N, false);
}

std::vector<std::uint64_t> free_pi_necklaces(std::size_t N) {
  return necklaces(N, true);
}

Mat heis(std::int64_t a, std::int64_t b, std::int64_t c) {
  return {1, a, c, 0, 1, b, 0, 0, 1};
}

Mat matmul(const Mat& x, const Mat& y) {
  Mat z{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        z[i * 3 + j] += x[i * 3 + k] * y[k * 3 + j];
      }
    }
  }
  return z;
}

Mat matinv(const Mat& x) {
  auto [a, b, c] = coords(x);
  return heis(-a, -b, a * b - c);
}

std::array<std::int64_t, 3> coords(const Mat& m) { return {m[1], m[5], m[2]}; }

std::vector<std::vector<Mat>> heis_ball(std::size_t N) {
  const std::vector<Mat> gens{heis(1, 0, 0), heis(-1, 0, 0), heis(0, 1, 0),
                              heis(0, -1, 0), heis(0, 0, 1), heis(0, 0, -1)};
  std::set<Mat> seen{heis(0, 0, 0)};
  std::vector<std::vector<Mat>> layers{{heis(0, 0, 0)}};
  for (std::size_t r = 1; r <= N; ++r) {
    std::vector<Mat> next;
    for (const Mat& m : layers.back()) {
      for (const Mat& g : gens) {
        Mat p = matmul(m, g);
        if (seen.insert(p).second) {
          next.push_back(p);
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<std::uint64_t> heis_xi_brute(std::size_t N, std::int64_t box) {
  auto layers = heis_ball(N);
  std::vector<Mat> elems;
  std::vector<std::size_t> radius;
  for (std::size_t r = 0; r < layers.size(); ++r) {
    for (const Mat& m : layers[r]) {
      elems.push_back(m);
      radius.push_back(r);
    }
  }
  std::map<Mat, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
  }
  DisjointSets ds(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::int64_t x = -box; x <= box; ++x) {
      for (std::int64_t y = -box; y <= box; ++y) {
        Mat u = heis(x, y, 0);
        Mat h = matmul(matmul(matinv(u), elems[i]), u);
        auto it = index.find(h);
        if (it != index.end()) {
          ds.unite(i, it->second);
        }
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= N; ++n) {
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (radius[i] <= n) {
        roots.insert(ds.find(i));
      }
    }
    out.push_back(roots.size());
  }
  return out;
}

std::size_t heis_length(const Mat& target, std::size_t max_radius) {
  auto layers = heis_ball(max_radius);
  for (std::size_t r = 0; r < layers.size(); ++r) {
    if (std::find(layers[r].begin(), layers[r].end(), target) !=
        layers[r].end()) {
      return r;
    }
  }
  return max_radius + 1;
}

namespace {

int c3_factor(char c) { return c == 'u' || c == 'U' ? 0 : 1; }
int c3_exp(char c) { return std::islower(static_cast<unsigned char>(c)) ? 1 : 2; }
char c3_letter(int factor, int e) {
  const char* names = factor == 0 ? "uU" : "vV";
  return names[e - 1];
}

}  // namespace

std::string c3c3_mul(std::string_view a, std::string_view b) {
  std::string out(a);
  for (char c : b) {
    if (!out.empty() && c3_factor(out.back()) == c3_factor(c)) {
      int e = (c3_exp(out.back()) + c3_exp(c)) % 3;
      int f = c3_factor(c);
      out.pop_back();
      if (e != 0) {
        out.push_back(c3_letter(f, e));
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::map<std::string, std::size_t> c3c3_distances(std::size_t radius) {
  std::map<std::string, std::size_t> dist{{"", 0}};
  std::vector<std::string> frontier{""};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : std::string("uUvV")) {
        std::string p = c3c3_mul(w, std::string(1, c));
        if (dist.emplace(p, r).second) {
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::string hnn_image(const HnnSyllables& w) {
  std::string out;
  auto piece = [&](const std::string& p) {
    for (char c : p) {
      switch (c) {
        case 'x': out += "x"; break;
        case 'X': out += "X"; break;
        case 'y': out += "Txt"; break;
        case 'Y': out += "TXt"; break;
      }
    }
  };
  for (std::size_t i = 0; i < w.signs.size(); ++i) {
    piece(w.pieces[i]);
    out += w.signs[i] > 0 ? "t" : "T";
  }
  piece(w.pieces.back());
  return reduce(out);
}

namespace {

bool power_of(std::string_view p, char g) {
  return std::all_of(p.begin(), p.end(), [&](char c) { return c == g; }) ||
         std::all_of(p.begin(), p.end(), [&](char c) { return c == inv(g); });
}

// Index i such that t^signs[i] pieces[i+1] t^signs[i+1] is a pinch.
std::vector<std::size_t> pinches(const HnnSyllables& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.signs.size(); ++i) {
    const std::string& mid = w.pieces[i + 1];
    if (w.signs[i] < 0 && w.signs[i + 1] > 0 && power_of(mid, 'x')) {
      out.push_back(i);
    }
    if (w.signs[i] > 0 && w.signs[i + 1] < 0 && power_of(mid, 'y')) {
      out.push_back(i);
    }
  }
  return out;
}

HnnSyllables apply_pinch(const HnnSyllables& w, std::size_t i) {
  std::string mid = w.pieces[i + 1];
  // t^-1 x^k t = y^k and t y^k t^-1 = x^k.
  for (char& c : mid) {
    if (w.signs[i] < 0) {
      c = c == 'x' ? 'y' : 'Y';
    } else {
      c = c == 'y' ? 'x' : 'X';
    }
  }
  HnnSyllables out;
  for (std::size_t j = 0; j < i; ++j) {
    out.pieces.push_back(w.pieces[j]);
    out.signs.push_back(w.signs[j]);
  }
  out.pieces.push_back(reduce(w.pieces[i] + mid + w.pieces[i + 2]));
  for (std::size_t j = i + 2; j < w.signs.size(); ++j) {
    out.signs.push_back(w.signs[j]);
    out.pieces.push_back(w.pieces[j + 1]);
  }
  return out;
}

}  // namespace

bool has_pinch(const HnnSyllables& w) { return !pinches(w).empty(); }

BrittonOutcome britton_all_orders(const HnnSyllables& w) {
  BrittonOutcome out;
  std::set<std::pair<std::vector<std::string>, std::vector<int>>> seen;
  std::function<void(const HnnSyllables&)> go = [&](const HnnSyllables& s) {
    if (!seen.insert({s.pieces, s.signs}).second) {
      return;
    }
    auto ps = pinches(s);
    if (ps.empty()) {
      out.t_lengths.insert(s.signs.size());
      out.images.insert(hnn_image(s));
      return;
    }
    for (std::size_t i : ps) {
      go(apply_pinch(s, i));
    }
  };
  go(w);
  return out;
}

std::vector<std::string> symmetrize(const std::vector<std::string>& base) {
  std::set<std::string> out;
  for (const auto& w : base) {
    for (const auto& r : {w, inverse(w)}) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        out.insert(rotate(r, k));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::set<Piece> brute_pieces(const std::vector<std::string>& S,
                             std::size_t eps) {
  auto tails = ball(eps, "xy");
  std::set<Piece> out;
  auto close = [&](std::size_t a, std::size_t b) {
    return (a > b ? a - b : b - a) <= 2 * eps;
  };
  auto witnessed = [&](const std::string& U, const std::string& U2,
                       const std::function<bool(const std::string&)>& ok) {
    for (const auto& Y : tails) {
      for (const auto& Z : tails) {
        if (reduce(Y + U + Z) == U2 && ok(Y)) {
          return true;
        }
      }
    }
    return false;
  };
  for (const auto& R : S) {
    for (const auto& R2 : S) {
      for (std::size_t k = 1; k <= R.size(); ++k) {
        for (std::size_t k2 = 1; k2 <= R2.size(); ++k2) {
          if (!close(k, k2)) {
            continue;
          }
          auto ok = [&](const std::string& Y) {
            return reduce(Y + R + inverse(Y)) != R2;
          };
          if (witnessed(R.substr(0, k), R2.substr(0, k2), ok)) {
            out.insert(Piece{0, R, k, R2, 0, k2, 1});
          }
        }
      }
    }
    const std::size_t L = R.size();
    for (std::size_t k = 1; k < L; ++k) {
      for (std::size_t s = k; s < L; ++s) {
        for (std::size_t k2 = 1; s + k2 <= L; ++k2) {
          if (!close(k, k2)) {
            continue;
          }
          for (int sign : {1, -1}) {
            std::string U = R.substr(0, k);
            if (sign < 0) {
              U = inverse(U);
            }
            if (witnessed(U, R.substr(s, k2),
                          [](const std::string&) { return true; })) {
              out.insert(Piece{1, R, k, R, s, k2, sign});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
