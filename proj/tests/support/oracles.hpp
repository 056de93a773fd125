#pragma once

// Reference implementations used to cross-check the library. They share no
// code with it beyond the public types needed to compare results.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgw/word.hpp"

namespace oracle {

// Free-group words as strings: a lowercase letter is a generator, the same
// letter in uppercase its inverse.
char inv(char c);
std::string reduce(std::string_view w);
std::string inverse(std::string_view w);
std::string mul(std::string_view a, std::string_view b);
// u^-1 g u
std::string conj(std::string_view g, std::string_view u);
// Freely reduced words of length exactly n over the given generators.
std::vector<std::string> reduced_words(std::size_t n, std::string_view gens);
// All reduced words of length <= n, shortest first.
std::vector<std::string> ball(std::size_t n, std::string_view gens);
bool cyclically_reduced(std::string_view w);
std::string cyclic_core(std::string_view w);
std::string rotate(std::string_view w, std::size_t k);
// Least rotation by trying all of them.
std::string min_rotation(std::string_view w);
bool periodic(std::string_view w);

std::string from_word(const cgw::Word& w);
cgw::Word to_word(std::string_view w);

// Free-group reduction by repeated single-pair cancellation, exploring
// every order; returns the set of fixed points reached.
std::set<std::string> all_order_reductions(const std::string& w);

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
};

// Free group of rank 2, ball of radius n: conjugacy classes found by
// merging every pair related by a conjugator of length <= conj_len.
std::vector<std::uint64_t> free_xi_brute(std::size_t N, std::size_t conj_len);
// Classes of cyclically reduced words up to rotation (plus the identity).
std::vector<std::uint64_t> free_xi_necklaces(std::size_t N);
// Same, restricted to words that are not proper powers; no identity.
std::vector<std::uint64_t> free_pi_necklaces(std::size_t N);

// UT_3(Z) as integer matrices [[1,a,c],[0,1,b],[0,0,1]].
using Mat = std::array<std::int64_t, 9>;
Mat heis(std::int64_t a, std::int64_t b, std::int64_t c);
Mat matmul(const Mat& x, const Mat& y);
Mat matinv(const Mat& x);
// (a, b, c) read off a matrix.
std::array<std::int64_t, 3> coords(const Mat& m);
// Ball layers over {a, b, c}^+-1.
std::vector<std::vector<Mat>> heis_ball(std::size_t N);
// Classes met by each ball, merging by conjugators (x, y, 0) with
// |x|, |y| <= box.
std::vector<std::uint64_t> heis_xi_brute(std::size_t N, std::int64_t box);
// Word length of c^n by plain BFS.
std::size_t heis_length(const Mat& target, std::size_t max_radius);

// Z/3 * Z/3 with letters u, U (factor 0) and v, V (factor 1) as
// alternating syllables; distances by BFS over the four letters.
std::map<std::string, std::size_t> c3c3_distances(std::size_t radius);
std::string c3c3_mul(std::string_view a, std::string_view b);

// A word in hnn(free(2), a='x', b='y') as base syllables over {x,y} and
// stable letters. The group is free on x and t via y = t^-1 x t.
struct HnnSyllables {
  std::vector<std::string> pieces;  // reduced words over x, X, y, Y
  std::vector<int> signs;
};
// Image in F(x, t) as a reduced string over x, X, t, T.
std::string hnn_image(const HnnSyllables& w);
bool has_pinch(const HnnSyllables& w);
struct BrittonOutcome {
  std::set<std::size_t> t_lengths;
  std::set<std::string> images;
};
// Applies pinches in every possible order down to pinch-free words.
BrittonOutcome britton_all_orders(const HnnSyllables& w);

// epsilon- and epsilon'-pieces of a symmetrized set over F2 by scanning
// every pair of subwords against every pair of short tails.
struct Piece {
  int kind;  // 0: epsilon, 1: epsilon'
  std::string r;
  std::size_t k;
  std::string r2;
  std::size_t s;
  std::size_t k2;
  int sign;
  auto operator<=>(const Piece&) const = default;
};
std::vector<std::string> symmetrize(const std::vector<std::string>& base);
std::set<Piece> brute_pieces(const std::vector<std::string>& S, std::size_t eps);

}  // namespace oracle
