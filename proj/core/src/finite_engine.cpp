#include <algorithm>
#include <map>

#include "arith.hpp"
#include "cgw/engines.hpp"
#include "cgw/error.hpp"

namespace cgw {

namespace {

using Perm = std::vector<int>;

// (p * q)(i) = q(p(i)): apply p first.
Perm compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = q[static_cast<std::size_t>(p[i])];
  }
  return out;
}

Perm invert_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  }
  return out;
}

Perm cycles(int degree, std::vector<std::vector<int>> cs) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    p[static_cast<std::size_t>(i)] = i;
  }
  for (const auto& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

// Quaternion units as permutations of {±1, ±i, ±j, ±k} under right
// multiplication. Index = 2 * unit + (negative ? 1 : 0), unit 0..3 = 1,i,j,k.
Perm quaternion_right_mult(int unit) {
  // unit_table[a][b] = (sign, unit) of e_a * e_b
  static const int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int prod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Perm p(8);
  for (int a = 0; a < 4; ++a) {
    for (int neg = 0; neg < 2; ++neg) {
      int s = sign[a][unit] * (neg ? -1 : 1);
      int u = prod[a][unit];
      p[static_cast<std::size_t>(2 * a + neg)] = 2 * u + (s < 0 ? 1 : 0);
    }
  }
  return p;
}

struct TableSpec {
  std::vector<std::string> names;
  std::vector<Perm> perms;
};

const std::map<std::string, TableSpec>& builtin() {
  static const std::map<std::string, TableSpec> tables = {
      {"V4", {{"a", "b"}, {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 2}, {1, 3}})}}},
      {"S3", {{"s", "r"}, {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})}}},
      {"D4", {{"r", "s"}, {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{1, 3}})}}},
      {"Q8", {{"i", "j"}, {quaternion_right_mult(1), quaternion_right_mult(2)}}},
      {"A4", {{"r", "s"}, {cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}, {2, 3}})}}},
      {"S4", {{"s", "r"}, {cycles(4, {{0, 1}}), cycles(4, {{0, 1, 2, 3}})}}},
      {"A5", {{"r", "s"}, {cycles(5, {{0, 1, 2, 3, 4}}), cycles(5, {{0, 1, 2}})}}},
  };
  return tables;
}

}  // namespace

std::vector<std::string> FiniteEngine::builtin_tables() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : builtin()) {
    out.push_back(name);
  }
  return out;
}

std::shared_ptr<const FiniteEngine> make_table_engine(
    const GroupExpr& descriptor) {
  const auto& tables = builtin();
  auto it = tables.find(descriptor.table_name());
  if (it == tables.end()) {
    std::string known;
    for (const auto& [name, spec] : tables) {
      known += (known.empty() ? "" : ", ") + name;
    }
    throw InputError("unknown table '" + descriptor.table_name() +
                     "' (known: " + known + ")");
  }
  return std::make_shared<const FiniteEngine>(descriptor, it->second.names,
                                              it->second.perms);
}

FiniteEngine::FiniteEngine(GroupExpr descriptor,
                           std::vector<std::string> generator_names,
                           std::vector<std::vector<int>> generator_permutations)
    : GroupEngine(std::move(descriptor), std::move(generator_names)) {
  if (generator_permutations.empty()) {
    throw InputError("finite table needs at least one generator");
  }
  const std::size_t degree = generator_permutations.front().size();
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    id[i] = static_cast<int>(i);
  }

  // Breadth-first closure; letters are g0, g0^-1, g1, g1^-1, ... so the
  // recorded word of each element is a shortest one.
  std::vector<Perm> letters;
  std::vector<Letter> letter_names;
  for (std::size_t i = 0; i < generator_permutations.size(); ++i) {
    letters.push_back(generator_permutations[i]);
    letter_names.push_back(Letter{generators()[i], 1});
    letters.push_back(invert_perm(generator_permutations[i]));
    letter_names.push_back(Letter{generators()[i], -1});
  }
  std::map<Perm, std::int32_t> index;
  std::vector<Perm> elements;
  index[id] = 0;
  elements.push_back(id);
  words_.emplace_back();
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t l = 0; l < letters.size(); ++l) {
      Perm next = compose(elements[head], letters[l]);
      if (index.emplace(next, static_cast<std::int32_t>(elements.size()))
              .second) {
        elements.push_back(next);
        words_.push_back(words_[head] * Word({letter_names[l]}));
      }
    }
    if (elements.size() > 5000) {
      throw InputError("finite table too large (more than 5000 elements)");
    }
  }

  const std::size_t n = elements.size();
  table_.assign(n * n, 0);
  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      table_[g * n + h] = index.at(compose(elements[g], elements[h]));
    }
    inverse_[g] = index.at(invert_perm(elements[g]));
  }
  for (const auto& p : generator_permutations) {
    generators_.push_back(index.at(p));
  }

  class_rep_.assign(n, -1);
  class_conj_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    if (class_rep_[g] != -1) {
      continue;
    }
    // g is the least index of its class; h = u g u^-1 for every u.
    for (std::size_t u = 0; u < n; ++u) {
      std::int32_t h = product(product(static_cast<std::int32_t>(u),
                                       static_cast<std::int32_t>(g)),
                               inverse_[u]);
      if (class_rep_[static_cast<std::size_t>(h)] == -1) {
        class_rep_[static_cast<std::size_t>(h)] = static_cast<std::int32_t>(g);
        class_conj_[static_cast<std::size_t>(h)] = static_cast<std::int32_t>(u);
      }
    }
  }
}

Payload FiniteEngine::generator(std::size_t i) const { return {generators_[i]}; }

Payload FiniteEngine::multiply(PayloadView g, PayloadView h) const {
  return {product(g[0], h[0])};
}

Payload FiniteEngine::invert(PayloadView g) const {
  return {inverse_[static_cast<std::size_t>(g[0])]};
}

std::int64_t FiniteEngine::order(PayloadView g) const {
  std::int32_t x = g[0];
  std::int64_t k = 1;
  while (x != 0) {
    x = product(x, g[0]);
    ++k;
  }
  return k;
}

PowerSolutions FiniteEngine::power_solutions(PayloadView x,
                                             PayloadView g) const {
  std::int64_t m = order(x);
  std::int32_t p = 0;
  for (std::int64_t k = 0; k < m; ++k) {
    if (p == g[0]) {
      return PowerSolutions::progression(k, m);
    }
    p = product(p, x[0]);
  }
  return PowerSolutions::none();
}

CosetRep FiniteEngine::coset_rep(PayloadView x, PayloadView g) const {
  std::int64_t m = order(x);
  std::int32_t best = g[0];
  std::int64_t best_j = 0;
  std::int32_t cur = g[0];
  for (std::int64_t j = 1; j < m; ++j) {
    cur = product(x[0], cur);
    if (cur < best) {
      best = cur;
      best_j = j;
    }
  }
  // Index 0 is the identity, so it wins whenever g lies in <x>.
  return {detail::floor_mod(-best_j, m), Payload{best}};
}

Word FiniteEngine::to_word(PayloadView g) const {
  return words_[static_cast<std::size_t>(g[0])];
}

bool FiniteEngine::is_canonical(PayloadView p) const {
  return p.size() == 1 && p[0] >= 0 &&
         static_cast<std::size_t>(p[0]) < inverse_.size();
}

}  // namespace cgw
