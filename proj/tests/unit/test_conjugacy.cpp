#include <doctest.h>

#include <random>
#include <set>

#include "cgw/ball.hpp"
#include "cgw/conjugacy.hpp"
#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/hnn.hpp"
#include "oracles.hpp"

using namespace cgw;

namespace {

Payload eval(const GroupEngine& e, const char* w) {
  return e.evaluate(parse_word(w, e.generators()));
}

bool conjugate_within(const GroupEngine& e, const Ball& conjugators,
                      const Payload& g, const Payload& h) {
  for (const auto& layer : conjugators.layers) {
    for (const Payload& u : layer) {
      if (e.conjugate(view(g), view(u)) == h) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("conjugacy") {
  TEST_CASE("free-group keys") {
    auto e = build_engine("free(2)");
    Ball six = enumerate_ball(*e, 6);
    CHECK(class_key_payload(*e, view(eval(*e, "x*y"))) ==
          class_key_payload(*e, view(eval(*e, "y*x"))));
    CHECK(conjugate_within(*e, six, eval(*e, "x*y"), eval(*e, "y*x")));
    CHECK(class_key_payload(*e, view(eval(*e, "x"))) !=
          class_key_payload(*e, view(eval(*e, "x^-1"))));
    CHECK_FALSE(conjugate_within(*e, six, eval(*e, "x"), eval(*e, "x^-1")));
    CHECK(class_key_payload(*e, view(e->identity())) == e->identity());
  }

  TEST_CASE("Heisenberg conjugacy orbits") {
    auto e = build_engine("heisenberg");
    CHECK(class_key_payload(*e, view(Payload{2, 0, 0})) ==
          class_key_payload(*e, view(Payload{2, 0, 2})));
    CHECK(class_key_payload(*e, view(Payload{2, 0, 0})) !=
          class_key_payload(*e, view(Payload{2, 0, 1})));
    // Orbits by brute force: (a,b,c) ~ (a,b,c') iff c = c' mod gcd(a,b).
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) {
        std::set<std::int64_t> orbit;
        for (int x = -10; x <= 10; ++x) {
          for (int y = -10; y <= 10; ++y) {
            auto u = oracle::heis(x, y, 0);
            auto m = oracle::matmul(oracle::matmul(oracle::matinv(u),
                                                   oracle::heis(a, b, 0)),
                                    u);
            auto c = oracle::coords(m)[2];
            if (c >= -6 && c <= 6) {
              orbit.insert(c);
            }
          }
        }
        for (int c = -6; c <= 6; ++c) {
          bool same = class_key_payload(*e, view(Payload{a, b, 0})) ==
                      class_key_payload(*e, view(Payload{a, b, c}));
          CHECK(same == (orbit.count(c) == 1));
        }
      }
    }
  }

  TEST_CASE("Heisenberg keys with large coordinates") {
    auto e = build_engine("heisenberg");
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coord(-20000, 20000);
    for (int i = 0; i < 2000; ++i) {
      Payload g{coord(rng), coord(rng), coord(rng)};
      auto k = key_with_conjugator(*e, view(g));
      CHECK(e->conjugate(view(k.key), view(e->invert(view(k.conjugator)))) == g);
      CHECK(k.key[2] >= 0);
    }
  }

  TEST_CASE("key soundness on small balls") {
    for (const char* g : {"free(2)", "product(cyclic(3),cyclic(3))",
                          "heisenberg", "direct(cyclic(2),free(1))"}) {
      CAPTURE(g);
      auto e = build_engine(g);
      Ball ball = enumerate_ball(*e, 3);
      Ball conj = enumerate_ball(*e, 6);
      std::vector<Payload> elems;
      for (const auto& layer : ball.layers) {
        elems.insert(elems.end(), layer.begin(), layer.end());
      }
      std::size_t checked = 0;
      for (std::size_t i = 0; i < elems.size(); i += 3) {
        for (std::size_t j = 0; j < elems.size(); j += 5) {
          bool keys = class_key_payload(*e, view(elems[i])) ==
                      class_key_payload(*e, view(elems[j]));
          CHECK(keys == conjugate_within(*e, conj, elems[i], elems[j]));
          auto r = are_conjugate(*e, view(elems[i]), view(elems[j]), 0);
          CHECK((r.verdict == Verdict::yes) == keys);
          if (r.witness) {
            CHECK(e->conjugate(view(elems[i]), view(*r.witness)) == elems[j]);
          }
          ++checked;
        }
      }
      CHECK(checked > 0);
    }
  }

  TEST_CASE("conjugacy in the HNN extension") {
    auto e = build_engine("hnn(free(2), a='x', b='y')");
    auto r = are_conjugate(*e, view(eval(*e, "x*y")), view(eval(*e, "y*x")), 2);
    CHECK(r.verdict == Verdict::yes);
    REQUIRE(r.witness);
    CHECK(e->conjugate(view(eval(*e, "x*y")), view(*r.witness)) == eval(*e, "y*x"));
    auto s = are_conjugate(*e, view(eval(*e, "x")), view(eval(*e, "y")), 2);
    CHECK(s.verdict == Verdict::yes);
    REQUIRE(s.witness);
    CHECK(e->conjugate(view(eval(*e, "x")), view(*s.witness)) == eval(*e, "y"));
    auto t = are_conjugate(*e, view(eval(*e, "t")), view(eval(*e, "x")), 2);
    CHECK(t.verdict == Verdict::no);
    CHECK_THROWS_AS(class_key_payload(*e, view(eval(*e, "x"))), CapabilityError);
  }

  TEST_CASE("commutators in the free group") {
    auto e = build_engine("free(2)");
    Payload g = eval(*e, "x*y*x^-1*y^-1");
    Payload h = eval(*e, "y*x*y^-1*x^-1");
    CHECK(are_conjugate(*e, view(g), view(h), 0).verdict == Verdict::no);
    CHECK_FALSE(conjugate_within(*e, enumerate_ball(*e, 8), g, h));
  }

  TEST_CASE("primitivity") {
    auto e = build_engine("free(2)");
    CHECK_FALSE(is_primitive(*e, view(eval(*e, "x*y*x*y"))));
    CHECK(is_primitive(*e, view(eval(*e, "x*y"))));
    // No h with |h| <= 2 and n in {+-2, +-3} gives h^n = xy.
    Ball two = enumerate_ball(*e, 2);
    Payload xy = eval(*e, "x*y");
    for (const auto& layer : two.layers) {
      for (const Payload& h : layer) {
        for (int n : {2, 3, -2, -3}) {
          CHECK_FALSE(e->power(view(h), n) == xy);
        }
      }
    }
    CHECK_THROWS_AS(is_primitive(*e, view(e->identity())), InputError);
    auto c3 = build_engine("cyclic(3)");
    CHECK_FALSE(is_primitive(*c3, view(eval(*c3, "u"))));
  }

  TEST_CASE("roots of the central generator") {
    // Oracle: no (x,y,z) in [-6,6]^3 and n in [2,6] has h^n = (0,0,1).
    auto e = build_engine("heisenberg");
    bool found = false;
    for (int x = -6; x <= 6; ++x) {
      for (int y = -6; y <= 6; ++y) {
        for (int z = -6; z <= 6; ++z) {
          for (int n = 2; n <= 6; ++n) {
            auto m = oracle::heis(x, y, z);
            auto p = m;
            for (int k = 1; k < n; ++k) {
              p = oracle::matmul(p, m);
            }
            found = found || p == oracle::heis(0, 0, 1);
          }
        }
      }
    }
    CHECK_FALSE(found);
    CHECK(is_primitive(*e, view(Payload{0, 0, 1})));
    CHECK_FALSE(is_primitive(*e, view(Payload{0, 0, 4})));
    CHECK(has_root(*e, view(Payload{2, 2, 1}), 2) ==
          (oracle::coords(oracle::matmul(oracle::heis(1, 1, 0),
                                         oracle::heis(1, 1, 0)))[2] % 2 == 1));
  }

  TEST_CASE("bounded commensurability") {
    auto e = build_engine("free(2)");
    auto a = are_commensurable_bounded(*e, view(eval(*e, "x*y")),
                                       view(eval(*e, "y*x")), 1);
    CHECK(a.verdict == Verdict::yes);
    CHECK(a.k == 1);
    CHECK(a.l == 1);
    auto b = are_commensurable_bounded(*e, view(eval(*e, "x")),
                                       view(eval(*e, "x^2")), 2);
    CHECK(b.verdict == Verdict::yes);
    CHECK(b.k == 2);
    CHECK(b.l == 1);
    auto c = are_commensurable_bounded(*e, view(eval(*e, "x")),
                                       view(eval(*e, "y")), 3);
    CHECK(c.verdict == Verdict::no);
    CHECK(c.exact);
  }
}
