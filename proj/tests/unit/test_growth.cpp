#include <doctest.h>

#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/growth.hpp"
#include "oracles.hpp"

using namespace cgw;

namespace {

std::vector<std::uint64_t> cumulative(const std::vector<std::uint64_t>& layers) {
  std::vector<std::uint64_t> out;
  std::uint64_t total = 0;
  for (auto v : layers) {
    total += v;
    out.push_back(total);
  }
  return out;
}

}  // namespace

TEST_SUITE("growth") {
  TEST_CASE("growth of small groups") {
    auto c3 = build_engine("cyclic(3)");
    CHECK(growth_table(*c3, 3).values == std::vector<std::uint64_t>{1, 3, 3, 3});
    auto f2 = build_engine("free(2)");
    CHECK(growth_table(*f2, 3).values ==
          std::vector<std::uint64_t>{1, 5, 17, 53});
  }

  TEST_CASE("growth of a direct product against sphere convolution") {
    // Spheres of Z/2 are 1,1 and of Z are 1,2,2,...; spheres of the product
    // (word length adds) are their convolution.
    auto e = build_engine("direct(cyclic(2),free(1))");
    std::vector<std::uint64_t> a{1, 1}, spheres;
    for (std::size_t n = 0; n <= 6; ++n) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        s += a[i] * (n - i == 0 ? 1 : 2);
      }
      spheres.push_back(s);
    }
    CHECK(growth_table(*e, 6).values == cumulative(spheres));
  }

  TEST_CASE("growth of the Heisenberg group against matrices") {
    auto e = build_engine("heisenberg");
    auto layers = oracle::heis_ball(4);
    std::vector<std::uint64_t> spheres;
    for (const auto& l : layers) spheres.push_back(l.size());
    CHECK(growth_table(*e, 4).values == cumulative(spheres));
  }

  TEST_CASE("conjugacy growth of F2") {
    auto e = build_engine("free(2)");
    auto xi = conjugacy_growth_table(*e, 6).values;
    CHECK(xi == oracle::free_xi_necklaces(6));
    CHECK(xi == oracle::free_xi_brute(6, 3));
    CHECK(xi[1] == 5);
  }

  TEST_CASE("conjugacy growth of the Heisenberg group") {
    auto e = build_engine("heisenberg");
    CHECK(conjugacy_growth_table(*e, 5).values == oracle::heis_xi_brute(5, 12));
  }

  TEST_CASE("primitive conjugacy growth") {
    auto e = build_engine("free(2)");
    auto pi = primitive_growth_table(*e, 6).values;
    CHECK(pi[2] == 8);
    CHECK(pi == oracle::free_pi_necklaces(6));
    auto xi = conjugacy_growth_table(*e, 6).values;
    for (std::size_t n = 0; n < pi.size(); ++n) CHECK(pi[n] <= xi[n]);
    auto hnn = build_engine("hnn(free(2), a='x', b='y')");
    CHECK_THROWS_AS(primitive_growth_table(*hnn, 2), CapabilityError);
  }

  TEST_CASE("bracketed tables for HNN extensions") {
    auto e = build_engine("hnn(free(2), a='x', b='y')");
    auto t = conjugacy_growth_table(*e, 3);
    REQUIRE(t.bracketed);
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(t.lower[n] <= t.upper[n]);
      CHECK(t.values[n] == t.upper[n]);
    }
    CHECK(is_non_decreasing(t.lower));
  }

  TEST_CASE("budget") {
    auto e = build_engine("free(2)");
    GrowthOptions opts;
    opts.budget = 100;
    try {
      growth_table(*e, 6, opts);
      FAIL("no budget error");
    } catch (const BudgetExceeded& ex) {
      CHECK(ex.radius_reached() == 3);
    }
  }

  TEST_CASE("monotonicity helpers") {
    CHECK(is_non_decreasing({1, 1, 2}));
    CHECK_FALSE(is_non_decreasing({1, 3, 2}));
    CHECK(within_exponential_bound({1, 3, 9}, 3));
    CHECK_FALSE(within_exponential_bound({1, 3, 10}, 3));
  }

  TEST_CASE("relative metric") {
    auto e = build_engine("direct(free(1),free(1))");
    HatMetric m(*e, 0, 3);
    const auto& d = static_cast<const DirectProductEngine&>(*e);
    const auto& h = d.factor(0);
    Payload h1 = d.embed(0, view(h.power(view(h.generator(0)), 2)));
    CHECK(m.distance(view(h1), view(h1)).value == std::size_t{0});
    // No H-edge joins two elements of H: leave through y and come back.
    auto r = m.distance(view(e->identity()), view(h1));
    CHECK(r.value == std::size_t{3});
    CHECK(m.in_subgroup(view(h1)));
    CHECK_FALSE(m.in_subgroup(view(d.embed(1, view(d.factor(1).generator(0))))));
  }

  TEST_CASE("translation lengths") {
    auto f2 = build_engine("free(2)");
    auto t = translation_number_estimate(
        *f2, view(f2->evaluate(parse_word("x*y", f2->generators()))), 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(t.sample(n) == 2.0);
    CHECK_FALSE(t.distorted);

    auto h = build_engine("heisenberg");
    auto c = translation_number_estimate(*h, view(Payload{0, 0, 1}), 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(c.lengths[n - 1] == oracle::heis_length(oracle::heis(0, 0, n), 12));
    }
    auto longer = translation_number_estimate(*h, view(Payload{0, 0, 1}), 24);
    CHECK(longer.distorted);
    CHECK(longer.lengths[23] < 24);
    CHECK_THROWS_AS(translation_number_estimate(*h, view(h->identity()), 4),
                    InputError);
  }
}
