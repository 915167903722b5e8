#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgsched/evaluate.hpp"
#include "rgsched/generators.hpp"

using namespace rgsched;

TEST_CASE("lower bound pair fixtures") {
  auto [truth, predicted] = lower_bound_pair(2, Rat(1, 2));
  REQUIRE(truth.size() == 2);
  REQUIRE(predicted.size() == 2);

  FiniteDist expect_truth({Atom{Rat(3, 2), Rat(1, 2)}, Atom{Rat(4), Rat(1, 2)}});
  FiniteDist expect_pred({Atom{Rat(1), Rat(1, 2)}, Atom{Rat(4), Rat(1, 2)}});
  for (size_t j = 0; j < 2; ++j) {
    CHECK(truth.job(j) == expect_truth);
    CHECK(predicted.job(j) == expect_pred);
  }
}

TEST_CASE("lower bound pair is (1+eps)-close and its quanta are two-phase") {
  for (std::uint32_t n : {2u, 4u, 8u}) {
    Rat eps(1, 10);
    auto [truth, predicted] = lower_bound_pair(n, eps);
    CHECK(is_alpha_close(truth, predicted, Rat(1) + eps));

    for (size_t j = 0; j < n; ++j) {
      auto quanta = compute_quanta(predicted.job(j), j);
      REQUIRE(quanta.size() == 2);
      CHECK(quanta[0].offset == Rat(0));
      CHECK(quanta[0].length == Rat(1));
      CHECK(quanta[1].offset == Rat(1));
      CHECK(quanta[1].length == Rat(static_cast<long>(n) * n - 1));
    }
  }
}

TEST_CASE("mispredicted quanta still cover the truth") {
  auto [truth, predicted] = lower_bound_pair(3, Rat(1, 4));
  Schedule s = build_gipp_schedule(predicted);
  for (size_t j = 0; j < truth.size(); ++j) {
    CHECK(s.total_length(j) == truth.job(j).max_support());
  }
  // strict execution over the whole product support never fails
  std::vector<size_t> idx(truth.size(), 0);
  while (true) {
    std::vector<Rat> realized;
    for (size_t j = 0; j < truth.size(); ++j) {
      realized.push_back(truth.job(j).atoms()[idx[j]].size);
    }
    CHECK_NOTHROW(execute(s, realized, ExecMode::Strict));
    size_t j = 0;
    while (j < truth.size() && ++idx[j] == truth.job(j).support_size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == truth.size()) break;
  }
}

TEST_CASE("lower bound pair validates parameters") {
  CHECK_THROWS_AS(lower_bound_pair(1, Rat(1, 2)), RgError);
  CHECK_THROWS_AS(lower_bound_pair(4, Rat(0)), RgError);
  CHECK_THROWS_AS(lower_bound_pair(4, Rat(1)), RgError);
  CHECK_THROWS_AS(lower_bound_pair(4, Rat(3, 2)), RgError);
}

TEST_CASE("random instances") {
  RandomInstanceParams params;

  SUBCASE("single-atom supports are deterministic jobs") {
    RandomInstanceParams tight = params;
    tight.max_atoms = 1;
    Rng rng(1);
    Instance inst = random_instance(4, tight, rng);
    for (const FiniteDist& d : inst.jobs()) {
      CHECK(d.support_size() == 1);
      CHECK(d.atoms()[0].prob == Rat(1));
    }
  }

  SUBCASE("seeded reproducibility") {
    Rng a(99), b(99);
    CHECK(random_instance(5, params, a) == random_instance(5, params, b));
  }

  SUBCASE("outputs satisfy the distribution invariants") {
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
      Instance inst = random_instance(3, params, rng);
      for (const FiniteDist& d : inst.jobs()) {
        Rat mass(0);
        Rat prev(-1);
        for (const Atom& a : d.atoms()) {
          CHECK(a.size > prev);
          CHECK(a.size.sign() > 0);
          CHECK(a.prob.sign() > 0);
          mass += a.prob;
          prev = a.size;
        }
        CHECK(mass == Rat(1));
      }
    }
  }
}

TEST_CASE("alpha close pairs") {
  RandomInstanceParams params;

  SUBCASE("alpha = 1 returns the truth itself") {
    Rng rng(11);
    auto [truth, predicted] = alpha_close_pair(3, Rat(1), params, rng);
    CHECK(truth == predicted);
  }

  SUBCASE("pairs are close in both roles") {
    Rng rng(13);
    for (int it = 0; it < 20; ++it) {
      Rat alpha(3, 2);
      auto [truth, predicted] = alpha_close_pair(2, alpha, params, rng);
      CHECK(is_alpha_close(truth, predicted, alpha));
      CHECK(is_alpha_close(predicted, truth, alpha));
    }
  }
}
