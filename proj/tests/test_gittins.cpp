#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgsched/generators.hpp"
#include "rgsched/gittins.hpp"

using namespace rgsched;

namespace {

// One job of the brittleness family: {1: 1-1/n, n^2: 1/n}.
FiniteDist family_job(long n) {
  return FiniteDist({Atom{Rat(1), Rat(n - 1, n)}, Atom{Rat(n * n), Rat(1, n)}});
}

}  // namespace

TEST_CASE("investment") {
  FiniteDist point = FiniteDist::point_mass(Rat(5));
  CHECK(investment(point, Rat(5), Rat(0)) == Rat(5));
  CHECK(investment(point, Rat(9), Rat(0)) == Rat(5));

  // {1: 1-p, M: p} with q = M, y = 0 -> (1-p) + M p
  Rat p(1, 4), big(9);
  FiniteDist d({Atom{Rat(1), Rat(1) - p}, Atom{big, p}});
  CHECK(investment(d, big, Rat(0)) == (Rat(1) - p) + big * p);

  FiniteDist coin({Atom{Rat(1), Rat(1, 2)}, Atom{Rat(2), Rat(1, 2)}});
  CHECK(investment(coin, Rat(2), Rat(0)) == Rat(3, 2));

  CHECK_THROWS_AS(investment(coin, Rat(1), Rat(2)), RgError);   // zero event
  CHECK_THROWS_AS(investment(coin, Rat(0), Rat(0)), RgError);   // q must be > 0
}

TEST_CASE("rank") {
  Rat p(1, 4), big(9);
  FiniteDist d({Atom{Rat(1), Rat(1) - p}, Atom{big, p}});
  CHECK(rank(d, Rat(1), Rat(0)) == Rat(1) - p);
  CHECK(rank(d, big - Rat(1), Rat(1)) == Rat(1) / (big - Rat(1)));

  FiniteDist point = FiniteDist::point_mass(Rat(5));
  CHECK(rank(point, Rat(5), Rat(0)) == Rat(1, 5));
}

TEST_CASE("quanta of a point mass") {
  auto quanta = compute_quanta(FiniteDist::point_mass(Rat(5)), 3);
  REQUIRE(quanta.size() == 1);
  CHECK(quanta[0].job == 3);
  CHECK(quanta[0].offset == Rat(0));
  CHECK(quanta[0].length == Rat(5));
  CHECK(quanta[0].rank == Rat(1, 5));
}

TEST_CASE("quanta of the brittleness job") {
  for (long n : {2L, 3L, 5L}) {
    auto quanta = compute_quanta(family_job(n));
    REQUIRE(quanta.size() == 2);
    CHECK(quanta[0].offset == Rat(0));
    CHECK(quanta[0].length == Rat(1));
    CHECK(quanta[0].rank == Rat(n - 1, n));
    CHECK(quanta[1].offset == Rat(1));
    CHECK(quanta[1].length == Rat(n * n - 1));
    CHECK(quanta[1].rank == Rat(1, n * n - 1));
  }
}

TEST_CASE("a single quantum can span several atoms") {
  FiniteDist coin({Atom{Rat(1), Rat(1, 2)}, Atom{Rat(2), Rat(1, 2)}});
  // candidate ranks by the definition: q=1 gives 1/2, q=2 gives 1/(3/2)
  CHECK(rank(coin, Rat(1), Rat(0)) == Rat(1, 2));
  CHECK(rank(coin, Rat(2), Rat(0)) == Rat(2, 3));
  auto quanta = compute_quanta(coin);
  REQUIRE(quanta.size() == 1);
  CHECK(quanta[0].length == Rat(2));
  CHECK(quanta[0].rank == Rat(2, 3));
}

TEST_CASE("quanta are invariant under duplicate-atom merging") {
  FiniteDist a({Atom{Rat(1), Rat(1, 2)}, Atom{Rat(1), Rat(1, 4)}, Atom{Rat(2), Rat(1, 4)}});
  FiniteDist b({Atom{Rat(1), Rat(3, 4)}, Atom{Rat(2), Rat(1, 4)}});
  CHECK(compute_quanta(a) == compute_quanta(b));
}

TEST_CASE("quanta structure on random distributions") {
  Rng rng(77);
  RandomInstanceParams params;
  params.max_atoms = 5;
  params.size_cap = 12;
  for (int it = 0; it < 200; ++it) {
    const FiniteDist d = random_instance(1, params, rng).job(0);
    auto quanta = compute_quanta(d);
    REQUIRE(!quanta.empty());

    Rat y(0);
    Rat prev_rank = quanta.front().rank;
    for (const Quantum& q : quanta) {
      CHECK(q.offset == y);
      CHECK(q.length.sign() > 0);
      CHECK(q.rank <= prev_rank);
      // boundaries are support points
      Rat boundary = q.offset + q.length;
      bool is_atom = false;
      for (const Atom& a : d.atoms()) {
        if (a.size == boundary) is_atom = true;
      }
      CHECK(is_atom);
      prev_rank = q.rank;
      y += q.length;
    }
    CHECK(y == d.max_support());
  }
}

TEST_CASE("global order of the brittleness instance") {
  std::vector<FiniteDist> jobs(3, family_job(3));
  QuantaOrder order = gipp_order(Instance(jobs));
  REQUIRE(order.quanta.size() == 6);
  for (size_t j = 0; j < 3; ++j) {
    CHECK(order.quanta[j].job == j);
    CHECK(order.quanta[j].length == Rat(1));
    CHECK(order.quanta[3 + j].job == j);
    CHECK(order.quanta[3 + j].length == Rat(8));
  }
}

TEST_CASE("deterministic jobs order by size") {
  Instance inst({FiniteDist::point_mass(Rat(2)), FiniteDist::point_mass(Rat(1))});
  QuantaOrder order = gipp_order(inst);
  REQUIRE(order.quanta.size() == 2);
  CHECK(order.quanta[0].job == 1);  // size 1 first: rank 1 > 1/2
  CHECK(order.quanta[1].job == 0);
}

TEST_CASE("single job keeps its offset order") {
  FiniteDist d({Atom{Rat(1), Rat(2, 3)}, Atom{Rat(4), Rat(1, 3)}});
  QuantaOrder order = gipp_order(Instance({d}));
  Rat y(0);
  for (const Quantum& q : order.quanta) {
    CHECK(q.offset == y);
    y += q.length;
  }
}

TEST_CASE("order is invariant under uniform size scaling") {
  Rng rng(13);
  RandomInstanceParams params;
  for (int it = 0; it < 40; ++it) {
    Instance inst = random_instance(3, params, rng);
    QuantaOrder base = gipp_order(inst);

    for (const Rat& c : {Rat(2), Rat(1, 3)}) {
      std::vector<FiniteDist> scaled;
      for (const FiniteDist& d : inst.jobs()) {
        std::vector<Atom> atoms;
        for (const Atom& a : d.atoms()) atoms.push_back(Atom{a.size * c, a.prob});
        scaled.emplace_back(std::move(atoms));
      }
      QuantaOrder got = gipp_order(Instance(scaled));
      REQUIRE(got.quanta.size() == base.quanta.size());
      for (size_t i = 0; i < base.quanta.size(); ++i) {
        CHECK(got.quanta[i].job == base.quanta[i].job);
        CHECK(got.quanta[i].offset == base.quanta[i].offset * c);
        CHECK(got.quanta[i].length == base.quanta[i].length * c);
        CHECK(got.quanta[i].rank == base.quanta[i].rank / c);
      }
    }
  }
}

TEST_CASE("history sets") {
  SUBCASE("single job: every span is its own quantum") {
    FiniteDist d({Atom{Rat(1), Rat(1, 3)}, Atom{Rat(2), Rat(1, 3)}, Atom{Rat(3), Rat(1, 3)}});
    QuantaOrder order = gipp_order(Instance({d}));
    auto spans = history_sets(order, 1);
    REQUIRE(spans[0].size() == order.quanta.size());
    for (size_t i = 0; i < spans[0].size(); ++i) {
      CHECK(spans[0][i].lo == i);
      CHECK(spans[0][i].hi == i + 1);
    }
  }

  SUBCASE("brittleness instance, positional construction") {
    std::vector<FiniteDist> jobs(2, family_job(2));
    QuantaOrder order = gipp_order(Instance(jobs));
    // positions: (j0 len 1), (j1 len 1), (j0 len 3), (j1 len 3)
    auto spans = history_sets(order, 2);
    REQUIRE(spans[0].size() == 2);
    CHECK(spans[0][0].lo == 0);
    CHECK(spans[0][0].hi == 1);  // H'(0,1) = {own}
    CHECK(spans[0][1].lo == 1);
    CHECK(spans[0][1].hi == 3);  // H'(0,2) = {(1,1), (0,2)}
    CHECK(spans[1][0].lo == 0);
    CHECK(spans[1][0].hi == 2);
    CHECK(spans[1][1].lo == 2);
    CHECK(spans[1][1].hi == 4);
  }

  SUBCASE("spans partition each job's history") {
    Rng rng(55);
    RandomInstanceParams params;
    for (int it = 0; it < 30; ++it) {
      Instance inst = random_instance(4, params, rng);
      QuantaOrder order = gipp_order(inst);
      auto spans = history_sets(order, inst.size());
      for (size_t j = 0; j < inst.size(); ++j) {
        size_t expect_lo = 0;
        for (const SpanRange& s : spans[j]) {
          CHECK(s.lo == expect_lo);  // disjoint, telescoping
          CHECK(s.hi > s.lo);
          // exactly one job-j quantum per span, at its end
          size_t own = 0;
          for (size_t p = s.lo; p < s.hi; ++p) {
            if (order.quanta[p].job == j) ++own;
          }
          CHECK(own == 1);
          CHECK(order.quanta[s.hi - 1].job == j);
          expect_lo = s.hi;
        }
      }
    }
  }
}
