#include <doctest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "zeta_arr/errors.hpp"
#include "zeta_arr/fan.hpp"

using namespace zeta_arr;
using namespace zeta_arr::testing;

TEST_CASE("lattice point examples") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(lattice_points(u23, 1, false) ==
        std::vector<WeightVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(lattice_points(u23, 3, true) == std::vector<WeightVector>{{1, 1, 1}});
  for (const Matroid& m : small_matroids()) {
    CHECK(lattice_points(m, 0, false) == std::vector<WeightVector>{WeightVector(static_cast<std::size_t>(m.size()), 0)});
  }
  CHECK_THROWS_AS(lattice_points(u23, -1, false), PreconditionError);
  CHECK_THROWS_AS(lattice_points(u23, {1, 0, 1}, 2, false), PreconditionError);
}

TEST_CASE("lattice points equal the argmax-filtered compositions") {
  for (const Matroid& m : small_matroids()) {
    if (m.size() > 5) continue;
    for (bool strict : {false, true}) {
      std::map<std::int64_t, std::set<WeightVector>> expected;
      for_each_weight(m.size(), 6, [&](const WeightVector& w) {
        std::int64_t total = 0;
        bool positive = true;
        for (auto x : w) {
          total += x;
          positive = positive && x > 0;
        }
        if ((!strict || positive) && in_bergman_fan(m, w)) expected[total].insert(w);
      });
      for (std::int64_t degree = 0; degree <= 6; ++degree) {
        const auto points = lattice_points(m, degree, strict);
        CHECK(std::set<WeightVector>(points.begin(), points.end()) == expected[degree]);
        CHECK(std::set<WeightVector>(points.begin(), points.end()).size() == points.size());
      }
    }
  }
}

TEST_CASE("chain examples") {
  const auto u23 = chains(Matroid::uniform(2, 3));
  REQUIRE(u23.size() == 4);
  CHECK(u23[0].flats.empty());
  CHECK(u23[1].flats == std::vector<Subset>{set_of({1})});
  CHECK(u23[2].flats == std::vector<Subset>{set_of({2})});
  CHECK(u23[3].flats == std::vector<Subset>{set_of({3})});

  const auto b2 = chains(Matroid::boolean(2));
  REQUIRE(b2.size() == 3);
  CHECK(b2[1].flats == std::vector<Subset>{set_of({1})});
  CHECK(b2[2].flats == std::vector<Subset>{set_of({2})});

  CHECK(chains(Matroid::boolean(1)).size() == 1);
  // K_4: 13 proper flats and 18 covering pairs of them
  CHECK(chains(k4_arrangement().matroid()).size() == 32);
}

TEST_CASE("chains have strictly increasing flats and ranks") {
  for (const Matroid& m : small_matroids()) {
    for (const FlagChain& chain : chains(m)) {
      for (std::size_t j = 0; j < chain.length(); ++j) {
        CHECK(m.is_flat(chain.flats[j]));
        CHECK(chain.flats[j] != 0);
        CHECK(chain.flats[j] != full_set(m.size()));
        CHECK(chain.ranks[j] == m.rank(chain.flats[j]));
        if (j > 0) {
          CHECK((chain.flats[j - 1] & chain.flats[j]) == chain.flats[j - 1]);
          CHECK(chain.flats[j - 1] != chain.flats[j]);
          CHECK(chain.ranks[j - 1] < chain.ranks[j]);
        }
      }
      CHECK(chain_matroid(m, chain).is_loop_free());
    }
  }
}

TEST_CASE("chain matroid examples") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(chain_matroid(u23, FlagChain{}) == u23);
  CHECK(chain_matroid(u23, FlagChain{{set_of({1})}, {1}}).bases() ==
        std::vector<Subset>{set_of({1, 2}), set_of({1, 3})});
  CHECK(chain_matroid(Matroid::boolean(2), FlagChain{{set_of({2})}, {1}}) == Matroid::boolean(2));
  CHECK_THROWS_AS(chain_matroid(u23, FlagChain{{set_of({1, 2})}, {2}}), PreconditionError);
}

TEST_CASE("decode examples") {
  const Matroid u23 = Matroid::uniform(2, 3);
  const ChainPoint constant = decode(u23, {1, 1, 1});
  CHECK(constant.chain.flats.empty());
  CHECK(constant.c0 == 1);

  const ChainPoint p211 = decode(u23, {2, 1, 1});
  CHECK(p211.chain.flats == std::vector<Subset>{set_of({1})});
  CHECK(p211.c0 == 1);
  CHECK(p211.c == std::vector<std::int64_t>{1});

  const ChainPoint p100 = decode(u23, {1, 0, 0});
  CHECK(p100.chain.flats == std::vector<Subset>{set_of({1})});
  CHECK(p100.c0 == 0);
  CHECK(p100.c == std::vector<std::int64_t>{1});

  CHECK_THROWS_AS(decode(u23, {1, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(decode(u23, {-1, 0, 0}), PreconditionError);
}

TEST_CASE("decode and encode round-trip on fan points") {
  for (const Matroid& m : small_matroids()) {
    for (std::int64_t degree = 0; degree <= 5; ++degree) {
      for (const WeightVector& w : lattice_points(m, degree, false)) {
        CHECK(encode(m.size(), decode(m, w)) == w);
      }
    }
  }
}

TEST_CASE("chain decomposition is a bijection onto the fan lattice points") {
  std::mt19937 rng(23);
  for (const Matroid& m : small_matroids()) {
    CHECK(chain_bijection_holds(m, WeightVector(static_cast<std::size_t>(m.size()), 1), 8));
    WeightVector u(static_cast<std::size_t>(m.size()));
    for (auto& x : u) x = std::uniform_int_distribution<int>(1, 3)(rng);
    CHECK(chain_bijection_holds(m, u, 8));
  }
}

TEST_CASE("cone interiors share the chain matroid and weight is linear") {
  std::mt19937 rng(29);
  for (const Matroid& m : small_matroids()) {
    for (const FlagChain& chain : chains(m)) {
      const Matroid expected = chain_matroid(m, chain);
      for (int trial = 0; trial < 5; ++trial) {
        ChainPoint point{chain, std::uniform_int_distribution<int>(0, 4)(rng), {}};
        for (std::size_t j = 0; j < chain.length(); ++j) {
          point.c.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
        }
        const WeightVector w = encode(m.size(), point);
        CHECK(initial_matroid(m, w) == expected);
        std::int64_t linear = point.c0 * m.rank();
        for (std::size_t j = 0; j < chain.length(); ++j) linear += point.c[j] * chain.ranks[j];
        CHECK(weight(m, w) == linear);
        CHECK(decode(m, w) == point);
      }
    }
  }
}
