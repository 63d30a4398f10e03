#include <doctest.h>

#include "test_support.hpp"
#include "zeta_arr/errors.hpp"
#include "zeta_arr/realization.hpp"

using namespace zeta_arr;
using namespace zeta_arr::testing;

namespace {

std::vector<mpq_class> q(std::initializer_list<long> values) {
  std::vector<mpq_class> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RationalMatrix rows_q(std::initializer_list<std::initializer_list<long>> rows) {
  return arrangement_q(rows).matrix();
}

}  // namespace

TEST_CASE("column matroid examples") {
  const RationalMatrix m = rows_q({{1, 0, 1}, {0, 1, 1}});
  CHECK(column_matroid(m, FieldSpec::rationals()) == Matroid::uniform(2, 3));
  CHECK(column_matroid(m, FieldSpec::prime_field(2)) == Matroid::uniform(2, 3));
  CHECK(boolean_arrangement(3).matroid() == Matroid::boolean(3));
  CHECK(k4_arrangement().matroid().bases().size() == 16);
}

TEST_CASE("arrangements reject zero columns and rank deficiency") {
  CHECK_THROWS_AS(arrangement_q({{1, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(arrangement_q({{1, 2}, {2, 4}}), PreconditionError);
  CHECK_THROWS_AS(arrangement_fp(2, {{1, 2}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::prime_field(4), PreconditionError);
}

TEST_CASE("circuit form examples") {
  const CircuitForm form = circuit_form(u23_arrangement(), set_of({1, 2, 3}));
  CHECK(form.coeffs == q({1, 1, -1}));
  const Arrangement boolean = boolean_arrangement(3);
  for (Subset c = 1; c <= full_set(3); ++c) {
    CHECK_THROWS_AS(circuit_form(boolean, c), PreconditionError);
  }
  const Arrangement parallel = arrangement_q({{1, 0, 0}, {0, 1, 1}});
  CHECK(circuit_form(parallel, set_of({2, 3})).coeffs == q({0, 1, -1}));
  CHECK_THROWS_AS(circuit_form(u23_arrangement(), set_of({1, 2})), PreconditionError);
}

TEST_CASE("circuit form over F_p is normalized") {
  const Arrangement a = arrangement_fp(5, {{1, 0, 2}, {0, 1, 3}});
  const CircuitForm form = circuit_form(a, set_of({1, 2, 3}));
  // 2 c1 + 3 c2 = c3, so (1, 3*2^{-1}, -2^{-1}) = (1, 4, 2) mod 5
  CHECK(form.coeffs == q({1, 4, 2}));
}

TEST_CASE("every circuit form has support exactly its circuit") {
  for (const auto& entry : battery()) {
    const Arrangement& a = entry.arrangement;
    for (Subset c : circuits(a.matroid())) {
      const CircuitForm form = circuit_form(a, c);
      Subset support = 0;
      for (int i = 0; i < a.size(); ++i) {
        if (sgn(form.coeffs[static_cast<std::size_t>(i)]) != 0) support |= singleton(i);
      }
      CHECK(support == c);
      for (std::size_t r = 0; r < a.matrix().rows(); ++r) {
        mpq_class sum = 0;
        for (int i = 0; i < a.size(); ++i) sum += form.coeffs[static_cast<std::size_t>(i)] * a.matrix()(r, static_cast<std::size_t>(i));
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("initial form examples") {
  const CircuitForm form{set_of({1, 2, 3}), q({1, 1, -1})};
  CHECK(initial_form(form, {1, 0, 0}) == q({0, 1, -1}));
  CHECK(initial_form(form, {0, 0, 0}) == form.coeffs);
  CHECK(initial_form(form, {0, 1, 1}) == q({1, 0, 0}));
}

TEST_CASE("initial arrangement examples") {
  const Arrangement a = u23_arrangement();
  CHECK(canonical_row_space(initial_arrangement(a, {0, 0, 0})) == canonical_row_space(a));
  const Arrangement a100 = initial_arrangement(a, {1, 0, 0});
  CHECK(canonical_row_space(a100) == rows_q({{1, 0, 0}, {0, 1, 1}}));
  CHECK(a100.matroid().bases() == std::vector<Subset>{set_of({1, 2}), set_of({1, 3})});
  CHECK(canonical_row_space(initial_arrangement(a, {2, 1, 1})) == canonical_row_space(a100));
  CHECK_THROWS_AS(initial_arrangement(a, {1, 1, 0}), PreconditionError);
}

TEST_CASE("minimum of w over a fundamental circuit sits at the added element") {
  for (const Matroid& m : small_matroids()) {
    for_each_weight(m.size(), 5, [&](const WeightVector& w) {
      const Matroid mw = initial_matroid(m, w);
      for (Subset b : mw.bases()) {
        for (int i = 0; i < m.size(); ++i) {
          if (subset_contains(b, i)) continue;
          const Subset c = fundamental_circuit(m, i, b);
          std::int64_t low = w[static_cast<std::size_t>(i)];
          for (int j = 0; j < m.size(); ++j) {
            if (subset_contains(c, j)) low = std::min(low, w[static_cast<std::size_t>(j)]);
          }
          REQUIRE(low == w[static_cast<std::size_t>(i)]);
        }
      }
    });
  }
}

TEST_CASE("initial arrangement is independent of the basis and realizes M_w") {
  std::vector<Arrangement> arrangements;
  for (const auto& entry : battery()) arrangements.push_back(entry.arrangement);
  arrangements.push_back(arrangement_q({{1, 0, 1, 1, 0}, {0, 1, 1, 2, 1}, {0, 0, 0, 0, 1}}));
  arrangements.push_back(arrangement_fp(3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  for (const Arrangement& a : arrangements) {
    const Matroid& m = a.matroid();
    for_each_weight(m.size(), 4, [&](const WeightVector& w) {
      if (!in_bergman_fan(m, w)) return;
      const Matroid mw = initial_matroid(m, w);
      const Arrangement reference = initial_arrangement(a, w);
      CHECK(reference.matroid() == mw);
      for (Subset b : mw.bases()) {
        CHECK(canonical_row_space(initial_arrangement(a, w, b)) == canonical_row_space(reference));
      }
    });
    CHECK(canonical_row_space(initial_arrangement(a, WeightVector(static_cast<std::size_t>(m.size()), 0))) ==
          canonical_row_space(a));
  }
}

TEST_CASE("reduction modulo p") {
  const Arrangement reduced = reduce_mod_p(u23_arrangement(), 2);
  CHECK(reduced.field() == FieldSpec::prime_field(2));
  CHECK(reduced.matroid() == Matroid::uniform(2, 3));
  // minors: {1,2} = 1, {1,3} = 1, {2,3} = -2; the last vanishes mod 2
  const Arrangement a = arrangement_q({{1, 0, 2}, {0, 1, 1}});
  CHECK(a.matroid() == Matroid::uniform(2, 3));
  CHECK_THROWS_AS(reduce_mod_p(a, 2), BadPrimeError);
  CHECK(reduce_mod_p(a, 3).matroid() == a.matroid());
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(reduce_mod_p(boolean_arrangement(3), p).matroid() == Matroid::boolean(3));
  CHECK_THROWS_AS(reduce_mod_p(u24_arrangement(), 2), BadPrimeError);

  RationalMatrix half(1, 2);
  half(0, 0) = mpq_class(1, 2);
  half(0, 1) = 1;
  const Arrangement with_denominator = Arrangement::create(FieldSpec::rationals(), half);
  CHECK_THROWS_AS(reduce_mod_p(with_denominator, 2), BadPrimeError);
  CHECK(reduce_mod_p(with_denominator, 3).matrix()(0, 0) == 2);
  CHECK_THROWS_AS(reduce_mod_p(reduced, 2), PreconditionError);
}
