#include "zeta_arr/realization.hpp"

#include <algorithm>
#include <string>

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

namespace {

template <class Fn>
decltype(auto) with_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalOps{});
  return fn(ModPOps{field.prime()});
}

template <class Ops>
Matrix<typename Ops::value_type> to_values(const Ops& ops, const RationalMatrix& m) {
  Matrix<typename Ops::value_type> out(m.rows(), m.cols(), ops.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ops.from_rational(m(r, c));
  }
  return out;
}

template <class Ops>
RationalMatrix to_rationals(const Ops& ops, const Matrix<typename Ops::value_type>& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ops.to_rational(m(r, c));
  }
  return out;
}

template <class Ops>
Matrix<typename Ops::value_type> select_columns(const Matrix<typename Ops::value_type>& m,
                                                Subset columns) {
  Matrix<typename Ops::value_type> out(m.rows(), static_cast<std::size_t>(subset_size(columns)));
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!subset_contains(columns, static_cast<int>(c))) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, c);
    ++k;
  }
  return out;
}

void check_shape(const RationalMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) throw PreconditionError("matrix must be nonempty");
  if (m.cols() > static_cast<std::size_t>(kMaxGroundSet)) {
    throw PreconditionError("at most " + std::to_string(kMaxGroundSet) + " columns supported");
  }
  if (m.rows() > m.cols()) throw PreconditionError("matrix has more rows than columns");
}

template <class Ops>
Matroid column_matroid_impl(const Ops& ops, const RationalMatrix& matrix) {
  check_shape(matrix);
  const auto values = to_values(ops, matrix);
  const int d = static_cast<int>(values.rows());
  const int n = static_cast<int>(values.cols());
  for (int c = 0; c < n; ++c) {
    bool zero = true;
    for (int r = 0; r < d && zero; ++r) zero = ops.is_zero(values(r, c));
    if (zero) {
      throw PreconditionError("column " + std::to_string(c + 1) +
                              " is zero (loop; arrangement not central essential)");
    }
  }
  if (matrix_rank(ops, values) != static_cast<std::size_t>(d)) {
    throw PreconditionError("matrix is rank deficient (arrangement not essential)");
  }
  std::vector<Subset> bases;
  for_each_k_subset(n, d, [&](Subset s) {
    if (matrix_rank(ops, select_columns<Ops>(values, s)) == static_cast<std::size_t>(d)) {
      bases.push_back(s);
    }
  });
  return Matroid::from_bases(n, d, std::move(bases));
}

}  // namespace

Matroid column_matroid(const RationalMatrix& matrix, FieldSpec field) {
  return with_field(field, [&](const auto& ops) { return column_matroid_impl(ops, matrix); });
}

Arrangement Arrangement::create(FieldSpec field, RationalMatrix matrix) {
  check_shape(matrix);
  if (!field.is_rational()) {
    const ModPOps ops{field.prime()};
    matrix = to_rationals(ops, to_values(ops, matrix));
  }
  Matroid m = column_matroid(matrix, field);
  return Arrangement(field, std::move(matrix), std::move(m));
}

CircuitForm circuit_form(const Arrangement& a, Subset circuit) {
  const Matroid& m = a.matroid();
  if (circuit == 0 || (circuit & ~full_set(m.size())) != 0 || m.is_independent(circuit)) {
    throw PreconditionError(format_subset(circuit) + " is not a circuit");
  }
  for (int e = 0; e < m.size(); ++e) {
    if (subset_contains(circuit, e) && !m.is_independent(circuit & ~singleton(e))) {
      throw PreconditionError(format_subset(circuit) + " is not a circuit");
    }
  }
  return with_field(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto sub = select_columns<Ops>(to_values(ops, a.matrix()), circuit);
    const auto kernel = kernel_basis(ops, sub);
    if (kernel.size() != 1) {
      throw PreconditionError("dependence space on " + format_subset(circuit) +
                              " has dimension " + std::to_string(kernel.size()));
    }
    auto v = kernel.front();
    const auto lead = v.front();
    if (ops.is_zero(lead)) throw PreconditionError("dependence drops support");
    CircuitForm form;
    form.circuit = circuit;
    form.coeffs.assign(static_cast<std::size_t>(m.size()), mpq_class(0));
    std::size_t k = 0;
    for (int e = 0; e < m.size(); ++e) {
      if (!subset_contains(circuit, e)) continue;
      const auto value = ops.div(v[k++], lead);
      if (ops.is_zero(value)) throw PreconditionError("dependence drops support");
      form.coeffs[static_cast<std::size_t>(e)] = ops.to_rational(value);
    }
    return form;
  });
}

std::vector<mpq_class> initial_form(const CircuitForm& form, const WeightVector& w) {
  if (w.size() != form.coeffs.size()) throw PreconditionError("weight length mismatch");
  std::vector<mpq_class> out(form.coeffs.size(), mpq_class(0));
  if (form.circuit == 0) return out;
  std::int64_t low = 0;
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!subset_contains(form.circuit, static_cast<int>(i))) continue;
    if (first || w[i] < low) low = w[i];
    first = false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (subset_contains(form.circuit, static_cast<int>(i)) && w[i] == low) {
      out[i] = form.coeffs[i];
    }
  }
  return out;
}

Arrangement initial_arrangement(const Arrangement& a, const WeightVector& w,
                                std::optional<Subset> basis) {
  const Matroid& m = a.matroid();
  check_weight_length(m, w);
  const Matroid mw = initial_matroid(m, w);
  if (!mw.is_loop_free()) {
    throw PreconditionError("weight lies outside the Bergman fan (initial matroid has loops " +
                            format_subset(mw.loops()) + ")");
  }
  const Subset chosen = basis.value_or(mw.bases().front());
  if (!mw.is_basis(chosen)) {
    throw PreconditionError(format_subset(chosen) + " is not a w-maximal basis");
  }
  const int n = m.size();
  const int d = m.rank();
  RationalMatrix forms(static_cast<std::size_t>(n - d), static_cast<std::size_t>(n));
  std::size_t row = 0;
  for (int i = 0; i < n; ++i) {
    if (subset_contains(chosen, i)) continue;
    const auto init = initial_form(circuit_form(a, fundamental_circuit(m, i, chosen)), w);
    for (int j = 0; j < n; ++j) forms(row, static_cast<std::size_t>(j)) = init[static_cast<std::size_t>(j)];
    ++row;
  }
  RationalMatrix subspace = with_field(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    using V = typename Ops::value_type;
    std::vector<std::vector<V>> kernel;
    if (n == d) {
      for (int k = 0; k < n; ++k) {
        std::vector<V> e(static_cast<std::size_t>(n), ops.zero());
        e[static_cast<std::size_t>(k)] = ops.one();
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = kernel_basis(ops, to_values(ops, forms));
    }
    if (kernel.size() != static_cast<std::size_t>(d)) {
      throw PreconditionError("initial forms cut out a subspace of dimension " +
                              std::to_string(kernel.size()) + " instead of " +
                              std::to_string(d));
    }
    Matrix<V> rows(static_cast<std::size_t>(d), static_cast<std::size_t>(n), ops.zero());
    for (std::size_t r = 0; r < kernel.size(); ++r) {
      for (std::size_t c = 0; c < kernel[r].size(); ++c) rows(r, c) = kernel[r][c];
    }
    rref(ops, rows);
    return to_rationals(ops, rows);
  });
  return Arrangement::create(a.field(), std::move(subspace));
}

Arrangement reduce_mod_p(const Arrangement& a, std::uint64_t p) {
  if (!a.field().is_rational()) throw PreconditionError("reduction needs an arrangement over Q");
  const FieldSpec field = FieldSpec::prime_field(p);
  const ModPOps ops{p};
  RationalMatrix reduced = to_rationals(ops, to_values(ops, a.matrix()));
  Matroid m = [&] {
    try {
      return column_matroid(reduced, field);
    } catch (const BadPrimeError&) {
      throw;
    } catch (const PreconditionError& e) {
      throw BadPrimeError("bad prime " + std::to_string(p) + ": " + e.what());
    }
  }();
  if (!(m == a.matroid())) {
    throw BadPrimeError("bad prime " + std::to_string(p) + ": matroid changes under reduction");
  }
  return Arrangement::create(field, std::move(reduced));
}

RationalMatrix canonical_row_space(const Arrangement& a) {
  return with_field(a.field(), [&](const auto& ops) {
    auto values = to_values(ops, a.matrix());
    const auto pivots = rref(ops, values);
    RationalMatrix out(pivots.size(), values.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = 0; c < values.cols(); ++c) out(r, c) = ops.to_rational(values(r, c));
    }
    return out;
  });
}

}  // namespace zeta_arr
