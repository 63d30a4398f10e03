#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "zeta_arr/field.hpp"
#include "zeta_arr/linalg.hpp"
#include "zeta_arr/matroid.hpp"

namespace zeta_arr {

using RationalMatrix = Matrix<mpq_class>;

// A central essential arrangement of n linear forms on d coordinates, given
// by a d x n matrix whose columns are the coefficient vectors of the forms.
// Over F_p the entries are stored as integers in [0, p).
class Arrangement {
 public:
  // Validates rank d and the absence of zero columns, then computes the
  // column matroid.
  static Arrangement create(FieldSpec field, RationalMatrix matrix);

  const FieldSpec& field() const { return field_; }
  const RationalMatrix& matrix() const { return matrix_; }
  const Matroid& matroid() const { return matroid_; }
  int size() const { return static_cast<int>(matrix_.cols()); }
  int rank() const { return static_cast<int>(matrix_.rows()); }

 private:
  Arrangement(FieldSpec field, RationalMatrix matrix, Matroid matroid)
      : field_(field), matrix_(std::move(matrix)), matroid_(std::move(matroid)) {}

  FieldSpec field_;
  RationalMatrix matrix_;
  Matroid matroid_;
};

// Linear relation Σ a_i x_i vanishing on the arrangement's subspace, with
// support exactly `circuit`. The first nonzero coefficient is 1.
struct CircuitForm {
  Subset circuit = 0;
  std::vector<mpq_class> coeffs;
};

Matroid column_matroid(const RationalMatrix& matrix, FieldSpec field);

CircuitForm circuit_form(const Arrangement& a, Subset circuit);

// Keeps the coefficients of minimal w-weight on the support.
std::vector<mpq_class> initial_form(const CircuitForm& form, const WeightVector& w);

// Arrangement whose subspace is cut out by the initial forms of the
// fundamental-circuit relations. Uses the colex-smallest w-maximal basis
// unless `basis` names another one. The result is in canonical (RREF) form.
Arrangement initial_arrangement(const Arrangement& a, const WeightVector& w,
                                std::optional<Subset> basis = std::nullopt);

// Reduction of a rational arrangement modulo p; BadPrimeError when a
// denominator vanishes or the matroid changes.
Arrangement reduce_mod_p(const Arrangement& a, std::uint64_t p);

// Reduced row echelon form of the row space; equal for arrangements with the
// same subspace.
RationalMatrix canonical_row_space(const Arrangement& a);

}  // namespace zeta_arr
