#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "zeta_arr/matroid.hpp"
#include "zeta_arr/oracle.hpp"
#include "zeta_arr/realization.hpp"
#include "zeta_arr/zeta.hpp"

namespace zeta_arr {

using Json = nlohmann::ordered_json;

// Either an abstract matroid or a realization (which carries its matroid).
struct ProblemInput {
  Matroid matroid;
  std::optional<Arrangement> arrangement;
};

// Accepts {"n","d","bases"} or {"field","matrix"}. Syntax and schema problems
// raise ParseError (with line and column for syntax errors); violated
// mathematical invariants raise PreconditionError.
ProblemInput parse_input(const std::string& text);

// "3", "-2/5"; ParseError otherwise.
mpq_class parse_rational(const std::string& text);

Json matroid_to_json(const Matroid& m);
Json arrangement_to_json(const Arrangement& a);
Json input_to_json(const ProblemInput& input);
Json subset_to_json(Subset s);
Json laurent_to_json(const LaurentPoly& p);
Json series_to_json(const ZetaSeries& z);
Json series_to_json(const RationalSeries& z);
Json rational_to_json(const ZetaRational& z);
Json fraction_to_json(const ZetaFraction& f);
Json verify_to_json(const VerifyReport& report);

}  // namespace zeta_arr
