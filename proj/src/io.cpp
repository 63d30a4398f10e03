#include "zeta_arr/io.hpp"

#include <algorithm>

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

int require_int(const nlohmann::json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Matroid parse_matroid(const nlohmann::json& doc) {
  const int n = require_int(doc, "n");
  const int d = require_int(doc, "d");
  const auto& bases_json = require(doc, "bases");
  if (!bases_json.is_array()) throw ParseError("field \"bases\" must be an array");
  if (n < 1 || n > kMaxGroundSet) {
    throw PreconditionError("n must lie in 1.." + std::to_string(kMaxGroundSet));
  }
  std::vector<Subset> bases;
  for (const auto& b : bases_json) {
    if (!b.is_array()) throw ParseError("every basis must be an array of element labels");
    std::vector<int> labels;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw ParseError("basis elements must be integers");
      labels.push_back(e.get<int>());
    }
    const Subset s = subset_from_labels(labels, n);
    if (subset_size(s) != static_cast<int>(labels.size())) {
      throw PreconditionError("basis lists a repeated element");
    }
    bases.push_back(s);
  }
  return Matroid::from_bases(n, d, std::move(bases));
}

Arrangement parse_arrangement(const nlohmann::json& doc) {
  const auto& field_json = require(doc, "field");
  FieldSpec field = FieldSpec::rationals();
  if (field_json.is_string()) {
    if (field_json.get<std::string>() != "Q") throw ParseError("field must be \"Q\" or {\"p\": prime}");
  } else if (field_json.is_object()) {
    const auto& p = require(field_json, "p");
    if (!p.is_number_unsigned()) throw ParseError("field prime must be a positive integer");
    field = FieldSpec::prime_field(p.get<std::uint64_t>());
  } else {
    throw ParseError("field must be \"Q\" or {\"p\": prime}");
  }
  const auto& rows = require(doc, "matrix");
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t cols = rows.front().is_array() ? rows.front().size() : 0;
  RationalMatrix matrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols || cols == 0) {
      throw ParseError("matrix rows must be nonempty arrays of equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& entry = rows[r][c];
      if (entry.is_string()) {
        matrix(r, c) = parse_rational(entry.get<std::string>());
      } else if (entry.is_number_integer()) {
        matrix(r, c) = parse_rational(entry.dump());
      } else {
        throw ParseError("matrix entries must be rational strings or integers");
      }
    }
  }
  return Arrangement::create(field, std::move(matrix));
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw ParseError("invalid rational literal \"" + text + "\"");
  }
  const mpz_class denominator(den);
  if (denominator == 0) throw ParseError("zero denominator in \"" + text + "\"");
  mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), denominator);
  q.canonicalize();
  return q;
}

ProblemInput parse_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  try {
    if (doc.contains("matrix")) {
      Arrangement a = parse_arrangement(doc);
      Matroid m = a.matroid();
      return ProblemInput{std::move(m), std::move(a)};
    }
    if (doc.contains("bases")) return ProblemInput{parse_matroid(doc), std::nullopt};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  }
  throw ParseError("input needs either \"bases\" (matroid) or \"matrix\" (arrangement)");
}

Json subset_to_json(Subset s) {
  Json arr = Json::array();
  for (int label : subset_labels(s)) arr.push_back(label);
  return arr;
}

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases()) bases.push_back(subset_to_json(b));
  return Json{{"n", m.size()}, {"d", m.rank()}, {"bases", bases}};
}

Json arrangement_to_json(const Arrangement& a) {
  Json field = a.field().is_rational() ? Json("Q") : Json{{"p", a.field().prime()}};
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.matrix().rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.matrix().cols(); ++c) row.push_back(a.matrix()(r, c).get_str());
    rows.push_back(row);
  }
  return Json{{"field", field}, {"matrix", rows}};
}

Json input_to_json(const ProblemInput& input) {
  return input.arrangement ? arrangement_to_json(*input.arrangement) : matroid_to_json(input.matroid);
}

Json laurent_to_json(const LaurentPoly& p) {
  Json obj = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    obj["L^" + std::to_string(it->first)] = it->second.get_str();
  }
  return obj;
}

Json series_to_json(const ZetaSeries& z) {
  Json arr = Json::array();
  for (std::size_t l = 0; l < z.coeffs.size(); ++l) {
    arr.push_back(Json{{"deg", l}, {"coeff", laurent_to_json(z.coeffs[l])}});
  }
  return arr;
}

Json series_to_json(const RationalSeries& z) {
  Json arr = Json::array();
  for (std::size_t l = 0; l < z.coeffs.size(); ++l) {
    arr.push_back(Json{{"deg", l}, {"coeff", z.coeffs[l].get_str()}});
  }
  return arr;
}

Json rational_to_json(const ZetaRational& z) {
  Json arr = Json::array();
  for (const ZetaTerm& term : z.terms) {
    Json chain = Json::array();
    for (Subset g : term.chain.flats) chain.push_back(subset_to_json(g));
    Json denominator = Json::array();
    for (const auto& f : term.denominator) denominator.push_back(Json::array({f.l_exponent, f.t_exponent}));
    arr.push_back(Json{{"chain", chain},
                       {"ranks", term.chain.ranks},
                       {"numerator", laurent_to_json(term.numerator)},
                       {"t_exponent", term.t_exponent},
                       {"denominator", denominator}});
  }
  return arr;
}

Json fraction_to_json(const ZetaFraction& f) {
  Json numerator = Json::array();
  for (std::size_t t = 0; t < f.numerator.size(); ++t) {
    if (f.numerator[t].is_zero()) continue;
    numerator.push_back(Json{{"deg", t}, {"coeff", laurent_to_json(f.numerator[t])}});
  }
  Json denominator = Json::array();
  for (const auto& c : f.denominator) {
    denominator.push_back(Json::array({c.factor.l_exponent, c.factor.t_exponent, c.multiplicity}));
  }
  return Json{{"numerator", numerator}, {"denominator", denominator}};
}

Json verify_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"p", c.p},
                          {"level", c.level},
                          {"variant", jet_variant_name(c.variant)},
                          {"expected", c.expected.get_str()},
                          {"actual", c.actual.get_str()},
                          {"pass", c.pass}});
  }
  return Json{{"pass", report.pass()}, {"checks", checks}};
}

}  // namespace zeta_arr
