#include "zeta_arr/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "zeta_arr/cache.hpp"
#include "zeta_arr/errors.hpp"
#include "zeta_arr/fan.hpp"
#include "zeta_arr/io.hpp"

namespace zeta_arr {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <class T>
std::vector<T> split_list(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if constexpr (std::is_unsigned_v<T>) {
        if (v < 0) throw std::invalid_argument(item);
      }
      values.push_back(static_cast<T>(v));
    } catch (const std::logic_error&) {
      throw ParseError(std::string("invalid ") + what + " entry '" + item + "'");
    }
  }
  return values;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void write_output(const JobConfig& config, const std::string& payload, std::ostream& out) {
  if (config.output_path.empty()) {
    out << payload;
    return;
  }
  const std::filesystem::path target(config.output_path);
  std::random_device rd;
  const std::filesystem::path temp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    file << payload;
    if (!file) throw Error("cannot write output file '" + config.output_path + "'");
  }
  std::filesystem::rename(temp, target);
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

std::string inspect(const JobConfig& config, const ProblemInput& input) {
  const Matroid& m = input.matroid;
  const auto all_circuits = circuits(m);
  const auto all_flats = flats(m);
  const auto all_chains = chains(m);
  const LaurentPoly chi = characteristic_polynomial(m);
  if (config.format == "text") {
    std::ostringstream out;
    if (input.arrangement) out << "field = " << input.arrangement->field().name() << "\n";
    out << "n = " << m.size() << "\nd = " << m.rank() << "\n";
    out << "bases (" << m.bases().size() << "):";
    for (Subset b : m.bases()) out << " " << format_subset(b);
    out << "\ncircuits (" << all_circuits.size() << "):";
    for (Subset c : all_circuits) out << " " << format_subset(c);
    out << "\nflats (" << all_flats.size() << "):";
    for (const Flat& f : all_flats) out << " " << format_subset(f.elements);
    out << "\nchains = " << all_chains.size() << "\n";
    out << "chi(L) = " << chi.to_string() << "\n";
    return out.str();
  }
  Json doc;
  if (input.arrangement) doc["field"] = input.arrangement->field().name();
  doc["n"] = m.size();
  doc["d"] = m.rank();
  doc["bases_count"] = m.bases().size();
  doc["bases"] = matroid_to_json(m)["bases"];
  Json circuit_list = Json::array();
  for (Subset c : all_circuits) circuit_list.push_back(subset_to_json(c));
  doc["circuits"] = circuit_list;
  Json flat_list = Json::array();
  for (const Flat& f : all_flats) {
    flat_list.push_back(Json{{"elements", subset_to_json(f.elements)}, {"rank", f.rank}});
  }
  doc["flats"] = flat_list;
  doc["chain_count"] = all_chains.size();
  doc["characteristic_polynomial"] = laurent_to_json(chi);
  doc["characteristic_polynomial_text"] = chi.to_string();
  return render(doc);
}

std::string zeta(const JobConfig& config, const ProblemInput& input, const WeightVector& u) {
  const Variant variant = parse_variant(config.variant);
  const ZetaSeries series = igusa_series(input.matroid, u, config.degree, variant, config.threads);
  std::optional<ZetaRational> closed;
  std::string rational_status = "ok";
  try {
    closed = igusa_rational(input.matroid, u, variant, std::min<std::int64_t>(config.degree, 8));
    if (!(expand(*closed, config.degree) == series)) {
      closed.reset();
      rational_status = "disabled: expansion disagrees with the lattice-point series";
    }
  } catch (const PreconditionError& e) {
    rational_status = std::string("disabled: ") + e.what();
  }
  if (config.format == "text") {
    std::ostringstream out;
    out << "variant: " << variant_name(variant) << "\nu: " << join(u) << "\n";
    for (std::size_t l = 0; l < series.coeffs.size(); ++l) {
      out << "T^" << l << ": " << series.coeffs[l].to_string() << "\n";
    }
    out << "rational: " << rational_status << "\n";
    if (closed) {
      for (const ZetaTerm& term : closed->terms) {
        out << "  chain [";
        for (std::size_t j = 0; j < term.chain.length(); ++j) {
          out << (j ? " < " : "") << format_subset(term.chain.flats[j]);
        }
        out << "]: (" << term.numerator.to_string() << ") T^" << term.t_exponent << " /";
        for (const auto& f : term.denominator) {
          out << " (1 - L^-" << f.l_exponent << " T^" << f.t_exponent << ")";
        }
        out << "\n";
      }
      if (config.normalize) {
        const ZetaFraction f = normalize(*closed);
        out << "normalized: (";
        bool first = true;
        for (std::size_t t = 0; t < f.numerator.size(); ++t) {
          if (f.numerator[t].is_zero()) continue;
          out << (first ? "" : " + ") << "(" << f.numerator[t].to_string() << ") T^" << t;
          first = false;
        }
        out << (first ? "0" : "") << ") /";
        for (const auto& c : f.denominator) {
          out << " (1 - L^-" << c.factor.l_exponent << " T^" << c.factor.t_exponent << ")^" << c.multiplicity;
        }
        out << "\n";
      }
    }
    return out.str();
  }
  Json doc;
  doc["variant"] = variant_name(variant);
  doc["u"] = u;
  doc["degree"] = config.degree;
  doc["series"] = series_to_json(series);
  doc["rational"] = closed ? rational_to_json(*closed) : Json(nullptr);
  doc["rational_status"] = rational_status;
  if (config.normalize) doc["normalized"] = closed ? fraction_to_json(normalize(*closed)) : Json(nullptr);
  return render(doc);
}

const Arrangement& require_arrangement(const ProblemInput& input, const std::string& command) {
  if (!input.arrangement) {
    throw PreconditionError("command '" + command +
                            "' needs a realization matrix; the input is an abstract matroid");
  }
  return *input.arrangement;
}

std::string dl(const JobConfig& config, const ProblemInput& input, const WeightVector& u) {
  const Arrangement& a = require_arrangement(input, "dl");
  const Variant variant = parse_variant(config.variant);
  std::vector<std::uint64_t> primes = config.primes;
  if (!a.field().is_rational()) {
    if (primes.empty()) primes.push_back(a.field().prime());
    for (std::uint64_t p : primes) {
      if (p != a.field().prime()) {
        throw PreconditionError("q = " + std::to_string(p) +
                                " differs from the field characteristic; extension fields are "
                                "not supported");
      }
    }
  } else if (primes.empty()) {
    throw PreconditionError("dl over Q needs --primes");
  }
  std::int64_t total_u = 0;
  for (std::int64_t ui : u) total_u += ui;
  Json results = Json::array();
  std::ostringstream text;
  text << "variant: " << variant_name(variant) << "\nu: " << join(u) << "\n";
  for (std::uint64_t p : primes) {
    const Arrangement ap = a.field().is_rational() ? reduce_mod_p(a, p) : a;
    const RationalSeries series = dl_pointcount_series(ap, u, config.degree, variant, config.threads);
    results.push_back(Json{{"q", p}, {"series", series_to_json(series)}});
    text << "q = " << p << "\n";
    for (std::size_t l = 0; l < series.coeffs.size(); ++l) {
      text << "  T^" << l << ": " << series.coeffs[l].get_str() << "\n";
    }
  }
  if (config.format == "text") return text.str();
  Json doc;
  doc["variant"] = variant_name(variant);
  doc["u"] = u;
  doc["degree"] = config.degree;
  doc["monodromy"] = Json{{"group", "mu_" + std::to_string(total_u)},
                          {"action", "scalar multiplication"},
                          {"used_in_counts", false}};
  doc["results"] = results;
  return render(doc);
}

std::string verify_command(const JobConfig& config, const ProblemInput& input,
                           const WeightVector& u, bool& passed) {
  const Arrangement& a = require_arrangement(input, "verify");
  const VerifyReport report = verify(a, u, config.primes, config.degree, config.budget, config.threads);
  passed = report.pass();
  if (config.format == "text") {
    std::ostringstream out;
    out << (passed ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks)\n";
    for (const auto& c : report.checks) {
      out << (c.pass ? "pass" : "FAIL") << " p=" << c.p << " l=" << c.level << " "
          << jet_variant_name(c.variant) << " expected=" << c.expected.get_str()
          << " actual=" << c.actual.get_str() << "\n";
    }
    return out.str();
  }
  return render(verify_to_json(report));
}

bool payload_passed(const JobConfig& config, const std::string& payload) {
  if (config.format == "text") return payload.rfind("PASS", 0) == 0;
  try {
    return Json::parse(payload).at("pass").get<bool>();
  } catch (const std::exception&) {
    return false;
  }
}

std::string canonical_job(const JobConfig& config, const ProblemInput& input, const WeightVector& u) {
  Json job;
  job["input"] = input_to_json(input);
  job["command"] = config.command;
  job["degree"] = config.degree;
  job["u"] = u;
  job["variant"] = config.variant;
  job["primes"] = config.primes;
  job["budget"] = config.budget;
  job["format"] = config.format;
  job["normalize"] = config.normalize;
  return job.dump();
}

int execute(const JobConfig& config, std::ostream& out, std::ostream& err) {
  if (config.degree < 0) throw PreconditionError("--degree must be nonnegative");
  if (config.format != "json" && config.format != "text") {
    throw ParseError("--format must be json or text");
  }
  parse_variant(config.variant);
  for (std::uint64_t p : config.primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  }
  const ProblemInput input = parse_input(read_file(config.input_path));
  WeightVector u = config.u.empty() ? unit_weight(input.matroid.size()) : WeightVector(config.u);
  check_exponent_vector(input.matroid, u);

  std::optional<ResultCache> cache;
  std::string key;
  if (!config.cache_dir.empty()) {
    cache.emplace(config.cache_dir, err);
    key = ResultCache::make_key(canonical_job(config, input, u));
    if (auto hit = cache->load(key)) {
      err << "cache hit " << key << "\n";
      write_output(config, *hit, out);
      if (config.command == "verify" && !payload_passed(config, *hit)) return kExitMismatch;
      return kExitOk;
    }
  }

  std::string payload;
  bool passed = true;
  if (config.command == "inspect") {
    payload = inspect(config, input);
  } else if (config.command == "zeta") {
    payload = zeta(config, input, u);
  } else if (config.command == "dl") {
    payload = dl(config, input, u);
  } else if (config.command == "verify") {
    payload = verify_command(config, input, u, passed);
  } else {
    throw ParseError("unknown command '" + config.command + "'");
  }
  if (cache) cache->store(key, payload);
  write_output(config, payload, out);
  return passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic and p-adic zeta functions of hyperplane arrangements", "zeta-arr"};
  app.require_subcommand(1);
  JobConfig config;
  std::string u_text;
  std::string primes_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "arrangement or matroid JSON")->required();
    sub->add_option("--degree", config.degree, "truncation degree D")->capture_default_str();
    sub->add_option("--u", u_text, "exponent vector, e.g. 1,2,1 (default all ones)");
    sub->add_option("--variant", config.variant, "global or origin")->capture_default_str();
    sub->add_option("--primes", primes_text, "comma separated primes");
    sub->add_option("--budget", config.budget, "maximum number of jets per count")
        ->capture_default_str();
    sub->add_option("--cache", config.cache_dir, "result cache directory");
    sub->add_option("--format", config.format, "json or text")->capture_default_str();
    sub->add_option("--output", config.output_path, "write the result to this file");
    sub->add_option("--threads", config.threads, "worker threads")->capture_default_str();
    if (sub->get_name() == "zeta") {
      sub->add_flag("--normalize", config.normalize, "also give the closed form as one fraction");
    }
  };
  for (const char* name : {"inspect", "zeta", "dl", "verify"}) {
    add_common(app.add_subcommand(name));
  }
  app.get_subcommand("inspect")->description("matroid data and characteristic polynomial");
  app.get_subcommand("zeta")->description("motivic Igusa zeta series and closed form");
  app.get_subcommand("dl")->description("point-count specialization of the Denef-Loeser zeta");
  app.get_subcommand("verify")->description("compare the formulas with jet counts");

  try {
    app.parse(argc, argv);
    config.command = app.get_subcommands().front()->get_name();
    config.u = split_list<std::int64_t>(u_text, "--u");
    config.primes = split_list<std::uint64_t>(primes_text, "--primes");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  return run_job(config, out, err);
}

}  // namespace zeta_arr
