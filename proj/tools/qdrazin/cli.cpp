#include "qdrazin/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qdrazin/cramer.hpp"
#include "qdrazin/drazin.hpp"
#include "qdrazin/errors.hpp"
#include "qdrazin/ncdet.hpp"
#include "qdrazin/oracle.hpp"

namespace qdrazin::cli {
namespace {

// A required matrix is absent, or a flag does not apply to the command.
class UsageError : public Error {
 public:
  using Error::Error;
};

const std::array<std::string, 8> kCommands = {"det",      "rank",     "index",     "drazin",
                                              "solve-ax", "solve-xa", "solve-axb", "verify"};

QMatrix require_matrix(const Json& input, const char* name, const std::string& command) {
  if (!input.contains(name)) {
    throw UsageError(command + " needs matrix \"" + name + "\"");
  }
  try {
    return matrix_from_json(input.at(name));
  } catch (const ParseError& e) {
    throw ParseError(std::string("matrix \"") + name + "\": " + e.what());
  }
}

Json factor_meta(const DrazinFactors& f) {
  return {{"k", f.index}, {"r", f.rank}, {"d_r", rational_to_json(f.denominator)}};
}

Json identities_json(const DrazinAxiomReport& report) {
  return {{"power_left", report.power_left},
          {"reflexive", report.reflexive},
          {"commuting", report.commuting},
          {"power_right", report.power_right}};
}

const char* self_check_status(const JobOptions& options) {
  return options.self_check ? "passed" : "skipped";
}

void add_residual(Json& meta, const QMatrix& residual) {
  meta["residual"] = matrix_to_json(residual);
  meta["residual_zero"] = residual.is_zero();
}

Json report(const std::string& command, Json result, Json meta) {
  return {{"command", command}, {"result", std::move(result)}, {"meta", std::move(meta)}};
}

Json run_det(const Json& input) {
  const QMatrix a = require_matrix(input, "A", "det");
  if (!a.is_square()) throw DimensionMismatch("det needs a square matrix");
  if (is_hermitian(a)) {
    return report("det", rational_to_json(hdet(a)), {{"hermitian", true}});
  }
  if (a.rows() > kMaxDeterminantSize) {
    throw SizeCapExceeded("order " + std::to_string(a.rows()) + " exceeds the determinant cap");
  }
  Json rows = Json::array();
  Json cols = Json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    rows.push_back(quaternion_to_json(rdet(a, i)));
    cols.push_back(quaternion_to_json(cdet(a, i)));
  }
  return report("det", {{"rdet", std::move(rows)}, {"cdet", std::move(cols)}},
                {{"hermitian", false}});
}

Json run_rank(const Json& input) {
  const QMatrix a = require_matrix(input, "A", "rank");
  if (a.is_square() && is_hermitian(a)) {
    return report("rank", rank_pm(a), {{"method", "principal-minors"}});
  }
  return report("rank", embedding_rank(a), {{"method", "complex-embedding"}});
}

Json run_index(const Json& input) {
  const DrazinFactors f = drazin_factors(require_matrix(input, "A", "index"));
  return report("index", f.index, {{"r", f.rank}});
}

Json run_drazin(const Json& input, const JobOptions& options) {
  const QMatrix a = require_matrix(input, "A", "drazin");
  const DrazinFactors f = drazin_factors(a);
  const DrazinReport d = drazin_inverse(a, {options.self_check});
  Json meta = factor_meta(f);
  const DrazinAxiomReport identities = check_drazin_axioms(a, d.inverse, f.index);
  meta["identities"] = identities_json(identities);
  meta["identities_hold"] = identities.all();
  meta["self_check"] = self_check_status(options);
  if (options.lambda_sweep) {
    const std::array<double, 3> lambdas = {1e-2, 1e-4, 1e-6};
    const std::vector<LimitSample> samples = limit_check(a, lambdas);
    Json sweep = Json::array();
    for (const LimitSample& s : samples) {
      sweep.push_back({{"lambda", s.lambda},
                       {"residual", s.residual()},
                       {"relative_residual", s.relative_residual()}});
    }
    meta["lambda_sweep"] = std::move(sweep);
    meta["lambda_sweep_decreasing"] = residuals_decreasing(samples, true);
  }
  return report("drazin", matrix_to_json(d.inverse), std::move(meta));
}

Json run_solve_ax(const Json& input, const JobOptions& options) {
  const QMatrix a = require_matrix(input, "A", "solve-ax");
  const QMatrix d = require_matrix(input, "D", "solve-ax");
  const QMatrix x = solve_ax(a, d, {options.self_check});
  Json meta = factor_meta(drazin_factors(a));
  add_residual(meta, mat_mul(a, x) - d);
  meta["self_check"] = self_check_status(options);
  return report("solve-ax", matrix_to_json(x), std::move(meta));
}

Json run_solve_xa(const Json& input, const JobOptions& options) {
  const QMatrix a = require_matrix(input, "A", "solve-xa");
  const QMatrix d = require_matrix(input, "D", "solve-xa");
  const QMatrix x = solve_xa(a, d, {options.self_check});
  Json meta = factor_meta(drazin_factors(a));
  add_residual(meta, mat_mul(x, a) - d);
  meta["self_check"] = self_check_status(options);
  return report("solve-xa", matrix_to_json(x), std::move(meta));
}

Json run_solve_axb(const Json& input, const JobOptions& options) {
  const QMatrix a = require_matrix(input, "A", "solve-axb");
  const QMatrix b = require_matrix(input, "B", "solve-axb");
  const QMatrix d = require_matrix(input, "D", "solve-axb");
  const AxbSolution sol = solve_axb_detailed(a, d, b, {options.self_check});
  auto summary = [](const CoefficientSummary& s) {
    return Json{{"k", s.index}, {"r", s.rank}, {"d_r", rational_to_json(s.denominator)}};
  };
  Json meta = {{"A", summary(sol.a)},
               {"B", summary(sol.b)},
               {"denominator", rational_to_json(sol.a.denominator * sol.b.denominator)},
               {"d_tilde", matrix_to_json(sol.d_tilde)},
               {"d_b", matrix_to_json(sol.d_b)}};
  add_residual(meta, mat_mul(mat_mul(a, sol.x), b) - d);
  meta["self_check"] = self_check_status(options);
  return report("solve-axb", matrix_to_json(sol.x), std::move(meta));
}

Json run_verify(const Json& input, const JobOptions& options) {
  const QMatrix a = require_matrix(input, "A", "verify");
  const DrazinFactors f = drazin_factors(a);
  const bool supplied = input.contains("X");
  const QMatrix x =
      supplied ? require_matrix(input, "X", "verify") : drazin_inverse(a, {options.self_check}).inverse;
  if (x.rows() != a.rows() || x.cols() != a.cols()) {
    throw DimensionMismatch("X must have the shape of A");
  }
  const DrazinAxiomReport identities = check_drazin_axioms(a, x, f.index);
  Json result = identities_json(identities);
  result["all"] = identities.all();
  Json meta = factor_meta(f);
  meta["candidate"] = supplied ? "input" : "computed";
  return report("verify", std::move(result), std::move(meta));
}

// Pretty form: nested "key: value" lines, matrices one row per line.
bool looks_like_matrix(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") &&
         j.contains("data");
}

bool looks_like_quaternion(const Json& j) {
  return j.is_array() && j.size() == 4 &&
         std::all_of(j.begin(), j.end(), [](const Json& c) { return c.is_primitive(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (looks_like_quaternion(j)) {
    try {
      return quaternion_from_json(j).to_string();
    } catch (const ParseError&) {
    }
  }
  return j.dump();
}

void pretty(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (looks_like_matrix(j)) {
    const QMatrix m = matrix_from_json(j);
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      os << pad << "[";
      for (std::size_t c = 1; c <= m.cols(); ++c) {
        os << (c > 1 ? ", " : "") << m(i, c).to_string();
      }
      os << "]\n";
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const bool nested = value.is_object() || (value.is_array() && !looks_like_quaternion(value));
      if (nested) {
        os << pad << key << ":\n";
        pretty(os, value, indent + 2);
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const Json& item : j) {
      if (item.is_object()) {
        os << pad << "-\n";
        pretty(os, item, indent + 2);
      } else {
        os << pad << "- " << scalar_text(item) << "\n";
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const Json::exception*>(&e)) {
    return kParseFailure;
  }
  if (dynamic_cast<const SizeCapExceeded*>(&e)) return kCapExceeded;
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const NotHermitian*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e) ||
      dynamic_cast<const InvalidOrder*>(&e) || dynamic_cast<const Singular*>(&e) ||
      dynamic_cast<const IndexTooLarge*>(&e)) {
    return kValidationFailure;
  }
  return kInternalFailure;
}

}  // namespace

Json run_job(const std::string& command, const Json& input, const JobOptions& options) {
  if (!input.is_object()) throw ParseError("input must be a JSON object of named matrices");
  if (options.lambda_sweep && command != "drazin") {
    throw UsageError("--lambda-sweep applies to the drazin command only");
  }
  if (command == "det") return run_det(input);
  if (command == "rank") return run_rank(input);
  if (command == "index") return run_index(input);
  if (command == "drazin") return run_drazin(input, options);
  if (command == "solve-ax") return run_solve_ax(input, options);
  if (command == "solve-xa") return run_solve_xa(input, options);
  if (command == "solve-axb") return run_solve_axb(input, options);
  if (command == "verify") return run_verify(input, options);
  throw UsageError("unknown command \"" + command + "\"");
}

std::string render(const Json& report, Format format) {
  if (format == Format::kJson) return report.dump(2) + "\n";
  std::ostringstream os;
  pretty(os, report, 0);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quaternion determinants, Drazin inverses and Cramer solvers"};
  app.name("qdrazin");
  std::string command;
  std::string input_path = "-";
  std::string output_path = "stdout";
  Format format = Format::kJson;
  JobOptions options;
  bool fast = false;

  app.add_option("command", command, "det | rank | index | drazin | solve-ax | solve-xa | "
                                     "solve-axb | verify")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(kCommands.begin(), kCommands.end())));
  app.add_option("-i,--input", input_path, "input JSON document, '-' for stdin");
  app.add_option("-o,--output", output_path, "output path or 'stdout'");
  app.add_option("-f,--format", format, "json | pretty")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::kJson}, {"pretty", Format::kPretty}}));
  app.add_flag("--fast", fast, "skip the dual-formula and identity self-checks");
  app.add_flag("--lambda-sweep", options.lambda_sweep,
               "drazin only: compare against (lambda I + A^(k+1))^-1 A^k for small lambda");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
  options.format = format;
  options.self_check = !fast;

  try {
    Json input;
    if (input_path == "-") {
      input = Json::parse(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) throw ParseError("cannot open input file " + input_path);
      input = Json::parse(in);
    }
    const Json result = run_job(command, input, options);
    const std::string text = render(result, options.format);
    if (output_path == "stdout" || output_path == "-") {
      out << text;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + output_path);
      file << text;
    }
    if (command == "verify" && !result["result"]["all"].get<bool>()) return kVerificationFailed;
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace qdrazin::cli
