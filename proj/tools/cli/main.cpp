#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jspec/criteria.hpp"
#include "jspec/inverse.hpp"
#include "jspec/structure.hpp"
#include "jspec/trace.hpp"
#include "jspec_io.hpp"

#ifndef JSPEC_VERSION
#define JSPEC_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace jspec;
using io::json;

namespace {

constexpr double kDefaultTol = 1e-7;

double default_tolerance() {
  if (const char* env = std::getenv("JSPEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw InputError("InvalidEnvironment", std::string("JSPEC_TOL is not a positive number: ") + env);
    return v;
  }
  return kDefaultTol;
}

struct Loaded {
  PeriodicOperator op;
  std::string hash;
};

Loaded load_operator(const std::string& path) {
  const std::string text = io::read_file(path);
  return {io::operator_from(io::parse_json(text, path)), io::fnv1a_hex(text)};
}

json meta(const std::string& command, const json& config, const std::string& hash) {
  json m;
  m["tool"] = "jspec";
  m["version"] = JSPEC_VERSION;
  m["command"] = command;
  m["config"] = config;
  m["input_hash"] = "fnv1a64:" + hash;
  return m;
}

// "re" or "re,im".
cplx parse_complex_arg(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    std::size_t ua = 0, ub = 0;
    const double re = std::stod(a, &ua);
    const double im = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw ParseError("cannot parse complex number \"" + s + "\" (use re or re,im)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral structure of periodic non-Hermitian Jacobi operators"};
  app.set_version_flag("--version", JSPEC_VERSION);
  app.require_subcommand(1);

  std::string op_path;
  std::optional<double> tol_flag;

  auto* disc_cmd = app.add_subcommand("discriminant", "Print P, the products a and c, and the curve");
  disc_cmd->add_option("operator", op_path, "Operator JSON file")->required();

  auto* struct_cmd = app.add_subcommand("structure", "Stationary points and petal/bouquet/flower counts");
  struct_cmd->add_option("operator", op_path, "Operator JSON file")->required();
  struct_cmd->add_option("--tol", tol_flag, "Location tolerance (default $JSPEC_TOL or 1e-7)");

  int samples = 0;
  double residual_tol = 1e-8;
  int max_depth = 40;
  std::string out_dir = ".";
  bool svg = false;
  auto* trace_cmd = app.add_subcommand("trace", "Trace σ(J) and cross-check the counts");
  trace_cmd->add_option("operator", op_path, "Operator JSON file")->required();
  trace_cmd->add_option("--samples", samples, "Uniform θ samples (default 256·N)");
  trace_cmd->add_option("--tol", tol_flag, "Location tolerance (default $JSPEC_TOL or 1e-7)");
  trace_cmd->add_option("--residual-tol", residual_tol, "Per-sample residual tolerance");
  trace_cmd->add_option("--max-depth", max_depth, "Bisection depth limit");
  trace_cmd->add_option("--out", out_dir, "Directory for trace.csv and trace.svg");
  trace_cmd->add_flag("--svg", svg, "Also write trace.svg");

  bool want_real = false, want_interval = false, want_line = false;
  std::vector<std::string> segment_args;
  auto* check_cmd = app.add_subcommand("check", "Real, interval, line and segment criteria");
  check_cmd->add_option("operator", op_path, "Operator JSON file")->required();
  check_cmd->add_flag("--real", want_real);
  check_cmd->add_flag("--interval", want_interval);
  check_cmd->add_flag("--line", want_line);
  check_cmd->add_option("--segment", segment_args, "Endpoints α β, each re or re,im")->expected(2);
  check_cmd->add_option("--tol", tol_flag, "Criteria tolerance (default $JSPEC_TOL or 1e-7)");

  bool zero_c = false;
  std::string target_path, a_path, c_path;
  int attempts = 32;
  std::uint64_t seed = 0x6a5eedULL;
  auto* construct_cmd = app.add_subcommand("construct", "Build an operator with a prescribed discriminant");
  construct_cmd->add_flag("--zero-c", zero_c, "Use c = 0 and b = zeros of the target");
  construct_cmd->add_option("--target", target_path, "Target polynomial JSON")->required();
  construct_cmd->add_option("--a", a_path, "a sequence JSON")->required();
  construct_cmd->add_option("--c", c_path, "c sequence JSON (required without --zero-c)");
  construct_cmd->add_option("--attempts", attempts, "Newton multi-start attempts");
  construct_cmd->add_option("--seed", seed, "Multi-start seed");

  int lap_n = 0;
  auto* lap_cmd = app.add_subcommand("laplacian", "Emit the period-N free Laplacian");
  lap_cmd->add_option("--n", lap_n, "Period N")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"]["kind"] = "UsageError";
    err["error"]["message"] = e.what();
    std::cerr << io::dump(err);
    return 1;
  }

  try {
    const double tol = tol_flag ? *tol_flag : default_tolerance();
    if (!(tol > 0.0)) throw InputError("InvalidArgument", "--tol must be positive");

    if (*disc_cmd) {
      const auto in = load_operator(op_path);
      json out;
      out["meta"] = meta("discriminant", json::object(), in.hash);
      out["discriminant"] = io::discriminant_to(discriminant(in.op));
      std::cout << io::dump(out);
      return 0;
    }

    if (*struct_cmd) {
      const auto in = load_operator(op_path);
      StructureOptions so;
      so.locate_tol = tol;
      json cfg;
      cfg["tol"] = tol;
      json out;
      out["meta"] = meta("structure", cfg, in.hash);
      const auto disc = discriminant(in.op);
      out["discriminant"] = io::discriminant_to(disc);
      out["structure"] = io::structure_to(structure_report(disc, so));
      std::cout << io::dump(out);
      return 0;
    }

    if (*trace_cmd) {
      const auto in = load_operator(op_path);
      const auto disc = discriminant(in.op);
      StructureOptions so;
      so.locate_tol = tol;
      TraceOptions to;
      to.min_samples = samples;
      to.tol = residual_tol;
      to.max_depth = max_depth;
      json cfg;
      cfg["tol"] = tol;
      cfg["samples"] = samples > 0 ? samples : 256 * in.op.period();
      cfg["residual_tol"] = residual_tol;
      cfg["max_depth"] = max_depth;
      cfg["svg"] = svg;
      json out;
      out["meta"] = meta("trace", cfg, in.hash);
      fs::create_directories(out_dir);
      const fs::path csv_path = fs::path(out_dir) / "trace.csv";
      json files = json::array();
      if (disc.degenerate()) {
        const auto rep = structure_report(disc, so);
        io::write_file(csv_path, export_point_csv(rep.point_spectrum));
        files.push_back(csv_path.string());
        out["structure"] = io::structure_to(rep);
      } else {
        const auto st = trace_spectrum(disc, to, so);
        io::write_file(csv_path, export_csv(st.trace));
        files.push_back(csv_path.string());
        if (svg) {
          const fs::path svg_path = fs::path(out_dir) / "trace.svg";
          io::write_file(svg_path, export_svg(st.trace, disc, st.structure.stationary));
          files.push_back(svg_path.string());
        }
        out["structure"] = io::structure_to(st.structure);
        out["trace"] = io::trace_summary_to(st);
      }
      out["files"] = files;
      std::cout << io::dump(out);
      return 0;
    }

    if (*check_cmd) {
      const auto in = load_operator(op_path);
      const auto disc = discriminant(in.op);
      const bool any = want_real || want_interval || want_line || !segment_args.empty();
      if (!any) want_real = want_interval = want_line = true;
      json cfg;
      cfg["tol"] = tol;
      cfg["real"] = want_real;
      cfg["interval"] = want_interval;
      cfg["line"] = want_line;
      cfg["segment"] = segment_args;
      if (disc.degenerate()) throw DegenerateCurve("criteria need a nondegenerate curve (a, c not both 0)");
      CriteriaReport rep = check_real(disc, tol);
      std::optional<IntervalResult> iv;
      if (want_interval) {
        iv = check_interval(disc, tol);
        rep.interval = iv->interval;
      }
      if (want_line) rep.line = check_line(disc, tol);
      json out;
      out["meta"] = meta("check", cfg, in.hash);
      out["criteria"] = io::criteria_to(rep, iv ? &*iv : nullptr);
      if (want_line && !rep.line) out["criteria"]["line"] = nullptr;
      if (!segment_args.empty()) {
        const cplx alpha = parse_complex_arg(segment_args[0]);
        const cplx beta = parse_complex_arg(segment_args[1]);
        const bool ok = check_segment(disc, alpha, beta, tol);
        json seg;
        seg["alpha"] = io::complex_to(alpha);
        seg["beta"] = io::complex_to(beta);
        seg["holds"] = ok;
        out["criteria"]["segment"] = seg;
      }
      std::cout << io::dump(out);
      return 0;
    }

    if (*construct_cmd) {
      const std::string a_text = io::read_file(a_path);
      auto a = io::sequence_from(io::parse_json(a_text, a_path), "a");
      const std::string t_text = io::read_file(target_path);
      const Polynomial target =
          io::target_from(io::parse_json(t_text, target_path), static_cast<int>(a.size()));
      std::string c_text;
      std::vector<cplx> c;
      if (!c_path.empty()) {
        c_text = io::read_file(c_path);
        c = io::sequence_from(io::parse_json(c_text, c_path), "c");
      }
      json cfg;
      cfg["zero_c"] = zero_c;
      const std::string hash = io::fnv1a_hex(t_text + '\0' + a_text + '\0' + c_text);
      PeriodicOperator op;
      if (zero_c) {
        op = construct_zero_c(target, a);
      } else {
        if (c_path.empty()) throw InputError("InvalidArgument", "--c is required without --zero-c");
        SolveOptions so;
        so.attempts = attempts;
        so.seed = seed;
        cfg["attempts"] = attempts;
        cfg["seed"] = seed;
        const auto res = solve_b(target, a, c, so);
        if (!res) throw NumericalError("SolveFailed", "no multi-start attempt reached the tolerance");
        op = res->op;
        cfg["solved_attempt"] = res->attempt;
        cfg["residual"] = res->residual;
      }
      json out = io::operator_to(op);
      out["meta"] = meta("construct", cfg, hash);
      std::cout << io::dump(out);
      return 0;
    }

    if (*lap_cmd) {
      json cfg;
      cfg["n"] = lap_n;
      json out = io::operator_to(laplacian(lap_n));
      out["meta"] = meta("laplacian", cfg, io::fnv1a_hex(std::to_string(lap_n)));
      std::cout << io::dump(out);
      return 0;
    }
  } catch (const NumericalError& e) {
    std::cerr << io::dump(io::error_to(e));
    return 2;
  } catch (const std::exception& e) {
    std::cerr << io::dump(io::error_to(e));
    return 1;
  }
  return 1;
}
