#include "curvedisc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "curvedisc/curvedisc.hpp"
#include "curvedisc/macaulay.hpp"
#include "curvedisc/smooth.hpp"

namespace curvedisc::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::pair<int, int>> kDefaultGrid{{2, 2}, {3, 2}, {2, 3}, {3, 3}};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return trim(buf.str());
}

RingSpec resolve_ring(const JobConfig& config) {
  RingSpec ring = RingSpec::parse(config.ring);
  if (!config.param) return ring;
  if (!ring.is_param()) throw Error(ErrorCode::InvalidRing, "--param needs the ring zt");
  return RingSpec::int_param(*config.param);
}

void require_arity(const JobConfig& config, std::size_t lo, std::size_t hi, const char* what) {
  if (config.inputs.size() < lo || config.inputs.size() > hi)
    throw Error(ErrorCode::ArityMismatch, std::string(config.command) + " takes " + what);
}

std::vector<HomPoly> parse_inputs(const JobConfig& config, const RingSpec& ring, int nvars) {
  std::vector<HomPoly> polys;
  for (const auto& arg : config.inputs) polys.push_back(parse(read_input(arg), ring, nvars));
  return polys;
}

void dump(const JobConfig& config, const std::string& name, std::span<const HomPoly> system) {
  for (const auto& f : system)
    if (f.degree() < 1 || f.is_zero()) return;
  std::filesystem::create_directories(config.dump_dir);
  const std::filesystem::path dir(config.dump_dir);
  std::ofstream m(dir / (name + "_matrix.csv")), e(dir / (name + "_extraneous.csv"));
  write_macaulay_csv(macaulay_data(system), m, e);
}

// Content, then the largest power of the parameter, then the rest.
std::string factored_text(const Scalar& value) {
  if (!value.ring().is_param() || value.param().is_constant()) return value.to_string();
  const std::string& var = value.ring().param();
  const ParamPoly primitive = value.param().primitive_part();
  std::size_t shift = 0;
  while (primitive.coeff(shift) == 0) ++shift;
  const std::vector<Integer>& c = primitive.coeffs();
  const ParamPoly rest(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(shift), c.end()));
  std::vector<std::string> factors;
  const Integer content = value.param().content();
  if (content != 1) factors.push_back(content.get_str());
  if (shift == 1) factors.push_back(var);
  if (shift > 1) factors.push_back(var + "^" + std::to_string(shift));
  if (!(rest == ParamPoly(Integer(1)))) factors.push_back("(" + rest.to_string(var) + ")");
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " * ") + f;
  return out;
}

json trace_json(const Trace& trace) {
  json steps = json::array();
  for (const auto& s : trace) steps.push_back({{"stage", s.stage}, {"detail", s.detail}});
  return steps;
}

struct Report {
  json fields = json::object();  // command-specific extras
  std::optional<DiscOutcome> outcome;
  std::vector<std::string> text_lines;
};

Report compute(const JobConfig& config, const RingSpec& ring, std::vector<HomPoly>& polys) {
  const FallbackOptions options{config.seed, config.retries, config.perturbation};
  Report report;
  const std::string& cmd = config.command;
  if (cmd == "resultant") {
    require_arity(config, 1, 4, "n forms in n variables (1 <= n <= 4)");
    const int n = static_cast<int>(config.inputs.size());
    if (config.nvars && config.nvars != n) throw Error(ErrorCode::ArityMismatch, "resultant needs n forms in n variables");
    polys = parse_inputs(config, ring, n);
    DiscOutcome out;
    out.value = resultant(polys, options, &out.trace);
    if (config.dump_matrices) dump(config, "resultant", polys);
    report.outcome = out;
  } else if (cmd == "disc-hyp") {
    require_arity(config, 1, 1, "one form");
    polys = parse_inputs(config, ring, config.nvars);
    report.outcome = disc_hyp(polys[0], options);
    if (config.dump_matrices) {
      std::vector<HomPoly> grad;
      for (int j = 0; j < polys[0].nvars(); ++j) grad.push_back(partial(polys[0], j));
      dump(config, "gradient", grad);
    }
  } else if (cmd == "disc-points") {
    require_arity(config, 2, 3, "two forms in 3 variables or three forms in 4 variables");
    const bool plane = config.inputs.size() == 2;
    polys = parse_inputs(config, ring, plane ? 3 : 4);
    report.outcome = plane ? disc_pts_p2(polys[0], polys[1], options) : disc_pts_p3(polys[0], polys[1], polys[2], options);
    if (config.dump_matrices) {
      std::vector<HomPoly> system = polys;
      if (plane) {
        system.push_back(jac_minor(polys[0], polys[1], 1, 2));
      } else {
        std::vector<HomPoly> rows = polys;
        rows.push_back(HomPoly::variable(ring, 4, 0));
        system.push_back(jac_det(rows));
      }
      dump(config, "points", system);
    }
  } else if (cmd == "disc-curve") {
    require_arity(config, 2, 2, "two forms in 4 variables");
    polys = parse_inputs(config, ring, 4);
    report.outcome = disc_curve(polys[0], polys[1], options);
    if (config.dump_matrices) {
      const std::vector<HomPoly> system{polys[0], polys[1], jac_minor(polys[0], polys[1], 0, 1),
                                        jac_minor(polys[0], polys[1], 1, 2)};
      dump(config, "curve", system);
    }
  } else if (cmd == "smooth") {
    require_arity(config, 2, 2, "two forms in 4 variables");
    polys = parse_inputs(config, ring, 4);
    const SmoothVerdict verdict = is_smooth(polys[0], polys[1], options);
    report.outcome = verdict.discriminant;
    report.fields["smooth"] = verdict.smooth;
    report.text_lines.push_back(std::string("smooth: ") + (verdict.smooth ? "true" : "false"));
    if (ring.is_mod_p() && ring.modulus() <= kMaxScanPrime) {
      const SingularReport scan = find_singular_points(polys[0], polys[1]);
      report.fields["singular_points"] = scan.points;
      for (const auto& pt : scan.points)
        report.text_lines.push_back("singular point: (" + std::to_string(pt[0]) + ":" + std::to_string(pt[1]) + ":" +
                                    std::to_string(pt[2]) + ":" + std::to_string(pt[3]) + ")");
    } else if (ring.is_integers()) {
      const BadPrimes bad = singular_primes(polys[0], polys[1], config.prime_bound, options);
      report.fields["identically_singular"] = bad.identically_singular;
      report.fields["bad_primes"] = bad.primes;
      std::string line = "bad primes <= " + std::to_string(config.prime_bound) + ":";
      for (auto p : bad.primes) line += " " + std::to_string(p);
      report.text_lines.push_back(line);
    }
  } else {
    throw Error(ErrorCode::ArityMismatch, "unknown command " + cmd);
  }
  return report;
}

int run_bench(const JobConfig& config, std::ostream& out) {
  const auto grid = config.grid ? parse_grid(*config.grid) : kDefaultGrid;
  const auto start = Clock::now();
  const std::vector<BenchRow> rows = bench(grid, config.seed);
  if (config.output == OutputFormat::Json) {
    json j;
    j["command"] = "bench";
    j["ring"] = "z";
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"d1", r.d1}, {"d2", r.d2}, {"critical_degree", r.critical_degree},
                           {"matrix_size", r.matrix_size}, {"timing_ms", r.millis}});
    j["timing_ms"] = millis_since(start);
    out << j.dump(2) << "\n";
  } else {
    out << "d1 d2 nu size ms\n";
    for (const auto& r : rows)
      out << r.d1 << " " << r.d2 << " " << r.critical_degree << " " << r.matrix_size << " " << r.millis << "\n";
  }
  return kExitOk;
}

}  // namespace

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<std::pair<int, int>> grid;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) continue;
    const auto x = cell.find('x');
    if (x == std::string::npos) throw Error(ErrorCode::SyntaxError, "grid cell '" + cell + "' is not d1xd2");
    try {
      grid.emplace_back(std::stoi(cell.substr(0, x)), std::stoi(cell.substr(x + 1)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::SyntaxError, "grid cell '" + cell + "' is not d1xd2");
    }
  }
  return grid;
}

std::vector<BenchRow> bench(const std::vector<std::pair<int, int>>& grid, std::uint64_t seed) {
  const RingSpec z = RingSpec::integers();
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (const auto& [d1, d2] : grid) {
    const HomPoly g1 = random_poly(z, 4, d1, rng, 5), g2 = random_poly(z, 4, d2, rng, 5);
    BenchRow row{d1, d2};
    const std::vector<HomPoly> numerator{g1, g2, jac_minor(g1, g2, 0, 1), jac_minor(g1, g2, 1, 2)};
    const MacaulayData data = macaulay_data(numerator);
    row.critical_degree = data.critical_degree;
    row.matrix_size = data.row_monomials.size();
    const auto start = Clock::now();
    disc_curve(g1, g2);
    row.millis = millis_since(start);
    rows.push_back(row);
  }
  return rows;
}

std::pair<std::optional<JobConfig>, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                                   std::ostream& err) {
  JobConfig config;
  CLI::App app{"Exact resultants and discriminants of space curves"};
  std::string output = "text";
  std::string param, grid;
  app.add_option("command", config.command, "resultant | disc-hyp | disc-points | disc-curve | smooth | bench")
      ->required()
      ->check(CLI::IsMember({"resultant", "disc-hyp", "disc-points", "disc-curve", "smooth", "bench"}));
  app.add_option("inputs", config.inputs, "polynomials, or files holding one polynomial each");
  app.add_option("--ring", config.ring, "z, q, zmod:<p>, zt or zt:<name>");
  app.add_option("--param", param, "name of the Z[t] parameter");
  app.add_option("--nvars", config.nvars, "number of variables (default: per command)");
  app.add_option("--seed", config.seed, "fallback and benchmark seed");
  app.add_option("--retries", config.retries, "unimodular retries before the next fallback");
  bool no_perturbation = false;
  app.add_flag("--no-perturbation", no_perturbation, "stop the fallback ladder before t-perturbation");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--prime-bound", config.prime_bound, "largest prime reported by smooth over z");
  app.add_flag("--dump-matrices", config.dump_matrices, "write Macaulay matrices as CSV");
  app.add_option("--dump-dir", config.dump_dir, "directory for --dump-matrices");
  app.add_flag("--factored", config.factored, "print Z[t] values as content * primitive part");
  auto* grid_opt = app.add_option("--grid", grid, "bench cells, e.g. 2x2,3x2");
  auto* param_opt = app.get_option("--param");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInputError};
  }
  config.perturbation = !no_perturbation;
  config.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (param_opt->count()) config.param = param;
  if (grid_opt->count()) config.grid = grid;
  return {config, kExitOk};
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "bench") return run_bench(config, out);
    const RingSpec ring = resolve_ring(config);
    const auto start = Clock::now();
    std::vector<HomPoly> polys;
    Report report = compute(config, ring, polys);
    const double elapsed = millis_since(start);
    const Scalar& value = report.outcome->value;
    if (config.output == OutputFormat::Json) {
      json j;
      j["command"] = config.command;
      j["ring"] = ring.to_string();
      j["inputs_echo"] = json::array();
      for (const auto& f : polys) j["inputs_echo"].push_back(f.to_string());
      j["value"] = value.to_string();
      if (config.factored) j["factored"] = factored_text(value);
      for (const auto& [k, v] : report.fields.items()) j[k] = v;
      j["trace"] = trace_json(report.outcome->trace);
      j["timing_ms"] = elapsed;
      out << j.dump(2) << "\n";
    } else {
      out << (config.factored ? factored_text(value) : value.to_string()) << "\n";
      for (const auto& line : report.text_lines) out << line << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::DegenerateSpecialization ? kExitDegenerate : kExitInputError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace curvedisc::cli
