// Command-line front end: graph I/O, method selection, experiment
// orchestration, CSV/JSON emission. Exit codes: 0 success, 1 identity
// failure, 2 parse error, 3 domain error.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ihara/canonical.hpp"
#include "ihara/coloring.hpp"
#include "ihara/generators.hpp"
#include "ihara/io.hpp"
#include "ihara/limits.hpp"
#include "ihara/paths.hpp"
#include "ihara/periodic.hpp"
#include "ihara/rng.hpp"
#include "ihara/series.hpp"
#include "ihara/sofic.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;
using nlohmann::json;

namespace {

constexpr int kExitIdentityFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

MeasureMode parse_measure(const std::string& name) {
  if (name == "counting") return MeasureMode::counting;
  if (name == "normalized") return MeasureMode::normalized;
  throw io::ParseError("unknown measure: " + name);
}

json rational_list(const std::vector<Rational>& values, std::size_t from = 1) {
  json arr = json::array();
  for (std::size_t i = from; i < values.size(); ++i)
    arr.push_back(rational_to_string(values[i]));
  return arr;
}

struct ZetaOptions {
  std::string input;
  std::string method = "det";
  int order = 12;
  std::string measure = "counting";
  std::vector<std::string> eval_points;
  std::string out = "json";
  bool verify = false;
};

int run_verify(const Graph& g, int order, MeasureMode mode) {
  struct NamedCheck {
    const char* name;
    bool ok;
  };
  std::vector<NamedCheck> checks;

  const ZetaCoefficients by_paths = coefficients_by_paths(g, order, mode);
  const SeriesQ z_paths = zeta_series_from_coefficients(by_paths);
  checks.push_back({"determinant-formula", det_formula_series(g, order, mode) == z_paths});
  checks.push_back(
      {"trace-route", coefficients_by_trace(g, order, mode).nbar == by_paths.nbar});
  checks.push_back({"b-identities", b_identity_check(g, order, mode).all()});
  checks.push_back({"euler-product", euler_product_series(g, order, mode) == z_paths});
  {
    const SeriesQ counting = det_formula_series(g, order, MeasureMode::counting);
    const SeriesQ normalized = det_formula_series(g, order, MeasureMode::normalized);
    checks.push_back(
        {"normalization", series_pow(normalized, static_cast<long>(g.vertex_count())) == counting});
  }
  {
    bool ok = true;
    const Rational tau1 = trace_identity(g, mode);
    Rational bound = tau1 * Rational(g.max_degree());
    for (int j = 1; j <= order; ++j) {
      if (by_paths.nbar[static_cast<std::size_t>(j)] < 0 ||
          by_paths.nbar[static_cast<std::size_t>(j)] > bound)
        ok = false;
      bound *= Rational(std::max(1, g.max_degree() - 1));
    }
    if (euler_characteristic(g, MeasureMode::counting) !=
        Rational(g.vertex_count() - g.edge_count()))
      ok = false;
    checks.push_back({"bounds", ok});
  }
  int regular_degree = 0;
  if (g.is_regular(&regular_degree) && regular_degree >= 2) {
    bool ok = true;
    Rng rng(20240816);
    const double limit = 1.0 / operator_growth_rate(g.max_degree());
    for (int k = 0; k < 6; ++k) {
      const double radius = limit * (0.2 + 0.6 * rng.unit());
      const double angle = 2.0 * M_PI * rng.unit();
      const std::complex<double> u(radius * std::cos(angle), radius * std::sin(angle));
      const std::complex<double> s = regular_spectral_eval(g, u, mode);
      const std::complex<double> d = det_formula_eval(g, u, mode);
      if (std::abs(s - d) > 1e-9 * std::abs(d)) ok = false;
    }
    checks.push_back({"spectral-formula", ok});
  }

  bool all_ok = true;
  for (const auto& check : checks) {
    std::cout << (check.ok ? "ok " : "FAIL ") << check.name << "\n";
    if (!check.ok && all_ok) {
      std::cerr << "verification failed: " << check.name << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : kExitIdentityFailure;
}

int cmd_zeta(const ZetaOptions& opt) {
  const io::LoadedGraph loaded = io::load_graph(opt.input);
  const Graph& g = loaded.graph;
  const MeasureMode mode = parse_measure(opt.measure);
  if (opt.verify) return run_verify(g, opt.order, mode);

  const bool coefficient_method = opt.method != "spectral";
  ZetaCoefficients coeffs;
  SeriesQ series(opt.order);
  if (opt.method == "paths") {
    coeffs = coefficients_by_paths(g, opt.order, mode);
    series = zeta_series_from_coefficients(coeffs);
  } else if (opt.method == "trace") {
    coeffs = coefficients_by_trace(g, opt.order, mode);
    series = zeta_series_from_coefficients(coeffs);
  } else if (opt.method == "det") {
    series = det_formula_series(g, opt.order, mode);
    // recover coefficients from the series: j * [u^j] log Z
    const SeriesQ log_z = series_log(series);
    coeffs.mode = mode;
    coeffs.nbar.assign(static_cast<std::size_t>(opt.order) + 1, Rational(0));
    for (int j = 1; j <= opt.order; ++j)
      coeffs.nbar[static_cast<std::size_t>(j)] = log_z[j] * Rational(j);
  } else if (opt.method == "euler") {
    coeffs = coefficients_by_paths(g, opt.order, mode);
    series = euler_product_series(g, opt.order, mode);
  } else if (opt.method == "spectral") {
    if (opt.eval_points.empty())
      throw io::ParseError("method=spectral evaluates only; pass at least one --eval point");
  } else {
    throw io::ParseError("unknown method: " + opt.method);
  }

  struct EvalRow {
    std::complex<double> u;
    std::complex<double> value;
    double tail;
  };
  std::vector<EvalRow> evals;
  for (const std::string& text : opt.eval_points) {
    const GaussianRational exact_u = io::parse_eval_point(text);
    const std::complex<double> u = exact_u.to_complex();
    if (opt.method == "det") {
      evals.push_back({u, det_formula_eval(g, u, mode), 0.0});
    } else if (opt.method == "spectral") {
      evals.push_back({u, regular_spectral_eval(g, u, mode), 0.0});
    } else {
      if (g.max_degree() > 1 && std::abs(u) >= 1.0 / (g.max_degree() - 1))
        throw std::domain_error("evaluation point outside |u| < 1/(D-1)");
      const SeriesEval eval = series_eval_zeta(
          to_complex(series), u, ZetaTailParams{g.max_degree(), trace_identity(g, mode).get_d()});
      evals.push_back({u, eval.value, eval.tail_bound});
    }
  }

  if (opt.out == "json") {
    json out;
    out["input"] = opt.input;
    out["method"] = opt.method;
    out["measure"] = opt.measure;
    out["order"] = opt.order;
    out["degree_bound"] = g.max_degree();
    if (coefficient_method) {
      out["coefficients"]["nbar"] = rational_list(coeffs.nbar);
      if (!coeffs.pbar.empty()) out["coefficients"]["pbar"] = rational_list(coeffs.pbar);
      out["series"] = json::parse(io::series_to_json(series));
    }
    json eval_rows = json::array();
    for (const auto& row : evals)
      eval_rows.push_back({{"u", {row.u.real(), row.u.imag()}},
                           {"value", {row.value.real(), row.value.imag()}},
                           {"tail_bound", row.tail}});
    out["evaluations"] = std::move(eval_rows);
    std::cout << out.dump() << "\n";
  } else if (opt.out == "csv") {
    if (coefficient_method) {
      std::cout << "j,nbar" << (coeffs.pbar.empty() ? "" : ",pbar") << "\n";
      for (int j = 1; j <= opt.order; ++j) {
        std::cout << j << "," << rational_to_string(coeffs.nbar[static_cast<std::size_t>(j)]);
        if (!coeffs.pbar.empty())
          std::cout << "," << rational_to_string(coeffs.pbar[static_cast<std::size_t>(j)]);
        std::cout << "\n";
      }
    }
    if (!evals.empty()) {
      std::cout << "u_re,u_im,z_re,z_im,tail_bound\n";
      for (const auto& row : evals)
        std::cout << row.u.real() << "," << row.u.imag() << "," << row.value.real() << ","
                  << row.value.imag() << "," << row.tail << "\n";
    }
  } else {
    throw io::ParseError("unknown output format: " + opt.out);
  }
  return 0;
}

int cmd_balls(const std::string& input, int radius, const std::string& out) {
  const io::LoadedGraph loaded = io::load_graph(input);
  const BallDistribution dist = ball_distribution(loaded.graph, radius);
  if (out == "json") {
    std::cout << io::distribution_to_json(dist) << "\n";
  } else if (out == "csv") {
    std::cout << "key,frequency\n";
    for (const auto& [key, freq] : dist.frequencies())
      std::cout << key.hex() << "," << rational_to_string(freq) << "\n";
  } else {
    throw io::ParseError("unknown output format: " + out);
  }
  return 0;
}

int cmd_periodic(const std::string& input, int order,
                 const std::vector<std::string>& eval_points, const std::string& out) {
  const AnyVoltageGraph vg = io::load_voltage_graph(input);
  const ZetaCoefficients coeffs =
      std::visit([&](const auto& v) { return periodic_coefficients(v, order); }, vg);
  const SeriesQ series = zeta_series_from_coefficients(coeffs);
  const int degree_bound = std::visit([](const auto& v) { return v.cover_degree_bound(); }, vg);

  std::vector<std::pair<GaussianRational, GaussianRational>> evals;
  for (const std::string& text : eval_points) {
    const GaussianRational u = io::parse_eval_point(text);
    if (degree_bound > 1) {
      const Rational disc(1, degree_bound - 1);
      if (!(u.norm2() < disc * disc))
        throw std::domain_error("evaluation point outside |u| < 1/(D-1)");
    }
    evals.emplace_back(u, series_eval_exact(series, u));
  }

  if (out == "json") {
    json j;
    j["input"] = input;
    j["order"] = order;
    j["degree_bound"] = degree_bound;
    j["fundamental_domain_size"] =
        std::visit([](const auto& v) { return v.base_vertex_count(); }, vg);
    j["coefficients"]["nbar"] = rational_list(coeffs.nbar);
    j["coefficients"]["pbar"] = rational_list(coeffs.pbar);
    j["series"] = json::parse(io::series_to_json(series));
    json eval_rows = json::array();
    for (const auto& [u, z] : evals)
      eval_rows.push_back({{"u", {rational_to_string(u.re), rational_to_string(u.im)}},
                           {"value", {rational_to_string(z.re), rational_to_string(z.im)}}});
    j["evaluations"] = std::move(eval_rows);
    std::cout << j.dump() << "\n";
  } else if (out == "csv") {
    std::cout << "j,nbar,pbar\n";
    for (int j = 1; j <= order; ++j)
      std::cout << j << "," << rational_to_string(coeffs.nbar[static_cast<std::size_t>(j)]) << ","
                << rational_to_string(coeffs.pbar[static_cast<std::size_t>(j)]) << "\n";
    if (!evals.empty()) {
      std::cout << "u_re,u_im,z_re,z_im\n";
      for (const auto& [u, z] : evals)
        std::cout << rational_to_string(u.re) << "," << rational_to_string(u.im) << ","
                  << rational_to_string(z.re) << "," << rational_to_string(z.im) << "\n";
    }
  } else {
    throw io::ParseError("unknown output format: " + out);
  }
  return 0;
}

io::ProviderSpec load_provider_spec(const std::string& text) {
  if (!text.empty() && text.find('{') != std::string::npos)
    return io::parse_provider_spec(text);
  return io::parse_provider_spec(io::read_file(text));
}

template <GroupCarrier G>
G parse_element_for(const VoltageGraph<G>& vg, const std::string& token);

template <>
ZVec parse_element_for(const VoltageGraph<ZVec>& vg, const std::string& token) {
  return ZVec::parse(token, static_cast<int>(vg.identity_element().v.size()));
}

template <>
FreeWord parse_element_for(const VoltageGraph<FreeWord>&, const std::string& token) {
  return FreeWord::parse(token, 26);
}

template <GroupCarrier G>
AlmostHom<G> build_provider(const VoltageGraph<G>& vg, int radius, const io::ProviderSpec& spec,
                            std::uint64_t seed_override, bool have_seed_override) {
  const GroupSet<G> ttilde = build_Ttilde(build_T(vg, radius));
  if (spec.kind == io::ProviderSpec::Kind::quotient) {
    if constexpr (std::is_same_v<G, ZVec>) {
      return make_quotient_hom_zd(spec.modulus,
                                  static_cast<int>(vg.identity_element().v.size()), ttilde);
    } else {
      throw io::ParseError("quotient provider needs a Z^d voltage graph");
    }
  }
  if (spec.kind == io::ProviderSpec::Kind::random_seeded) {
    if constexpr (std::is_same_v<G, FreeWord>) {
      int rank = 0;
      for (int f = 0; f < vg.base_vertex_count(); ++f)
        for (const auto& e : vg.edges_at(f))
          for (int letter : e.label.letters) rank = std::max(rank, std::abs(letter));
      const std::uint64_t seed = have_seed_override ? seed_override : spec.seed;
      return make_random_almost_hom(rank, spec.degree, seed, ttilde);
    } else {
      throw io::ParseError("random provider needs a free-group voltage graph");
    }
  }
  // table provider: degree read off the first data line
  std::istringstream in(io::read_file(spec.file));
  std::vector<std::string> lines;
  std::string line;
  int degree = -1;
  while (std::getline(in, line)) {
    lines.push_back(line);
    if (degree < 0) {
      std::istringstream probe(line);
      std::string first;
      int count = 0;
      if (probe >> first && first[0] != '#') {
        int x;
        while (probe >> x) ++count;
        if (count > 0) degree = count;
      }
    }
  }
  if (degree <= 0) throw io::ParseError("permutation table file has no usable lines");
  return almost_hom_from_table<G>(
      degree, lines, [&](const std::string& token) { return parse_element_for(vg, token); });
}

int cmd_sofic(const std::string& input, int radius, const std::string& provider_text, double delta,
              std::uint64_t seed_override, bool have_seed_override, const std::string& graph_out,
              const std::string& out) {
  const AnyVoltageGraph vg = io::load_voltage_graph(input);
  const io::ProviderSpec spec = load_provider_spec(provider_text);

  return std::visit(
      [&](const auto& v) -> int {
        const auto hom = build_provider(v, radius, spec, seed_override, have_seed_override);
        const auto result = sofic_graph(v, radius, hom);
        const DeltaGuaranteeReport report = check_delta_guarantee(v, radius, hom, delta);

        if (!graph_out.empty()) {
          std::ofstream file(graph_out);
          if (!file) throw io::ParseError("cannot write graph file: " + graph_out);
          file << io::graph_to_json(result.graph) << "\n";
        }

        if (out == "json") {
          json j = json::parse(io::delta_report_to_json(report));
          j["graph"] = {{"vertices", result.graph.vertex_count()},
                        {"edges", result.graph.edge_count()},
                        {"max_degree", result.max_degree},
                        {"degree_bound_exceeded", result.degree_bound_exceeded}};
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "max_deviation," << rational_to_string(report.max_deviation) << "\n";
          std::cout << "good_fraction," << report.good_fraction << "\n";
          std::cout << "holds," << (report.holds ? 1 : 0) << "\n";
        }
        if (result.degree_bound_exceeded)
          std::cerr << "warning: approximant degree " << result.max_degree
                    << " exceeds the cover bound " << v.cover_degree_bound() << "\n";
        return 0;
      },
      vg);
}

struct ConvergeOptions {
  std::string family = "cycle";
  std::string range = "4..16";
  int order = 8;
  int eval_order = 0;
  std::string limit_file;
  std::vector<std::string> eval_points;
  int radius = 1;
  std::string provider_text;
  std::uint64_t seed = 0;
  bool have_seed = false;
  std::string out = "csv";
};

std::tuple<int, int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw io::ParseError("range must look like A..B or A..B:STEP");
  const auto colon = text.find(':', dots);
  const int from = std::stoi(text.substr(0, dots));
  const int to = std::stoi(
      text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
  const int step = colon == std::string::npos ? 1 : std::stoi(text.substr(colon + 1));
  return {from, to, step};
}

int cmd_converge(const ConvergeOptions& opt) {
  const auto [from, to, step] = parse_range(opt.range);

  const std::string limit_text = io::read_file(opt.limit_file);
  ConvergenceLimit limit = limit_text.find("\"group\"") != std::string::npos
                               ? ConvergenceLimit{io::parse_voltage_graph(limit_text)}
                               : ConvergenceLimit{io::parse_distribution(limit_text)};

  GraphSequence members;
  if (opt.family == "cycle") {
    members = make_cycle_family(from, to, step);
  } else if (opt.family == "torus2") {
    members = make_torus_family(from, to, step, 2);
  } else if (opt.family == "sofic") {
    const auto* vg = std::get_if<AnyVoltageGraph>(&limit.target);
    if (!vg) throw io::ParseError("sofic family needs a voltage-graph limit");
    const io::ProviderSpec spec = opt.provider_text.empty()
                                      ? io::parse_provider_spec(R"({"provider":"quotient","n":0})")
                                      : load_provider_spec(opt.provider_text);
    for (int n = from; n <= to; n += step) {
      io::ProviderSpec member_spec = spec;
      if (spec.kind == io::ProviderSpec::Kind::quotient) member_spec.modulus = n;
      if (spec.kind == io::ProviderSpec::Kind::random_seeded) {
        member_spec.degree = n;
        member_spec.seed = spec.seed + static_cast<std::uint64_t>(n);
      }
      members.push_back(std::visit(
          [&](const auto& v) {
            const auto hom = build_provider(v, opt.radius, member_spec, opt.seed, opt.have_seed);
            return SequenceMember{"sofic(" + std::to_string(n) + ")", n,
                                  sofic_graph(v, opt.radius, hom).graph};
          },
          *vg));
    }
  } else {
    throw io::ParseError("unknown family: " + opt.family);
  }

  std::vector<GaussianRational> points;
  for (const std::string& text : opt.eval_points) points.push_back(io::parse_eval_point(text));

  const ConvergenceReport report = converge_run(members, opt.order, limit, points, opt.eval_order);
  if (opt.out == "csv")
    std::cout << io::report_to_csv(report);
  else if (opt.out == "json")
    std::cout << io::report_to_json(report) << "\n";
  else
    throw io::ParseError("unknown output format: " + opt.out);
  return 0;
}

// Reduced-size end-to-end checks; one line per identity, the first failure
// names the culprit and flips the exit code.
int cmd_selftest() {
  int failures = 0;
  std::string first_failure;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok " : "FAIL ") << name << "\n" << std::flush;
    if (!ok && first_failure.empty()) first_failure = name;
    failures += ok ? 0 : 1;
  };

  std::vector<Graph> suite;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    suite.push_back(random_connected_graph(3, 8, 4, rng));
  }
  const int order = 10;

  {
    bool ok = true;
    for (const Graph& g : suite)
      for (const MeasureMode mode : {MeasureMode::counting, MeasureMode::normalized})
        if (det_formula_series(g, order, mode) !=
            zeta_series_from_coefficients(coefficients_by_paths(g, order, mode)))
          ok = false;
    report("determinant-formula", ok);
  }
  {
    bool ok = true;
    for (const Graph& g : suite) {
      if (coefficients_by_trace(g, order, MeasureMode::counting).nbar !=
          coefficients_by_paths(g, order, MeasureMode::counting).nbar)
        ok = false;
      const auto tails = tail_counts_by_recursion(g, order, MeasureMode::counting);
      for (int j = 1; j <= order; ++j) {
        std::int64_t brute = 0;
        for (int x = 0; x < g.vertex_count(); ++x) brute += count_tailed(g, x, j);
        if (tails[static_cast<std::size_t>(j)] != Rational(brute)) ok = false;
      }
    }
    report("trace-route", ok);
  }
  {
    bool ok = true;
    for (const Graph& g : suite)
      if (!b_identity_check(g, order, MeasureMode::counting).all()) ok = false;
    report("b-identities", ok);
  }
  {
    bool ok = true;
    for (const Graph& g : suite) {
      if (euler_product_series(g, order, MeasureMode::counting) !=
          zeta_series_from_coefficients(coefficients_by_paths(g, order, MeasureMode::counting)))
        ok = false;
      const PrimeCycleTable table = prime_cycle_table(g, 8);
      for (int j = 1; j <= 8; ++j) {
        std::int64_t rooted = 0;
        for (int x = 0; x < g.vertex_count(); ++x) rooted += count_primitive_reduced(g, x, j);
        if (rooted != static_cast<std::int64_t>(j) * table.count_at(j)) ok = false;
      }
    }
    report("euler-product", ok);
  }
  {
    bool ok = true;
    for (const Graph& g : suite)
      if (series_pow(det_formula_series(g, order, MeasureMode::normalized),
                     static_cast<long>(g.vertex_count())) !=
          det_formula_series(g, order, MeasureMode::counting))
        ok = false;
    report("normalization", ok);
  }
  {
    bool ok = true;
    Rng rng(777);
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = random_regular_graph(16, 3, rng);
      const double limit = 1.0 / operator_growth_rate(3);
      for (int k = 0; k < 6; ++k) {
        const double radius = limit * (0.2 + 0.6 * rng.unit());
        const double angle = 2.0 * M_PI * rng.unit();
        const std::complex<double> u(radius * std::cos(angle), radius * std::sin(angle));
        const std::complex<double> s = regular_spectral_eval(g, u, MeasureMode::counting);
        const std::complex<double> d = det_formula_eval(g, u, MeasureMode::counting);
        if (std::abs(s - d) > 1e-9 * std::abs(d)) ok = false;
      }
    }
    report("spectral-formula", ok);
  }
  {
    bool ok = true;
    for (const Graph& g : suite) {
      const int dmax = g.max_degree();
      const Rational tau1 = trace_identity(g, MeasureMode::counting);
      const ZetaCoefficients coeffs = coefficients_by_paths(g, order, MeasureMode::counting);
      Rational bound = tau1 * Rational(dmax);
      for (int j = 1; j <= order; ++j) {
        if (coeffs.nbar[static_cast<std::size_t>(j)] > bound) ok = false;
        bound *= Rational(std::max(1, dmax - 1));
      }
      if (euler_characteristic(g, MeasureMode::counting) !=
          Rational(g.vertex_count() - g.edge_count()))
        ok = false;
      const auto mats = proper_path_matrices(g, 8);
      const double growth = operator_growth_rate(dmax);
      for (int j = 0; j <= 8; ++j) {
        Eigen::MatrixXd m(g.vertex_count(), g.vertex_count());
        for (int p = 0; p < g.vertex_count(); ++p)
          for (int q = 0; q < g.vertex_count(); ++q)
            m(p, q) = static_cast<double>(mats[static_cast<std::size_t>(j)].at(p, q));
        if (m.jacobiSvd().singularValues()(0) > std::pow(growth, j) * (1.0 + 1e-9)) ok = false;
      }
    }
    report("bounds", ok);
  }
  {
    bool ok = true;
    const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(2)}};
    const ConvergenceReport torus = converge_run(make_torus_family(4, 8), 6, limit, {}, 6);
    for (const auto& row : torus.rows)
      for (int j = 1; j <= 6; ++j)
        if (row.parameter >= j + 2 && row.coeff_deviation[static_cast<std::size_t>(j)] != 0)
          ok = false;
    report("convergence-torus", ok);
  }
  {
    bool ok = true;
    const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(1)}};
    const std::vector<GaussianRational> points{GaussianRational(Rational(1, 2), Rational(0))};
    const ConvergenceReport cycles =
        converge_run(make_cycle_family(4, 32, 4), 6, limit, points, 36);
    const Rational tolerance_sq(1, 1000000);  // (1e-3)^2
    for (std::size_t i = 0; i < cycles.rows.size(); ++i) {
      if (cycles.rows[i].parameter >= 16 && cycles.rows[i].z_deviation_sq[0] > tolerance_sq)
        ok = false;
      if (i > 0 && !(cycles.rows[i].z_deviation_sq[0] < cycles.rows[i - 1].z_deviation_sq[0]))
        ok = false;
    }
    report("convergence-cycle", ok);
  }
  {
    bool ok = true;
    const VoltageGraph<ZVec> plane = lattice_voltage_graph(2);
    const AlmostHom<ZVec> hom = make_quotient_hom_zd(8, 2, build_Ttilde(build_T(plane, 1)));
    const DeltaGuaranteeReport report_q = check_delta_guarantee(plane, 1, hom, 0.05);
    if (report_q.max_deviation != 0 || report_q.good_fraction != 1.0) ok = false;
    const SoficGraphResult approx = sofic_graph(plane, 1, hom);
    if (distribution_distance(ball_distribution(approx.graph, 1),
                              ball_distribution(torus_graph(8, 2), 1)) != 0)
      ok = false;
    report("sofic-quotient", ok);
  }
  {
    bool ok = true;
    const VoltageGraph<FreeWord> cayley = free_cayley_voltage_graph(2);
    const AlmostHom<FreeWord> hom =
        make_random_almost_hom(2, 500, 42, build_Ttilde(build_T(cayley, 1)));
    const DeltaGuaranteeReport report_r = check_delta_guarantee(cayley, 1, hom, 0.2);
    if (report_r.max_deviation.get_d() >= 0.2) ok = false;
    if (report_r.good_fraction < report_r.good_fraction_lower_bound) ok = false;
    report("sofic-random", ok);
  }
  {
    bool ok = true;
    Rng rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
      const Graph g = random_connected_graph(4, 8, 4, rng);
      if (invariance_discrepancy(greedy_edge_coloring(g), 2) != 0) ok = false;
    }
    report("invariance", ok);
  }

  if (failures > 0) {
    std::cerr << "selftest failed at: " << first_failure << "\n";
    return kExitIdentityFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ihara zeta functions of finite, periodic, and limit graphs"};
  app.require_subcommand(1);

  ZetaOptions zeta_opt;
  CLI::App* zeta_cmd =
      app.add_subcommand("zeta", "zeta coefficients and evaluations of a finite graph");
  zeta_cmd->add_option("--input", zeta_opt.input, "graph file (JSON or edge list)")->required();
  zeta_cmd->add_option("--method", zeta_opt.method, "paths|trace|det|euler|spectral");
  zeta_cmd->add_option("--order", zeta_opt.order, "truncation order")->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--measure", zeta_opt.measure, "counting|normalized");
  zeta_cmd->add_option("--eval", zeta_opt.eval_points, "evaluation point \"re,im\" (repeatable)");
  zeta_cmd->add_option("--out", zeta_opt.out, "json|csv");
  zeta_cmd->add_flag("--verify", zeta_opt.verify, "run all methods and assert agreement");

  std::string balls_input, balls_out = "json";
  int balls_radius = 1;
  CLI::App* balls_cmd = app.add_subcommand("balls", "rooted ball class distribution");
  balls_cmd->add_option("--input", balls_input, "graph file")->required();
  balls_cmd->add_option("--radius", balls_radius, "ball radius")->required();
  balls_cmd->add_option("--out", balls_out, "json|csv");

  std::string periodic_input, periodic_out = "json";
  int periodic_order = 12;
  std::vector<std::string> periodic_evals;
  CLI::App* periodic_cmd =
      app.add_subcommand("periodic", "periodic-graph zeta via a voltage graph");
  periodic_cmd->add_option("--input", periodic_input, "voltage graph JSON file")->required();
  periodic_cmd->add_option("--order", periodic_order, "truncation order")
      ->check(CLI::PositiveNumber);
  periodic_cmd->add_option("--eval", periodic_evals, "evaluation point (repeatable)");
  periodic_cmd->add_option("--out", periodic_out, "json|csv");

  std::string sofic_input, sofic_provider, sofic_graph_out, sofic_out = "json";
  int sofic_radius = 1;
  double sofic_delta = 0.05;
  std::uint64_t sofic_seed = 0;
  CLI::App* sofic_cmd =
      app.add_subcommand("sofic", "finite approximants from almost homomorphisms");
  sofic_cmd->add_option("--input", sofic_input, "voltage graph JSON file")->required();
  sofic_cmd->add_option("--radius", sofic_radius, "window radius")->required();
  sofic_cmd->add_option("--provider", sofic_provider, "provider spec (inline JSON or file)")
      ->required();
  sofic_cmd->add_option("--delta", sofic_delta, "target frequency deviation");
  CLI::Option* sofic_seed_opt =
      sofic_cmd->add_option("--seed", sofic_seed, "override the provider seed");
  sofic_cmd->add_option("--graph-out", sofic_graph_out, "write the approximant graph JSON here");
  sofic_cmd->add_option("--out", sofic_out, "json|csv");

  ConvergeOptions conv;
  CLI::App* conv_cmd = app.add_subcommand("converge", "zeta convergence along a graph family");
  conv_cmd->add_option("--family", conv.family, "cycle|torus2|sofic");
  conv_cmd->add_option("--range", conv.range, "A..B or A..B:STEP")->required();
  conv_cmd->add_option("--order", conv.order, "coefficient order")->check(CLI::PositiveNumber);
  conv_cmd->add_option("--eval-order", conv.eval_order, "series order for evaluations");
  conv_cmd->add_option("--limit", conv.limit_file, "limit file (voltage graph or distribution)")
      ->required();
  conv_cmd->add_option("--eval", conv.eval_points, "evaluation point (repeatable)");
  conv_cmd->add_option("--radius", conv.radius, "sofic window radius");
  conv_cmd->add_option("--provider", conv.provider_text, "sofic provider template");
  CLI::Option* conv_seed_opt = conv_cmd->add_option("--seed", conv.seed, "override provider seeds");
  conv_cmd->add_option("--out", conv.out, "csv|json");

  app.add_subcommand("selftest", "run the reduced acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  try {
    if (zeta_cmd->parsed()) return cmd_zeta(zeta_opt);
    if (balls_cmd->parsed()) return cmd_balls(balls_input, balls_radius, balls_out);
    if (periodic_cmd->parsed())
      return cmd_periodic(periodic_input, periodic_order, periodic_evals, periodic_out);
    if (sofic_cmd->parsed())
      return cmd_sofic(sofic_input, sofic_radius, sofic_provider, sofic_delta, sofic_seed,
                       sofic_seed_opt->count() > 0, sofic_graph_out, sofic_out);
    if (conv_cmd->parsed()) {
      conv.have_seed = conv_seed_opt->count() > 0;
      return cmd_converge(conv);
    }
    return cmd_selftest();
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
}
