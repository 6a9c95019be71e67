#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihara/coloring.hpp"
#include "ihara/graph.hpp"
#include "ihara/limits.hpp"
#include "ihara/periodic.hpp"
#include "ihara/series.hpp"
#include "ihara/sofic.hpp"
#include "ihara/zeta.hpp"

namespace ihara::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Graph files. JSON: {"vertices": n, "edges": [[u,v],...], "colors": [...]?}
// Text: one "u v [c]" per line, '#' starts a comment. Colors, when present,
// must cover every edge.
struct LoadedGraph {
  Graph graph;
  std::optional<ColoredGraph> colored;
};

LoadedGraph parse_graph(const std::string& text);
LoadedGraph load_graph(const std::string& path);
std::string graph_to_json(const Graph& g, const std::vector<int>* colors_by_edge = nullptr);

// Voltage graphs:
// {"group": {"type":"Zd","d":k} | {"type":"free","rank":k},
//  "vertices": m, "edges": [{"from":f,"to":g,"label":[..]|"word"}],
//  "stabilizers": [s_1..s_m]?}
AnyVoltageGraph parse_voltage_graph(const std::string& text);
AnyVoltageGraph load_voltage_graph(const std::string& path);
std::string voltage_graph_to_json(const AnyVoltageGraph& vg);

// Series: {"order": J, "coeffs": [["num","den"],...]} (exact) or [[re,im],...]
std::string series_to_json(const SeriesQ& s);
std::string series_to_json(const SeriesC& s);
SeriesQ parse_series_exact(const std::string& text);

// Ball distributions, with representative balls inlined
std::string distribution_to_json(const BallDistribution& d);
BallDistribution parse_distribution(const std::string& text);
BallDistribution load_distribution(const std::string& path);

// Provider specs: {"provider":"quotient","n":16} | {"provider":"random","N":2000,"seed":42}
// | {"provider":"table","file":"..."}
struct ProviderSpec {
  enum class Kind { quotient, random_seeded, table };
  Kind kind = Kind::quotient;
  int modulus = 0;                // quotient
  int degree = 0;                 // random
  std::uint64_t seed = 0;         // random
  std::string file;               // table
};

ProviderSpec parse_provider_spec(const std::string& text);

// Convergence reports. CSV columns: label, n, vertices, nbar_1..J as exact
// fractions, then per eval point re/im as exact fractions and |dev| as float.
std::string report_to_csv(const ConvergenceReport& report);
std::string report_to_json(const ConvergenceReport& report);
// round-trip of the exact columns (coefficients and zeta values)
ConvergenceReport parse_report_csv(const std::string& text);

std::string delta_report_to_json(const DeltaGuaranteeReport& report);

GaussianRational parse_eval_point(const std::string& text);  // "re,im" or "re"

}  // namespace ihara::io
