#include "ihara/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ihara::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string("malformed JSON in ") + what);
  return j;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

std::vector<int> reorder_colors(const Graph& g,
                                const std::vector<std::pair<int, int>>& listed_edges,
                                const std::vector<int>& listed_colors) {
  std::map<std::pair<int, int>, int> by_edge;
  for (std::size_t i = 0; i < listed_edges.size(); ++i) {
    auto [u, v] = listed_edges[i];
    if (u > v) std::swap(u, v);
    by_edge[{u, v}] = listed_colors[i];
  }
  std::vector<int> out;
  for (const auto& e : g.edges()) out.push_back(by_edge.at(e));
  return out;
}

}  // namespace

LoadedGraph parse_graph(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  bool any_color = false;
  int vertices = 0;

  if (looks_like_json(text)) {
    const json j = parse_json(text, "graph");
    if (!j.contains("vertices") || !j.contains("edges"))
      throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph edge must be a pair");
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (j.contains("colors")) {
      any_color = true;
      for (const auto& c : j.at("colors")) colors.push_back(c.get<int>());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    int max_id = -1;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream fields(line);
      int u, v;
      if (!(fields >> u >> v)) {
        std::istringstream check(line);
        std::string leftover;
        if (check >> leftover) throw ParseError("malformed edge line: " + line);
        continue;  // blank or comment-only line
      }
      int c;
      if (fields >> c) {
        any_color = true;
        colors.push_back(c);
      } else if (any_color) {
        throw ParseError("edge line misses a color: " + line);
      }
      edges.emplace_back(u, v);
      max_id = std::max({max_id, u, v});
    }
    vertices = max_id + 1;
  }

  if (any_color && colors.size() != edges.size())
    throw ParseError("color list does not cover every edge");

  LoadedGraph out{Graph::from_edges(vertices, edges), std::nullopt};
  if (any_color)
    out.colored.emplace(out.graph, reorder_colors(out.graph, edges, colors));
  return out;
}

LoadedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const std::invalid_argument& err) {
    throw ParseError(path + ": " + err.what());
  }
}

std::string graph_to_json(const Graph& g, const std::vector<int>* colors_by_edge) {
  json j;
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (colors_by_edge) j["colors"] = *colors_by_edge;
  return j.dump();
}

namespace {

template <GroupCarrier G, class ParseLabel>
VoltageGraph<G> voltage_from_json(const json& j, G identity, ParseLabel parse_label) {
  const int vertices = j.at("vertices").get<int>();
  std::vector<LabeledEdge<G>> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), parse_label(e)});
  std::vector<std::int64_t> stabilizers;
  if (j.contains("stabilizers"))
    for (const auto& s : j.at("stabilizers")) stabilizers.push_back(s.get<std::int64_t>());
  return VoltageGraph<G>(vertices, std::move(identity), edges, std::move(stabilizers));
}

}  // namespace

AnyVoltageGraph parse_voltage_graph(const std::string& text) {
  const json j = parse_json(text, "voltage graph");
  try {
    const json& group = j.at("group");
    const std::string type = group.at("type").get<std::string>();
    if (type == "Zd") {
      const int dim = group.at("d").get<int>();
      return voltage_from_json<ZVec>(j, ZVec::identity(dim), [dim](const json& e) {
        const json& label = e.at("label");
        if (!label.is_array() || static_cast<int>(label.size()) != dim)
          throw ParseError("lattice label must be an array of length d");
        ZVec z = ZVec::identity(dim);
        for (int k = 0; k < dim; ++k) z.v[static_cast<std::size_t>(k)] = label.at(static_cast<std::size_t>(k)).get<std::int64_t>();
        return z;
      });
    }
    if (type == "free") {
      const int rank = group.at("rank").get<int>();
      return voltage_from_json<FreeWord>(j, FreeWord::identity(), [rank](const json& e) {
        if (e.contains("word")) return FreeWord::parse(e.at("word").get<std::string>(), rank);
        return FreeWord::parse(e.at("label").get<std::string>(), rank);
      });
    }
    throw ParseError("unknown group type: " + type);
  } catch (const json::exception& err) {
    throw ParseError(std::string("voltage graph JSON: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("voltage graph: ") + err.what());
  }
}

AnyVoltageGraph load_voltage_graph(const std::string& path) {
  return parse_voltage_graph(read_file(path));
}

std::string voltage_graph_to_json(const AnyVoltageGraph& vg) {
  json j;
  std::visit(
      [&](const auto& v) {
        using VG = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<VG, VoltageGraph<ZVec>>) {
          j["group"] = {{"type", "Zd"}, {"d", v.identity_element().v.size()}};
        } else {
          int rank = 0;
          for (int f = 0; f < v.base_vertex_count(); ++f)
            for (const auto& e : v.edges_at(f))
              for (int letter : e.label.letters) rank = std::max(rank, std::abs(letter));
          j["group"] = {{"type", "free"}, {"rank", rank}};
        }
        j["vertices"] = v.base_vertex_count();
        json edges = json::array();
        for (int f = 0; f < v.base_vertex_count(); ++f)
          for (const auto& e : v.edges_at(f)) {
            if (e.from > e.to) continue;  // emit one direction
            // a base loop stores both labels; keep exactly one of the pair
            if (e.from == e.to && !(e.label.to_string() < inverse(e.label).to_string())) continue;
            json entry;
            entry["from"] = e.from;
            entry["to"] = e.to;
            if constexpr (std::is_same_v<VG, VoltageGraph<ZVec>>) {
              entry["label"] = e.label.v;
            } else {
              entry["word"] = e.label.to_string();
            }
            edges.push_back(std::move(entry));
          }
        j["edges"] = std::move(edges);
        j["stabilizers"] = v.stabilizer_orders();
      },
      vg);
  return j.dump();
}

std::string series_to_json(const SeriesQ& s) {
  json coeffs = json::array();
  for (int j = 0; j <= s.order(); ++j)
    coeffs.push_back({s[j].get_num().get_str(), s[j].get_den().get_str()});
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}}.dump();
}

std::string series_to_json(const SeriesC& s) {
  json coeffs = json::array();
  for (int j = 0; j <= s.order(); ++j) coeffs.push_back({s[j].real(), s[j].imag()});
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}}.dump();
}

SeriesQ parse_series_exact(const std::string& text) {
  const json j = parse_json(text, "series");
  const int order = j.at("order").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_string())
      throw ParseError("exact series coefficients must be [\"num\",\"den\"] pairs");
    coeffs.push_back(rational_from_string(pair.at(0).get<std::string>() + "/" +
                                          pair.at(1).get<std::string>()));
  }
  return SeriesQ(order, std::move(coeffs));
}

std::string distribution_to_json(const BallDistribution& d) {
  json entries = json::array();
  for (const auto& [key, freq] : d.frequencies()) {
    const RootedBall& rep = d.representative(key);
    json entry;
    entry["key"] = key.hex();
    entry["freq"] = rational_to_string(freq);
    entry["ball"] = {{"vertices", rep.graph.vertex_count()},
                     {"edges", json::array()},
                     {"root", rep.root}};
    for (const auto& [u, v] : rep.graph.edges()) entry["ball"]["edges"].push_back({u, v});
    entries.push_back(std::move(entry));
  }
  return json{{"radius", d.radius()}, {"degree_bound", d.degree_bound()}, {"entries", entries}}
      .dump();
}

BallDistribution parse_distribution(const std::string& text) {
  const json j = parse_json(text, "ball distribution");
  try {
    BallDistribution d(j.at("radius").get<int>(), j.at("degree_bound").get<int>());
    for (const auto& entry : j.at("entries")) {
      const json& ball_json = entry.at("ball");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : ball_json.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      RootedBall rep;
      rep.graph = Graph::from_edges(ball_json.at("vertices").get<int>(), edges);
      rep.root = ball_json.at("root").get<int>();
      rep.radius = d.radius();
      rep.original_id.resize(static_cast<std::size_t>(rep.graph.vertex_count()));
      for (int v = 0; v < rep.graph.vertex_count(); ++v)
        rep.original_id[static_cast<std::size_t>(v)] = v;
      const BallClassKey recomputed = canonical_key(rep);
      if (recomputed.hex() != entry.at("key").get<std::string>())
        throw ParseError("stored ball class key does not match its representative");
      d.add_class(recomputed, rational_from_string(entry.at("freq").get<std::string>()),
                  std::move(rep));
    }
    return d;
  } catch (const json::exception& err) {
    throw ParseError(std::string("ball distribution JSON: ") + err.what());
  }
}

BallDistribution load_distribution(const std::string& path) {
  return parse_distribution(read_file(path));
}

ProviderSpec parse_provider_spec(const std::string& text) {
  const json j = parse_json(text, "provider spec");
  ProviderSpec spec;
  try {
    const std::string kind = j.at("provider").get<std::string>();
    if (kind == "quotient") {
      spec.kind = ProviderSpec::Kind::quotient;
      spec.modulus = j.at("n").get<int>();
    } else if (kind == "random") {
      spec.kind = ProviderSpec::Kind::random_seeded;
      spec.degree = j.at("N").get<int>();
      spec.seed = j.value("seed", 0ULL);
    } else if (kind == "table") {
      spec.kind = ProviderSpec::Kind::table;
      spec.file = j.at("file").get<std::string>();
    } else {
      throw ParseError("unknown provider kind: " + kind);
    }
  } catch (const json::exception& err) {
    throw ParseError(std::string("provider spec JSON: ") + err.what());
  }
  return spec;
}

std::string report_to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "label,n,vertices";
  for (int j = 1; j <= report.order; ++j) out << ",nbar_" << j;
  for (std::size_t k = 0; k < report.eval_points.size(); ++k)
    out << ",z_re_" << k << ",z_im_" << k << ",dev_" << k;
  out << "\n";

  auto emit_values = [&](const std::vector<Rational>& nbar,
                         const std::vector<GaussianRational>& values,
                         const std::vector<double>* dev) {
    for (int j = 1; j <= report.order; ++j) out << "," << rational_to_string(nbar[static_cast<std::size_t>(j)]);
    for (std::size_t k = 0; k < report.eval_points.size(); ++k) {
      if (k < values.size()) {
        out << "," << rational_to_string(values[k].re) << "," << rational_to_string(values[k].im);
      } else {
        out << ",,";
      }
      if (dev && k < dev->size())
        out << "," << (*dev)[k];
      else
        out << ",";
    }
    out << "\n";
  };

  for (const auto& row : report.rows) {
    out << row.label << "," << row.parameter << "," << row.vertex_count;
    emit_values(row.nbar_normalized, row.zeta_values, &row.z_deviation);
  }
  out << "limit,," ;
  emit_values(report.limit_nbar, report.limit_values, nullptr);
  return out.str();
}

ConvergenceReport parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty report CSV");

  // header determines the column layout
  int order = 0;
  std::size_t points = 0;
  {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (field.rfind("nbar_", 0) == 0) order = std::max(order, std::stoi(field.substr(5)));
      if (field.rfind("z_re_", 0) == 0)
        points = std::max(points, static_cast<std::size_t>(std::stoul(field.substr(5)) + 1));
    }
  }

  ConvergenceReport report;
  report.order = order;
  report.eval_points.assign(points, GaussianRational());

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream split(line);
    std::string field;
    while (std::getline(split, field, ',')) fields.push_back(field);
    fields.resize(3 + static_cast<std::size_t>(order) + 3 * points);

    std::vector<Rational> nbar(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 1; j <= order; ++j)
      nbar[static_cast<std::size_t>(j)] = rational_from_string(fields[static_cast<std::size_t>(2 + j)]);
    std::vector<GaussianRational> values;
    for (std::size_t k = 0; k < points; ++k) {
      const std::string& re = fields[3 + static_cast<std::size_t>(order) + 3 * k];
      const std::string& im = fields[3 + static_cast<std::size_t>(order) + 3 * k + 1];
      if (re.empty()) break;
      values.emplace_back(rational_from_string(re), rational_from_string(im));
    }

    if (fields[0] == "limit") {
      report.limit_nbar = std::move(nbar);
      report.limit_values = std::move(values);
    } else {
      ConvergenceRow row;
      row.label = fields[0];
      row.parameter = fields[1].empty() ? 0 : std::stoll(fields[1]);
      row.vertex_count = fields[2].empty() ? 0 : std::stoll(fields[2]);
      row.nbar_normalized = std::move(nbar);
      row.zeta_values = std::move(values);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string report_to_json(const ConvergenceReport& report) {
  json j;
  j["order"] = report.order;
  j["eval_order"] = report.eval_order;
  j["fundamental_domain_size"] = report.fundamental_domain_size;
  json points = json::array();
  for (const auto& u : report.eval_points)
    points.push_back({rational_to_string(u.re), rational_to_string(u.im)});
  j["eval_points"] = std::move(points);

  auto rationals = [](const std::vector<Rational>& values, std::size_t from = 1) {
    json arr = json::array();
    for (std::size_t i = from; i < values.size(); ++i) arr.push_back(rational_to_string(values[i]));
    return arr;
  };
  auto gaussians = [](const std::vector<GaussianRational>& values) {
    json arr = json::array();
    for (const auto& z : values) arr.push_back({rational_to_string(z.re), rational_to_string(z.im)});
    return arr;
  };

  j["limit"] = {{"nbar", rationals(report.limit_nbar)}, {"values", gaussians(report.limit_values)}};
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["label"] = row.label;
    r["n"] = row.parameter;
    r["vertices"] = row.vertex_count;
    r["nbar"] = rationals(row.nbar_normalized);
    r["coeff_deviation"] = rationals(row.coeff_deviation);
    r["zeta_values"] = gaussians(row.zeta_values);
    r["z_deviation_sq"] = rationals(row.z_deviation_sq, 0);
    r["z_deviation"] = row.z_deviation;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["sup_coeff_deviation"] = rationals(report.sup_coeff_deviation);
  j["sup_z_deviation_sq"] = rationals(report.sup_z_deviation_sq, 0);
  return j.dump();
}

std::string delta_report_to_json(const DeltaGuaranteeReport& report) {
  json j;
  j["delta"] = report.delta;
  j["epsilon_required"] = report.epsilon_required;
  j["epsilon_satisfied"] = report.epsilon_satisfied;
  j["applicable"] = report.applicable;
  j["defects"] = {{"multiplicativity", report.defect.multiplicativity},
                  {"unit", report.defect.unit},
                  {"separation", report.defect.separation}};
  j["t_size"] = report.t_size;
  j["ttilde_size"] = report.ttilde_size;
  j["max_deviation"] = rational_to_string(report.max_deviation);
  j["holds"] = report.holds;
  j["good_fraction"] = report.good_fraction;
  j["good_fraction_lower_bound"] = report.good_fraction_lower_bound;
  json classes = json::array();
  for (const auto& row : report.per_class)
    classes.push_back({{"key", row.key.hex()},
                       {"sofic_frequency", rational_to_string(row.sofic_frequency)},
                       {"cover_frequency", rational_to_string(row.cover_frequency)},
                       {"deviation", rational_to_string(row.deviation)}});
  j["classes"] = std::move(classes);
  return j.dump();
}

GaussianRational parse_eval_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {rational_from_string(text), Rational(0)};
  return {rational_from_string(text.substr(0, comma)),
          rational_from_string(text.substr(comma + 1))};
}

}  // namespace ihara::io
