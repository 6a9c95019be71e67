#include "ihara/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ihara {

namespace {

constexpr char kUncoloredTag = 'U';
constexpr char kColoredTag = 'C';

void append_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

int read_u16(const std::string& in, std::size_t& pos) {
  if (pos + 2 > in.size()) throw std::invalid_argument("truncated key");
  const int hi = static_cast<unsigned char>(in[pos]);
  const int lo = static_cast<unsigned char>(in[pos + 1]);
  pos += 2;
  return (hi << 8) | lo;
}

using Partition = std::vector<std::vector<int>>;

// Equitable refinement. Cells split by the multiset of neighbor cell ids;
// sub-cells are ordered by signature, which keeps the procedure invariant
// under relabeling.
void refine(const Graph& g, Partition& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> tagged;
      tagged.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(g.neighbors(v).size());
        for (VertexId w : g.neighbors(v)) sig.push_back(cell_of[static_cast<std::size_t>(w)]);
        std::sort(sig.begin(), sig.end());
        tagged.emplace_back(std::move(sig), v);
      }
      std::stable_sort(tagged.begin(), tagged.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= tagged.size(); ++i) {
        if (i == tagged.size() || tagged[i].first != tagged[start].first) {
          std::vector<int> part;
          part.reserve(i - start);
          for (std::size_t k = start; k < i; ++k) part.push_back(tagged[k].second);
          std::sort(part.begin(), part.end());
          next.push_back(std::move(part));
          if (i - start != cell.size()) changed = true;
          start = i;
        }
      }
    }
    cells = std::move(next);
  }
}

std::string encode_with_order(const Graph& g, const std::vector<int>& new_id) {
  std::string out;
  out.push_back(kUncoloredTag);
  append_u16(out, g.vertex_count());
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    position[static_cast<std::size_t>(new_id[static_cast<std::size_t>(v)])] = v;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int v = position[static_cast<std::size_t>(i)];
    std::vector<int> row;
    row.reserve(g.neighbors(v).size());
    for (VertexId w : g.neighbors(v)) row.push_back(new_id[static_cast<std::size_t>(w)]);
    std::sort(row.begin(), row.end());
    append_u16(out, static_cast<int>(row.size()));
    for (int w : row) append_u16(out, w);
  }
  return out;
}

void search_min_encoding(const Graph& g, Partition cells, std::string& best) {
  refine(g, cells);

  // smallest non-singleton cell, first among ties
  std::size_t target = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
      target = c;
  }

  if (target == cells.size()) {
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t c = 0; c < cells.size(); ++c) new_id[static_cast<std::size_t>(cells[c][0])] = static_cast<int>(c);
    std::string enc = encode_with_order(g, new_id);
    if (best.empty() || enc < best) best = std::move(enc);
    return;
  }

  for (int v : cells[target]) {
    Partition branched;
    branched.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == target) {
        branched.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        branched.push_back(std::move(rest));
      } else {
        branched.push_back(cells[c]);
      }
    }
    search_min_encoding(g, std::move(branched), best);
  }
}

}  // namespace

std::string BallClassKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

BallClassKey BallClassKey::from_hex(const std::string& text) {
  if (text.size() % 2 != 0) throw std::invalid_argument("odd hex key length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit in key");
  };
  BallClassKey key;
  key.bytes.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2)
    key.bytes.push_back(static_cast<char>((nibble(text[i]) << 4) | nibble(text[i + 1])));
  return key;
}

std::size_t BallClassKey::Hash::operator()(const BallClassKey& k) const {
  return std::hash<std::string>()(k.bytes);
}

BallClassKey canonical_key(const RootedBall& b) {
  if (!b.graph.is_connected()) throw std::invalid_argument("rooted ball must be connected");
  const int n = b.graph.vertex_count();
  Partition cells;
  cells.push_back({b.root});
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != b.root) rest.push_back(v);
  if (!rest.empty()) cells.push_back(std::move(rest));
  std::string best;
  search_min_encoding(b.graph, std::move(cells), best);
  return BallClassKey{std::move(best)};
}

BallClassKey canonical_key(const ColoredGraph& g, VertexId root) {
  require_vertex(g.graph(), root);
  if (!g.graph().is_connected()) throw std::invalid_argument("rooted colored graph must be connected");

  const int n = g.graph().vertex_count();
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> order;
  order.push_back(root);
  new_id[static_cast<std::size_t>(root)] = 0;

  std::string out;
  out.push_back(kColoredTag);
  append_u16(out, n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    const auto nbrs = g.graph().neighbors(v);
    const auto cols = g.colors_at(v);
    std::vector<std::pair<int, VertexId>> by_color;
    by_color.reserve(nbrs.size());
    for (std::size_t k = 0; k < nbrs.size(); ++k) by_color.emplace_back(cols[k], nbrs[k]);
    std::sort(by_color.begin(), by_color.end());
    append_u16(out, static_cast<int>(by_color.size()));
    for (const auto& [c, w] : by_color) {
      if (new_id[static_cast<std::size_t>(w)] < 0) {
        new_id[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
      }
      append_u16(out, c);
      append_u16(out, new_id[static_cast<std::size_t>(w)]);
    }
  }
  return BallClassKey{std::move(out)};
}

BallClassKey canonical_key(const RootedBall& b, const ColoredGraph& ambient_colors) {
  const auto ball_edges = b.graph.edges();
  std::vector<int> colors;
  colors.reserve(ball_edges.size());
  for (const auto& [u, v] : ball_edges)
    colors.push_back(ambient_colors.edge_color(b.original_id[static_cast<std::size_t>(u)],
                                               b.original_id[static_cast<std::size_t>(v)]));
  return canonical_key(ColoredGraph(b.graph, colors, ambient_colors.color_bound()), b.root);
}

RootedBall decode_uncolored_key(const BallClassKey& key, int radius) {
  std::size_t pos = 0;
  if (key.bytes.empty() || key.bytes[pos] != kUncoloredTag)
    throw std::invalid_argument("not an uncolored ball key");
  ++pos;
  const int n = read_u16(key.bytes, pos);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    const int deg = read_u16(key.bytes, pos);
    for (int k = 0; k < deg; ++k) {
      const int w = read_u16(key.bytes, pos);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  RootedBall b;
  b.graph = Graph::from_edges(n, edges);
  b.root = 0;
  b.radius = radius;
  b.original_id.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) b.original_id[static_cast<std::size_t>(v)] = v;
  return b;
}

namespace {

template <class KeyAt>
std::optional<int> similarity_radius_impl(VertexId x, VertexId y, int r_max, KeyAt key_at) {
  if (r_max < 0) throw std::invalid_argument("negative search radius");
  for (int r = 0; r <= r_max; ++r)
    if (!(key_at(x, r) == key_at(y, r))) return r - 1;
  return std::nullopt;  // balls agree at every radius searched
}

}  // namespace

std::optional<int> similarity_radius(const Graph& g, VertexId x, VertexId y, int r_max) {
  return similarity_radius_impl(x, y, r_max, [&](VertexId v, int r) {
    return canonical_key(ball(g, v, r));
  });
}

std::optional<int> similarity_radius(const ColoredGraph& g, VertexId x, VertexId y, int r_max) {
  return similarity_radius_impl(x, y, r_max, [&](VertexId v, int r) {
    const ColoredBall cb = colored_ball(g, v, r);
    return canonical_key(cb.graph, cb.root);
  });
}

}  // namespace ihara
