#include "ihara/periodic.hpp"

namespace ihara {

VoltageGraph<ZVec> lattice_voltage_graph(int dim) {
  std::vector<LabeledEdge<ZVec>> edges;
  for (int k = 0; k < dim; ++k) edges.push_back({0, 0, ZVec::unit(dim, k)});
  return VoltageGraph<ZVec>(1, ZVec::identity(dim), edges);
}

VoltageGraph<ZVec> ladder_voltage_graph() {
  std::vector<LabeledEdge<ZVec>> edges;
  edges.push_back({0, 1, ZVec::identity(1)});  // rung
  edges.push_back({0, 0, ZVec::unit(1, 0)});   // rails
  edges.push_back({1, 1, ZVec::unit(1, 0)});
  return VoltageGraph<ZVec>(2, ZVec::identity(1), edges);
}

VoltageGraph<ZVec> honeycomb_voltage_graph() {
  std::vector<LabeledEdge<ZVec>> edges;
  edges.push_back({0, 1, ZVec::identity(2)});
  edges.push_back({0, 1, ZVec::unit(2, 0)});
  edges.push_back({0, 1, ZVec::unit(2, 1)});
  return VoltageGraph<ZVec>(2, ZVec::identity(2), edges);
}

VoltageGraph<FreeWord> free_cayley_voltage_graph(int rank) {
  if (rank < 1) throw std::invalid_argument("free rank must be >= 1");
  std::vector<LabeledEdge<FreeWord>> edges;
  for (int k = 1; k <= rank; ++k) edges.push_back({0, 0, FreeWord::generator(k)});
  return VoltageGraph<FreeWord>(1, FreeWord::identity(), edges);
}

}  // namespace ihara
