#pragma once

// Data-parallel kernels behind the public API. Each kernel has a serial
// reference and an OpenMP version with identical, order-independent output;
// the tests compare the two and the benchmark target times them.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "meg/graph.hpp"
#include "meg/monitoring.hpp"

namespace meg::kernels {

using FiveSet = std::array<Vertex, 5>;

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g);
// Index (into g.edges()) of the first edge no pair of S monitors.
std::optional<std::size_t> first_unmonitored_edge(const Graph& g, const DistanceMatrix& dist,
                                                  const VertexSet& s);
std::vector<std::optional<Vertex>> mandatory_witnesses(const Graph& g);
MonitorTable monitor_table(const Graph& g);
// Lexicographically first 5-subset inducing two or more P4s.
std::optional<FiveSet> first_p4_violation(const Graph& g);
// Position of the first subset in `subsets` covered by the table.
std::optional<std::size_t> first_covering(const MonitorTable& table,
                                          std::span<const std::uint64_t> subsets);

}  // namespace serial

namespace parallel {

DistanceMatrix all_pairs_distances(const Graph& g);
std::optional<std::size_t> first_unmonitored_edge(const Graph& g, const DistanceMatrix& dist,
                                                  const VertexSet& s);
std::vector<std::optional<Vertex>> mandatory_witnesses(const Graph& g);
MonitorTable monitor_table(const Graph& g);
std::optional<FiveSet> first_p4_violation(const Graph& g);
std::optional<std::size_t> first_covering(const MonitorTable& table,
                                          std::span<const std::uint64_t> subsets);

}  // namespace parallel

// A neighbor u of v such that every induced 2-path u-v-x closes into a
// 4-cycle; v is mandatory iff one exists.
std::optional<Vertex> mandatory_witness(const Graph& g, Vertex v);

// Number of induced P4s among the five vertices.
int count_induced_p4(const Graph& g, const FiveSet& five);

}  // namespace meg::kernels
