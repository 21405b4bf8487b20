#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace temposync {

/// 1-based node index into the shared vertex set of a temporal network.
using NodeId = int;

enum class ErrorCode {
  CycleDetected,
  SelfLoop,
  DuplicateEdge,
  NodeOutOfRange,
  BadArgument,
  Parse,
  Infeasible,
  NumericalFailure,
  BudgetTooLarge,
  DegenerateBox,
  StepTooLarge,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Directed interaction edge, stored in physical direction: `from`
/// influences `to`. Adjacency convention: A(to, from) = 1.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  }
};

struct SnapshotIssue {
  ErrorCode code;
  std::string message;
  std::vector<NodeId> cycle;  // populated for CycleDetected, first = last
};

/// Checks the snapshot invariants (node range, no self-loops, no duplicate
/// edges, acyclicity) without constructing anything. Returns the first
/// violation found, or nullopt when the edge set is a valid DAG.
/// Acyclicity is decided by iterated root removal.
std::optional<SnapshotIssue> check_snapshot(int num_nodes,
                                            const std::vector<Edge>& edges);

/// One interaction graph of a temporal network. Always a DAG over nodes
/// 1..num_nodes; isolated nodes are permitted. Immutable after construction.
class Snapshot {
 public:
  /// Throws Error if the edge set violates any invariant.
  Snapshot(int num_nodes, std::vector<Edge> edges);

  int num_nodes() const { return num_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& in_neighbors(NodeId v) const {
    return in_[static_cast<size_t>(v - 1)];
  }
  const std::vector<NodeId>& out_neighbors(NodeId v) const {
    return out_[static_cast<size_t>(v - 1)];
  }
  int in_degree(NodeId v) const {
    return static_cast<int>(in_neighbors(v).size());
  }
  /// A topological order of all nodes (edges point forward in it).
  const std::vector<NodeId>& topological_order() const { return topo_; }

 private:
  int num_nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<NodeId> topo_;
};

/// Nodes with in-degree 0, sorted ascending. Never empty for a valid DAG.
std::vector<NodeId> roots(const Snapshot& g);

/// In-degree Laplacian L = D - A with A(to, from) = 1 per stored edge.
/// Every row sums to zero.
Eigen::MatrixXd laplacian(const Snapshot& g);

/// Number of edges on the longest directed path (0 for an edgeless
/// snapshot). This is the depth a synchronization wave has to travel.
int propagation_depth(const Snapshot& g);

/// Ordered sequence of DAG snapshots over a fixed node set, each active for
/// duration tau. Immutable after construction.
class TemporalNetwork {
 public:
  /// Throws Error unless num_nodes >= 1, tau > 0, at least one snapshot,
  /// and all snapshots share num_nodes.
  TemporalNetwork(int num_nodes, double tau, std::vector<Snapshot> snapshots);

  int num_nodes() const { return num_nodes_; }
  double tau() const { return tau_; }
  int num_snapshots() const { return static_cast<int>(snapshots_.size()); }
  /// 1-based snapshot access: k in 1..num_snapshots().
  const Snapshot& snapshot(int k) const {
    return snapshots_[static_cast<size_t>(k - 1)];
  }
  const std::vector<Snapshot>& snapshots() const { return snapshots_; }
  std::vector<NodeId> all_nodes() const;

 private:
  int num_nodes_;
  double tau_;
  std::vector<Snapshot> snapshots_;
};

/// Layered stacking of all snapshots. Layer 0 carries the pinning
/// variables and has no intra-layer edges; layer k (1..T) mirrors snapshot
/// k and additionally receives one inter-layer edge (r, k-1) -> (r, k) for
/// every root r of snapshot k. Node (v, layer) maps to the flat index
/// layer * N + (v - 1).
class FusedGraph {
 public:
  int num_nodes() const { return num_nodes_; }
  int num_layers() const { return num_layers_; }  // T + 1
  int flat_index(NodeId v, int layer) const {
    return layer * num_nodes_ + (v - 1);
  }
  int total_nodes() const { return num_nodes_ * num_layers_; }

  /// Intra-layer edges of layer k (empty for k = 0).
  const std::vector<Edge>& intra_edges(int layer) const {
    return intra_[static_cast<size_t>(layer)];
  }
  /// Roots of snapshot k, i.e. the targets of the inter-layer edges
  /// entering layer k (empty for k = 0).
  const std::vector<NodeId>& inter_targets(int layer) const {
    return inter_[static_cast<size_t>(layer)];
  }
  const std::vector<int>& in_edges_flat(int flat) const {
    return in_flat_[static_cast<size_t>(flat)];
  }
  const std::vector<int>& out_edges_flat(int flat) const {
    return out_flat_[static_cast<size_t>(flat)];
  }

 private:
  friend FusedGraph build_fused(const TemporalNetwork& tn);
  int num_nodes_ = 0;
  int num_layers_ = 0;
  std::vector<std::vector<Edge>> intra_;
  std::vector<std::vector<NodeId>> inter_;
  std::vector<std::vector<int>> in_flat_;
  std::vector<std::vector<int>> out_flat_;
};

FusedGraph build_fused(const TemporalNetwork& tn);

/// Laplacian of the fused graph treated as one digraph, N*(T+1) square.
/// Layer-0 rows are zero; a root row in layer k has +1/-1 against its
/// layer k-1 copy; a non-root row carries its in-degree against its
/// same-layer in-neighbors.
Eigen::MatrixXd fused_laplacian(const FusedGraph& fg);

}  // namespace temposync
