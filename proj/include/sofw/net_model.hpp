#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sofw {

using NodeId = std::int32_t;
using LinkId = std::int32_t;

/// Per-link parameters of the congestion model. `toll` and `length` are
/// carried through from the input files but do not enter the cost function.
struct LinkParams {
  NodeId tail = 0;
  NodeId head = 0;
  double free_flow_time = 0.0;
  double capacity = 0.0;
  double bpr_coefficient = 0.0;
  double bpr_power = 1.0;
  double toll = 0.0;
  double length = 0.0;
};

struct BuildOptions {
  bool allow_self_loops = false;
};

/// Immutable directed road network. Link ids are the positions of the input
/// link list; node and link ids are dense and 0-based internally, converted
/// from the 1-based external convention at construction.
class Network {
 public:
  /// `links` carries 1-based tail/head ids in [1, n_nodes]; `first_thru_node`
  /// is the 1-based external value. Validates all link parameters and builds
  /// the CSR adjacency.
  static Network build(std::vector<LinkParams> links, int n_nodes, int n_zones,
                       int first_thru_node, BuildOptions options = {});

  int n_nodes() const { return n_nodes_; }
  int n_zones() const { return n_zones_; }
  int n_links() const { return static_cast<int>(links_.size()); }

  /// 0-based: nodes with id < first_thru_node() may not carry through traffic.
  NodeId first_thru_node() const { return first_thru_node_; }
  /// The 1-based value from the dataset metadata.
  int first_thru_node_external() const { return first_thru_node_ + 1; }

  const LinkParams& link(LinkId e) const { return links_[static_cast<std::size_t>(e)]; }
  const std::vector<LinkParams>& links() const { return links_; }

  /// Outgoing link ids of `node`, in ascending link-id order.
  std::span<const LinkId> out_links(NodeId node) const {
    const auto begin = offsets_[static_cast<std::size_t>(node)];
    const auto end = offsets_[static_cast<std::size_t>(node) + 1];
    return {out_links_.data() + begin, static_cast<std::size_t>(end - begin)};
  }

  std::span<const std::int64_t> adjacency_offsets() const { return offsets_; }

 private:
  Network() = default;

  int n_nodes_ = 0;
  int n_zones_ = 0;
  NodeId first_thru_node_ = 0;
  std::vector<LinkParams> links_;
  std::vector<std::int64_t> offsets_;
  std::vector<LinkId> out_links_;
};

struct DemandEntry {
  NodeId destination = 0;  // 0-based
  double demand = 0.0;
};

struct IngestReport {
  int dropped_zero = 0;
  int dropped_diagonal = 0;
  std::vector<std::string> warnings;
};

/// OD triple with 1-based node ids, as read from a trips file.
struct OdTriple {
  int origin = 0;
  int destination = 0;
  double demand = 0.0;
};

/// Immutable per-origin demand lists. Origins appear in ascending node-id
/// order and carry only positive off-diagonal demands; duplicate (i,j)
/// entries are summed at construction. Totals are accumulated in a fixed
/// order: destinations ascending within an origin, origins ascending.
class DemandMatrix {
 public:
  static DemandMatrix build(const std::vector<OdTriple>& trips, int n_zones,
                            IngestReport* report = nullptr);

  int n_origins() const { return static_cast<int>(origins_.size()); }
  int n_zones() const { return n_zones_; }
  int n_od_pairs() const { return static_cast<int>(entries_.size()); }

  NodeId origin(int index) const { return origins_[static_cast<std::size_t>(index)]; }

  std::span<const DemandEntry> entries(int index) const {
    const auto begin = entry_offsets_[static_cast<std::size_t>(index)];
    const auto end = entry_offsets_[static_cast<std::size_t>(index) + 1];
    return {entries_.data() + begin, static_cast<std::size_t>(end - begin)};
  }

  double origin_total(int index) const { return origin_totals_[static_cast<std::size_t>(index)]; }
  double grand_total() const { return grand_total_; }

  /// Index of the origin with node id `node`, or -1.
  int origin_index(NodeId node) const;

 private:
  int n_zones_ = 0;
  std::vector<NodeId> origins_;
  std::vector<std::size_t> entry_offsets_;
  std::vector<DemandEntry> entries_;
  std::vector<double> origin_totals_;
  double grand_total_ = 0.0;
};

}  // namespace sofw
