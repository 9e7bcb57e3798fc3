#include "sofw/net_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sofw/error.hpp"

namespace sofw {

Network Network::build(std::vector<LinkParams> links, int n_nodes, int n_zones,
                       int first_thru_node, BuildOptions options) {
  if (n_nodes <= 0) fail(Errc::precondition, "n_nodes must be positive");
  if (n_zones < 0 || n_zones > n_nodes) fail(Errc::precondition, "n_zones out of range");
  if (first_thru_node < 1 || first_thru_node > n_nodes + 1)
    fail(Errc::precondition, "first_thru_node outside [1, n_nodes + 1]");

  for (std::size_t i = 0; i < links.size(); ++i) {
    LinkParams& lp = links[i];
    const std::string at = "link " + std::to_string(i);
    if (lp.tail < 1 || lp.tail > n_nodes || lp.head < 1 || lp.head > n_nodes)
      fail(Errc::node_id_out_of_range, at + ": node ids " + std::to_string(lp.tail) + "->" +
                                           std::to_string(lp.head) + " outside [1, " +
                                           std::to_string(n_nodes) + "]");
    if (lp.tail == lp.head && !options.allow_self_loops)
      fail(Errc::self_loop, at + ": self-loop at node " + std::to_string(lp.tail));
    if (!(lp.capacity > 0.0))
      fail(Errc::non_positive_capacity, at + ": capacity " + std::to_string(lp.capacity));
    if (lp.free_flow_time < 0.0) fail(Errc::negative_parameter, at + ": free_flow_time < 0");
    if (lp.bpr_coefficient < 0.0) fail(Errc::negative_parameter, at + ": bpr_coefficient < 0");
    if (lp.bpr_power < 1.0) fail(Errc::negative_parameter, at + ": bpr_power < 1");
    if (lp.toll < 0.0) fail(Errc::negative_parameter, at + ": toll < 0");
    if (lp.length < 0.0) fail(Errc::negative_parameter, at + ": length < 0");
    if (!std::isfinite(lp.capacity) || !std::isfinite(lp.free_flow_time) ||
        !std::isfinite(lp.bpr_coefficient) || !std::isfinite(lp.bpr_power))
      fail(Errc::non_finite_value, at + ": non-finite parameter");
    lp.tail -= 1;  // to internal 0-based ids
    lp.head -= 1;
  }

  Network net;
  net.n_nodes_ = n_nodes;
  net.n_zones_ = n_zones;
  net.first_thru_node_ = first_thru_node - 1;
  net.links_ = std::move(links);

  // counting sort of link ids by tail; input order kept within each node
  net.offsets_.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
  for (const LinkParams& lp : net.links_) net.offsets_[static_cast<std::size_t>(lp.tail) + 1]++;
  for (std::size_t v = 1; v < net.offsets_.size(); ++v) net.offsets_[v] += net.offsets_[v - 1];
  net.out_links_.resize(net.links_.size());
  std::vector<std::int64_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
  for (std::size_t e = 0; e < net.links_.size(); ++e)
    net.out_links_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(net.links_[e].tail)]++)] =
        static_cast<LinkId>(e);
  return net;
}

DemandMatrix DemandMatrix::build(const std::vector<OdTriple>& trips, int n_zones,
                                 IngestReport* report) {
  if (n_zones <= 0) fail(Errc::precondition, "n_zones must be positive");

  IngestReport local;
  IngestReport& rep = report ? *report : local;

  // (origin, destination) -> summed demand, both keys ascending
  std::map<std::pair<int, int>, double> cells;
  for (const OdTriple& t : trips) {
    if (t.origin < 1 || t.origin > n_zones || t.destination < 1 || t.destination > n_zones)
      fail(Errc::node_id_out_of_range, "OD pair (" + std::to_string(t.origin) + ", " +
                                           std::to_string(t.destination) + ") outside zones [1, " +
                                           std::to_string(n_zones) + "]");
    if (t.demand < 0.0 || !std::isfinite(t.demand))
      fail(Errc::precondition, "demand for (" + std::to_string(t.origin) + ", " +
                                   std::to_string(t.destination) + ") must be finite and >= 0");
    if (t.demand == 0.0) {
      rep.dropped_zero++;
      continue;
    }
    if (t.origin == t.destination) {
      rep.dropped_diagonal++;
      continue;
    }
    cells[{t.origin, t.destination}] += t.demand;
  }
  if (rep.dropped_diagonal > 0)
    rep.warnings.push_back("dropped " + std::to_string(rep.dropped_diagonal) +
                           " diagonal (origin == destination) demand entries");

  DemandMatrix dm;
  dm.n_zones_ = n_zones;
  dm.entry_offsets_.push_back(0);
  int current_origin = -1;
  double origin_total = 0.0;
  double grand_total = 0.0;
  auto close_origin = [&] {
    if (current_origin < 0) return;
    dm.origin_totals_.push_back(origin_total);
    dm.entry_offsets_.push_back(dm.entries_.size());
    grand_total += origin_total;
  };
  for (const auto& [key, demand] : cells) {
    if (key.first != current_origin) {
      close_origin();
      current_origin = key.first;
      origin_total = 0.0;
      dm.origins_.push_back(static_cast<NodeId>(key.first - 1));
    }
    dm.entries_.push_back({static_cast<NodeId>(key.second - 1), demand});
    origin_total += demand;
  }
  close_origin();
  dm.grand_total_ = grand_total;
  return dm;
}

int DemandMatrix::origin_index(NodeId node) const {
  const auto it = std::lower_bound(origins_.begin(), origins_.end(), node);
  if (it == origins_.end() || *it != node) return -1;
  return static_cast<int>(it - origins_.begin());
}

}  // namespace sofw
