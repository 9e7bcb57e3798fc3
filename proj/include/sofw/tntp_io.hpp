#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sofw/net_model.hpp"

namespace sofw {

struct NetFileMetadata {
  int n_zones = 0;
  int n_nodes = 0;
  int n_links = 0;
  int first_thru_node = 0;  // 1-based, as in the file
};

struct ParsedNet {
  NetFileMetadata meta;
  std::vector<LinkParams> links;  // 1-based node ids; converted by Network::build
  std::vector<std::string> warnings;
};

/// Parse a TNTP network file. Field order per row:
/// init_node term_node capacity length free_flow_time b power speed toll link_type ;
ParsedNet parse_net(std::string_view text);

struct ParsedTrips {
  int n_zones = 0;
  double declared_total = 0.0;
  DemandMatrix demand;
  IngestReport report;
};

/// Parse a TNTP trips file: `Origin i` blocks with `j : v;` entries.
ParsedTrips parse_trips(std::string_view text);

/// Emit link flows with their current travel times. One row per link,
/// `tail head flow cost`, 1-based node ids, 17 significant digits.
void write_flows(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                 double objective, std::ostream& out);

struct FlowsFile {
  double objective = 0.0;
  std::vector<std::pair<int, int>> endpoints;  // 1-based
  Eigen::VectorXd flows;
  Eigen::VectorXd costs;
};

FlowsFile read_flows(std::istream& in);

/// File-based conveniences used by the CLI and tests.
Network load_network(const std::string& path, std::vector<std::string>* warnings = nullptr);
ParsedTrips load_trips(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace sofw
