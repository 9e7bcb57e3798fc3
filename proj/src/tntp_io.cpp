#include "sofw/tntp_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sofw/cost.hpp"
#include "sofw/error.hpp"
#include "sofw/format.hpp"

namespace sofw {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Lines with the comment marker keep only the part before it.
std::string_view strip_comment(std::string_view line) {
  const auto pos = line.find('~');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

struct LineReader {
  std::string_view text;
  int line_no = 0;

  bool next(std::string_view& out) {
    if (text.empty()) return false;
    auto eol = text.find('\n');
    std::string_view line = eol == std::string_view::npos ? text : text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    out = line;
    return true;
  }
};

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double_field(std::string_view tok, int line, int column) {
  const std::string buf(tok);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0')
    fail(Errc::non_numeric_field,
         "line " + std::to_string(line) + ", field " + std::to_string(column) + ": '" + buf + "'");
  return v;
}

int parse_int_field(std::string_view tok, int line, int column) {
  const std::string buf(tok);
  char* end = nullptr;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (end == buf.c_str() || *end != '\0')
    fail(Errc::non_numeric_field, "line " + std::to_string(line) + ", field " +
                                      std::to_string(column) + ": '" + buf + "' is not an integer");
  return static_cast<int>(v);
}

// Metadata line `<KEY> value`; returns false when the line is not metadata.
bool parse_metadata_line(std::string_view line, std::string& key, std::string& value) {
  if (line.empty() || line.front() != '<') return false;
  const auto close = line.find('>');
  if (close == std::string_view::npos) return false;
  key = std::string(trim(line.substr(1, close - 1)));
  value = std::string(trim(line.substr(close + 1)));
  return true;
}

int require_int_meta(const std::string& key, const std::string& raw, int line) {
  char* end = nullptr;
  const std::string t(trim(raw));
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0')
    fail(Errc::non_numeric_field, "line " + std::to_string(line) + ": <" + key + "> value '" + t + "'");
  return static_cast<int>(v);
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace

ParsedNet parse_net(std::string_view text) {
  ParsedNet result;
  LineReader reader{text};
  std::string_view raw;

  bool have_zones = false, have_nodes = false, have_links = false, have_ftn = false;
  bool metadata_done = false;

  while (!metadata_done && reader.next(raw)) {
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    std::string key, value;
    if (!parse_metadata_line(line, key, value))
      fail(Errc::missing_metadata_key,
           "line " + std::to_string(reader.line_no) + ": data row before <END OF METADATA>");
    if (iequals(key, "NUMBER OF ZONES")) {
      result.meta.n_zones = require_int_meta(key, value, reader.line_no);
      have_zones = true;
    } else if (iequals(key, "NUMBER OF NODES")) {
      result.meta.n_nodes = require_int_meta(key, value, reader.line_no);
      have_nodes = true;
    } else if (iequals(key, "NUMBER OF LINKS")) {
      result.meta.n_links = require_int_meta(key, value, reader.line_no);
      have_links = true;
    } else if (iequals(key, "FIRST THRU NODE")) {
      result.meta.first_thru_node = require_int_meta(key, value, reader.line_no);
      have_ftn = true;
    } else if (iequals(key, "END OF METADATA")) {
      metadata_done = true;
    } else {
      result.warnings.push_back("ignoring unknown metadata key <" + key + ">");
    }
  }
  if (!metadata_done) fail(Errc::missing_metadata_key, "<END OF METADATA>");
  if (!have_zones) fail(Errc::missing_metadata_key, "<NUMBER OF ZONES>");
  if (!have_nodes) fail(Errc::missing_metadata_key, "<NUMBER OF NODES>");
  if (!have_links) fail(Errc::missing_metadata_key, "<NUMBER OF LINKS>");
  if (!have_ftn) fail(Errc::missing_metadata_key, "<FIRST THRU NODE>");
  if (result.meta.n_zones <= 0 || result.meta.n_nodes <= 0 || result.meta.n_links <= 0)
    fail(Errc::precondition, "metadata counts must be positive");

  while (reader.next(raw)) {
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto fields = split_fields(line);
    // the row terminator may stand alone or stick to the last field
    if (!fields.empty() && fields.back() == ";") {
      fields.pop_back();
    } else if (!fields.empty() && fields.back().back() == ';') {
      fields.back().remove_suffix(1);
      if (fields.back().empty()) fields.pop_back();
    } else {
      fail(Errc::row_arity,
           "line " + std::to_string(reader.line_no) + ": missing ';' row terminator");
    }
    if (fields.size() != 10)
      fail(Errc::row_arity, "line " + std::to_string(reader.line_no) + ": expected 10 fields, got " +
                                std::to_string(fields.size()));
    LinkParams lp;
    lp.tail = parse_int_field(fields[0], reader.line_no, 1);
    lp.head = parse_int_field(fields[1], reader.line_no, 2);
    lp.capacity = parse_double_field(fields[2], reader.line_no, 3);
    lp.length = parse_double_field(fields[3], reader.line_no, 4);
    lp.free_flow_time = parse_double_field(fields[4], reader.line_no, 5);
    lp.bpr_coefficient = parse_double_field(fields[5], reader.line_no, 6);
    lp.bpr_power = parse_double_field(fields[6], reader.line_no, 7);
    parse_double_field(fields[7], reader.line_no, 8);  // speed: validated, unused
    lp.toll = parse_double_field(fields[8], reader.line_no, 9);
    parse_double_field(fields[9], reader.line_no, 10);  // link_type: validated, unused
    result.links.push_back(lp);
  }
  if (static_cast<int>(result.links.size()) != result.meta.n_links)
    fail(Errc::link_count_mismatch, "declared " + std::to_string(result.meta.n_links) +
                                        " links, parsed " + std::to_string(result.links.size()));
  return result;
}

ParsedTrips parse_trips(std::string_view text) {
  ParsedTrips result;
  LineReader reader{text};
  std::string_view raw;

  bool have_zones = false, have_total = false, metadata_done = false;
  std::vector<std::string> warnings;

  while (!metadata_done && reader.next(raw)) {
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    std::string key, value;
    if (!parse_metadata_line(line, key, value))
      fail(Errc::missing_metadata_key,
           "line " + std::to_string(reader.line_no) + ": data before <END OF METADATA>");
    if (iequals(key, "NUMBER OF ZONES")) {
      result.n_zones = require_int_meta(key, value, reader.line_no);
      have_zones = true;
    } else if (iequals(key, "TOTAL OD FLOW")) {
      result.declared_total = parse_double_field(trim(value), reader.line_no, 1);
      have_total = true;
    } else if (iequals(key, "END OF METADATA")) {
      metadata_done = true;
    } else {
      warnings.push_back("ignoring unknown metadata key <" + key + ">");
    }
  }
  if (!metadata_done) fail(Errc::missing_metadata_key, "<END OF METADATA>");
  if (!have_zones) fail(Errc::missing_metadata_key, "<NUMBER OF ZONES>");
  if (!have_total) fail(Errc::missing_metadata_key, "<TOTAL OD FLOW>");

  std::vector<OdTriple> triples;
  int current_origin = -1;
  while (reader.next(raw)) {
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (!fields.empty() && iequals(fields[0], "Origin")) {
      if (fields.size() != 2)
        fail(Errc::malformed_entry, "line " + std::to_string(reader.line_no) + ": Origin header");
      current_origin = parse_int_field(fields[1], reader.line_no, 2);
      continue;
    }
    if (current_origin < 0)
      fail(Errc::malformed_entry,
           "line " + std::to_string(reader.line_no) + ": entry before any Origin block");
    // entries `j : v;`, several per line
    std::size_t pos = 0;
    const std::string buf(line);
    while (pos < buf.size()) {
      while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
      if (pos >= buf.size()) break;
      char* end = nullptr;
      const long dest = std::strtol(buf.c_str() + pos, &end, 10);
      if (end == buf.c_str() + pos)
        fail(Errc::malformed_entry, "line " + std::to_string(reader.line_no) + " near '" +
                                        buf.substr(pos, 12) + "'");
      pos = static_cast<std::size_t>(end - buf.c_str());
      while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
      if (pos >= buf.size() || buf[pos] != ':')
        fail(Errc::malformed_entry, "line " + std::to_string(reader.line_no) + ": expected ':'");
      ++pos;
      const double v = std::strtod(buf.c_str() + pos, &end);
      if (end == buf.c_str() + pos)
        fail(Errc::malformed_entry,
             "line " + std::to_string(reader.line_no) + ": expected demand value");
      pos = static_cast<std::size_t>(end - buf.c_str());
      while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
      if (pos >= buf.size() || buf[pos] != ';')
        fail(Errc::malformed_entry, "line " + std::to_string(reader.line_no) + ": expected ';'");
      ++pos;
      triples.push_back({current_origin, static_cast<int>(dest), v});
    }
  }

  result.demand = DemandMatrix::build(triples, result.n_zones, &result.report);
  for (auto& w : warnings) result.report.warnings.push_back(std::move(w));

  const double computed = result.demand.grand_total();
  const double declared = result.declared_total;
  const double scale = std::max(1.0, std::abs(declared));
  if (std::abs(computed - declared) > 1e-6 * scale)
    result.report.warnings.push_back("TotalFlowMismatch: declared " + to_g17(declared) +
                                     ", computed " + to_g17(computed));
  return result;
}

void write_flows(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                 double objective, std::ostream& out) {
  if (flows.size() != net.n_links())
    fail(Errc::precondition, "flow vector length " + std::to_string(flows.size()) +
                                 " != n_links " + std::to_string(net.n_links()));
  out << "~ objective " << to_g17(objective) << "\n";
  out << "~ init term flow cost\n";
  for (LinkId e = 0; e < net.n_links(); ++e) {
    const LinkParams& lp = net.link(e);
    out << (lp.tail + 1) << ' ' << (lp.head + 1) << ' ' << to_g17(flows[e]) << ' '
        << to_g17(link_travel_time(lp, flows[e])) << "\n";
  }
  if (!out) fail(Errc::io_failure, "flow sink write failed");
}

FlowsFile read_flows(std::istream& in) {
  FlowsFile file;
  std::string line;
  std::vector<double> flows, costs;
  bool have_objective = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '~') {
      auto fields = split_fields(view.substr(1));
      if (fields.size() == 2 && iequals(fields[0], "objective")) {
        file.objective = parse_double_field(fields[1], line_no, 2);
        have_objective = true;
      }
      continue;
    }
    auto fields = split_fields(view);
    if (fields.size() != 4)
      fail(Errc::row_arity, "line " + std::to_string(line_no) + ": expected 4 fields");
    file.endpoints.emplace_back(parse_int_field(fields[0], line_no, 1),
                                parse_int_field(fields[1], line_no, 2));
    flows.push_back(parse_double_field(fields[2], line_no, 3));
    costs.push_back(parse_double_field(fields[3], line_no, 4));
  }
  if (!have_objective) fail(Errc::missing_metadata_key, "objective header");
  file.flows = Eigen::Map<const Eigen::VectorXd>(flows.data(), static_cast<Eigen::Index>(flows.size()));
  file.costs = Eigen::Map<const Eigen::VectorXd>(costs.data(), static_cast<Eigen::Index>(costs.size()));
  return file;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_failure, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network load_network(const std::string& path, std::vector<std::string>* warnings) {
  ParsedNet parsed = parse_net(read_text_file(path));
  if (warnings) *warnings = parsed.warnings;
  return Network::build(std::move(parsed.links), parsed.meta.n_nodes, parsed.meta.n_zones,
                        parsed.meta.first_thru_node);
}

ParsedTrips load_trips(const std::string& path) { return parse_trips(read_text_file(path)); }

}  // namespace sofw
