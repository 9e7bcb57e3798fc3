#pragma once

#include <stdexcept>
#include <string>

namespace sofw {

/// Error kinds raised by the library. Each maps to one failure mode of a
/// public operation; tests discriminate on the code, messages carry context.
enum class Errc {
  // network construction
  node_id_out_of_range,
  non_positive_capacity,
  negative_parameter,
  self_loop,
  // file parsing
  missing_metadata_key,
  row_arity,
  non_numeric_field,
  link_count_mismatch,
  malformed_entry,
  // shortest paths / loading
  non_positive_cost,
  unreachable_destination,
  // cost model
  negative_flow,
  infeasible_endpoint,
  non_finite_value,
  // generic
  precondition,
  bad_config,
  io_failure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace sofw
