#include "sofw/error.hpp"

namespace sofw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::node_id_out_of_range: return "NodeIdOutOfRange";
    case Errc::non_positive_capacity: return "NonPositiveCapacity";
    case Errc::negative_parameter: return "NegativeParameter";
    case Errc::self_loop: return "SelfLoop";
    case Errc::missing_metadata_key: return "MissingMetadataKey";
    case Errc::row_arity: return "RowArity";
    case Errc::non_numeric_field: return "NonNumericField";
    case Errc::link_count_mismatch: return "LinkCountMismatch";
    case Errc::malformed_entry: return "MalformedEntry";
    case Errc::non_positive_cost: return "NonPositiveCost";
    case Errc::unreachable_destination: return "UnreachableDestination";
    case Errc::negative_flow: return "NegativeFlow";
    case Errc::infeasible_endpoint: return "InfeasibleEndpoint";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::precondition: return "Precondition";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_failure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace sofw
