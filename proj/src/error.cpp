#include "motarr/error.hpp"

namespace motarr {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::zero_form: return "ZeroForm";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::zero_unit: return "ZeroUnit";
    case ErrorKind::mixed_arrangement: return "MixedArrangement";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::not_normal_crossing: return "NotNormalCrossing";
    case ErrorKind::non_concrete_coefficient: return "NonConcreteCoefficient";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::cross_check_mismatch: return "CrossCheckMismatch";
    }
    return "Error";
}

}  // namespace motarr
