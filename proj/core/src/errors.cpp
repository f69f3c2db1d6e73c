#include "chainpaths/errors.hpp"

namespace chainpaths {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::duplicate_domain_point: return "DuplicateDomainPoint";
    case ErrorCode::non_monotone_image: return "NonMonotoneImage";
    case ErrorCode::point_out_of_range: return "PointOutOfRange";
    case ErrorCode::invalid_size: return "InvalidSize";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_in_class: return "NotInClass";
    case ErrorCode::bad_character: return "BadCharacter";
    case ErrorCode::wrong_endpoint: return "WrongEndpoint";
    case ErrorCode::profile_inconsistent: return "ProfileInconsistent";
    case ErrorCode::inexact_division: return "InexactDivision";
    case ErrorCode::non_integral_recurrence: return "NonIntegralRecurrence";
    case ErrorCode::size_guard_exceeded: return "SizeGuardExceeded";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace chainpaths
