#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainpaths {

enum class ErrorCode {
  duplicate_domain_point,
  non_monotone_image,
  point_out_of_range,
  invalid_size,
  size_mismatch,
  not_in_class,
  bad_character,
  wrong_endpoint,
  profile_inconsistent,
  inexact_division,
  non_integral_recurrence,
  size_guard_exceeded,
  invalid_argument,
  parse_error,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library. The code is stable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chainpaths
