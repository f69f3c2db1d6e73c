#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainpaths {

/// Exact nonnegative counts. No result in this library ever passes through floating point.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rationals, used only where a recurrence carries a fractional coefficient.
using BigRational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigCount& value);

/// C(n, k); zero outside 0 <= k <= n.
BigCount binomial(long n, long k);

BigCount power(long base, unsigned exponent);

/// numerator / denominator, throwing ErrorCode::inexact_division on a nonzero remainder.
/// `context` names the formula in the error message.
BigCount exact_div(const BigCount& numerator, const BigCount& denominator, std::string_view context);

}  // namespace chainpaths
