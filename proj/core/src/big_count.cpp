#include "chainpaths/big_count.hpp"

#include "chainpaths/errors.hpp"

namespace chainpaths {

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  // Each partial product is C(n - k + i, i), so the division is exact at every step.
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount power(long base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

BigCount exact_div(const BigCount& numerator, const BigCount& denominator, std::string_view context) {
  if (denominator == 0) {
    throw Error(ErrorCode::inexact_division, std::string(context) + ": division by zero");
  }
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorCode::inexact_division, std::string(context) + ": " + numerator.str() + " / " +
                                                 denominator.str() + " leaves remainder " +
                                                 remainder.str());
  }
  return quotient;
}

}  // namespace chainpaths
