#include "cicover/bigint.hpp"

namespace cicover {

Int int_pow(const Int& base, unsigned long exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  // result stays integral after each division: it equals C(n, i) there.
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace cicover
