#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cicover {

// All invariants (K^m, L^m, p_g, product targets) are exact integers; no
// floating point anywhere in the math modules.
using Int = boost::multiprecision::cpp_int;

// base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned long exp);

// Binomial coefficient C(n, k) for integer n >= 0; returns 0 when k < 0 or
// k > n. Computed by the multiplicative formula with exact stepwise division.
Int binomial(long long n, long long k);

// Plain decimal rendering (cpp_int's str(), wrapped for symmetry with parse).
std::string to_decimal(const Int& v);

}  // namespace cicover
