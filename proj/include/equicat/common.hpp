#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace equicat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad input data (malformed tables, violated axioms). CLI exit code 3.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unparseable instance file. CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configured size limit exceeded. CLI exit code 5.
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity the engine relies on failed; signals a bug or an
// inconsistent instance that slipped past validation. Never swallowed.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return a | b;
  return a / std::gcd(a, b) * b;
}

// Largest d with d*d <= n.
inline long long isqrt_ll(long long n) {
  if (n < 0) throw internal_error("isqrt of negative");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline int mod_norm(long long v, int m) {
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace equicat
