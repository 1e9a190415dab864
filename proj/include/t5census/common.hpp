#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace t5census {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kMaxVertices = 64;

// Thrown when an operation would exceed its documented size/budget limits.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a cache or checkpoint file fails validation.
class cache_error : public std::runtime_error {
 public:
  explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

using u128 = unsigned __int128;
using i128 = __int128;

std::string u128_to_string(u128 v);
std::string i128_to_string(i128 v);
u128 u128_from_string(const std::string& s);

// Exact nonnegative rational, used where decimal CLI input must stay exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Parses "0.05" -> 1/20, "3" -> 3/1. Rejects anything that is not a plain decimal.
Rational parse_decimal(const std::string& s);
double rational_value(const Rational& r);

// splitmix64, used to derive independent per-case seeds from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace t5census
