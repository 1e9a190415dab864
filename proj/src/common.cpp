#include "t5census/common.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace t5census {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string i128_to_string(i128 v) {
  if (v < 0) return "-" + u128_to_string(static_cast<u128>(-v));
  return u128_to_string(static_cast<u128>(v));
}

u128 u128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer string");
  u128 v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad integer string: " + s);
    u128 next = v * 10 + static_cast<unsigned>(c - '0');
    if (next < v) throw std::invalid_argument("integer overflow: " + s);
    v = next;
  }
  return v;
}

Rational parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '-') { neg = true; ++i; }
  std::int64_t num = 0, den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + s);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal: " + s);
    seen_digit = true;
    if (num > (INT64_MAX - 9) / 10) throw std::invalid_argument("decimal too large: " + s);
    num = num * 10 + (c - '0');
    if (seen_dot) {
      if (den > INT64_MAX / 10) throw std::invalid_argument("decimal too precise: " + s);
      den *= 10;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal: " + s);
  std::int64_t g = std::gcd(num, den);
  if (g > 1) { num /= g; den /= g; }
  if (neg) num = -num;
  return Rational{num, den};
}

double rational_value(const Rational& r) {
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace t5census
