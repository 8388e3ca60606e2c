#include "spinrep/weight.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace spinrep {

Weight::Weight(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim)
    throw InvalidArgument("weight dimension " + std::to_string(dim) + " outside [0, " +
                          std::to_string(kMaxDim) + "]");
}

Weight Weight::from_twice(std::span<const int> twice) {
  Weight w(static_cast<int>(twice.size()));
  for (std::size_t i = 0; i < twice.size(); ++i) w.c_[i] = twice[i];
  return w;
}

Weight Weight::from_twice(std::initializer_list<int> twice) {
  return from_twice(std::span<const int>(twice.begin(), twice.size()));
}

Weight Weight::integral(std::span<const int> coords) {
  Weight w(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w.c_[i] = 2 * coords[i];
  return w;
}

Weight Weight::integral(std::initializer_list<int> coords) {
  return integral(std::span<const int>(coords.begin(), coords.size()));
}

Weight Weight::unit(int dim, int i) {
  Weight w(dim);
  w.c_[i] = 2;
  return w;
}

bool Weight::is_zero() const noexcept {
  for (int i = 0; i < dim_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_integral() const noexcept {
  for (int i = 0; i < dim_; ++i)
    if (c_[i] % 2 != 0) return false;
  return true;
}

Weight Weight::half() const {
  if (!is_integral()) throw InvalidArgument("cannot halve non-integral weight " + str());
  Weight w(dim_);
  for (int i = 0; i < dim_; ++i) w.c_[i] = c_[i] / 2;
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  w += o;
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  w -= o;
  return w;
}

Weight Weight::operator-() const {
  Weight w(dim_);
  for (int i = 0; i < dim_; ++i) w.c_[i] = -c_[i];
  return w;
}

Weight Weight::operator*(int k) const {
  Weight w(dim_);
  for (int i = 0; i < dim_; ++i) w.c_[i] = k * c_[i];
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

bool Weight::lex_less(const Weight& o) const noexcept {
  return std::lexicographical_compare(c_.begin(), c_.begin() + dim_, o.c_.begin(),
                                      o.c_.begin() + o.dim_);
}

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += to_string(coord(i));
  }
  return s + ")";
}

std::size_t Weight::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(dim_);
  for (int i = 0; i < dim_; ++i) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c_[i])) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

Weight parse_weight(std::string_view text, int dim) {
  std::string s(text);
  std::erase_if(s, [](char ch) { return ch == '(' || ch == ')' || ch == '[' || ch == ']'; });
  std::vector<int> twice;
  std::size_t start = 0;
  if (s.find_first_not_of(" \t") == std::string::npos) {
    if (dim == 0) return Weight(0);
    throw InvalidArgument("empty weight");
  }
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Rational q = parse_rational(part);
    Rational t = q * 2;
    if (t.denominator() != 1)
      throw InvalidArgument("weight coordinate " + part + " is not a multiple of 1/2");
    twice.push_back(static_cast<int>(t.numerator()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(twice.size()) != dim)
    throw InvalidArgument("weight '" + std::string(text) + "' has " + std::to_string(twice.size()) +
                          " coordinates, expected " + std::to_string(dim));
  return Weight::from_twice(twice);
}

}  // namespace spinrep
