#pragma once

#include "spinrep/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace spinrep {

inline constexpr int kMaxDim = 8;

// A weight in the coordinate basis of an ambient root system (fundamental
// weights, then torus coordinates). Coordinates are stored doubled so that
// half-integral points such as rho or the halves of spin characters are exact.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int dim);

  static Weight from_twice(std::span<const int> twice);
  static Weight from_twice(std::initializer_list<int> twice);
  static Weight integral(std::span<const int> coords);
  static Weight integral(std::initializer_list<int> coords);
  static Weight unit(int dim, int i);

  int dim() const noexcept { return dim_; }
  int twice(int i) const noexcept { return c_[i]; }
  void set_twice(int i, int v) noexcept { c_[i] = v; }
  Rational coord(int i) const { return Rational(c_[i], 2); }

  bool is_zero() const noexcept;
  bool is_integral() const noexcept;

  // The weight with coordinates halved; requires integral coordinates.
  Weight half() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  bool operator==(const Weight& o) const noexcept = default;
  // Lexicographic on doubled coordinates; used only for deterministic
  // tie-breaking, not as a term order.
  bool lex_less(const Weight& o) const noexcept;

  // "(1, 0, 3/2)" style.
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  std::array<std::int32_t, kMaxDim> c_{};
  std::int32_t dim_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

Weight parse_weight(std::string_view text, int dim);

}  // namespace spinrep
