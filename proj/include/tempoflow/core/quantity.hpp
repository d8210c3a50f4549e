#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace tempoflow {

/// Non-negative amount in the smallest indivisible unit. The all-ones bit
/// pattern is reserved for INFINITE, which absorbs addition and subtraction.
class Quantity {
 public:
  using rep = std::uint64_t;
  static constexpr rep kInfiniteRep = std::numeric_limits<rep>::max();

  constexpr Quantity() = default;
  constexpr explicit Quantity(rep value) : value_(value) {}

  static constexpr Quantity infinite() { return Quantity(kInfiniteRep); }
  static constexpr Quantity zero() { return Quantity(0); }

  constexpr bool is_infinite() const { return value_ == kInfiniteRep; }
  constexpr bool is_zero() const { return value_ == 0; }
  constexpr rep value() const { return value_; }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;

  // Throws DataError when a finite sum would reach the sentinel.
  Quantity& operator+=(Quantity other);
  // INFINITE - finite stays INFINITE; finite - larger throws InvariantViolation.
  Quantity& operator-=(Quantity other);

  friend Quantity operator+(Quantity a, Quantity b) { return a += b; }
  friend Quantity operator-(Quantity a, Quantity b) { return a -= b; }

  std::string to_string() const;

 private:
  rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Quantity q);

}  // namespace tempoflow
