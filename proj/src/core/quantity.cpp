#include "tempoflow/core/quantity.hpp"

#include <ostream>

#include "tempoflow/core/error.hpp"

namespace tempoflow {

Quantity& Quantity::operator+=(Quantity other) {
  if (is_infinite() || other.is_infinite()) {
    value_ = kInfiniteRep;
    return *this;
  }
  if (other.value_ >= kInfiniteRep - value_) {
    throw DataError("quantity overflow: " + std::to_string(value_) + " + " +
                    std::to_string(other.value_));
  }
  value_ += other.value_;
  return *this;
}

Quantity& Quantity::operator-=(Quantity other) {
  if (is_infinite()) {
    if (other.is_infinite()) {
      throw InvariantViolation("infinite minus infinite quantity");
    }
    return *this;
  }
  if (other.is_infinite() || other.value_ > value_) {
    throw InvariantViolation("negative quantity: " + to_string() + " - " +
                             other.to_string());
  }
  value_ -= other.value_;
  return *this;
}

std::string Quantity::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, Quantity q) {
  return os << q.to_string();
}

}  // namespace tempoflow
