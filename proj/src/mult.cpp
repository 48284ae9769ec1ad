#include "solenoid/mult.hpp"

#include <stdexcept>

#include "solenoid/error.hpp"

namespace solenoid {

const Natural& Mult::finite() const {
  if (omega_) throw std::logic_error("Mult::finite() called on OMEGA");
  return value_;
}

std::string Mult::str() const { return omega_ ? std::string("w") : value_.str(); }

void Mult::check_nonnegative() const {
  if (value_ < 0) throw DomainError("multiplicities are natural numbers, got " + value_.str());
}

std::strong_ordering operator<=>(const Mult& a, const Mult& b) {
  if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
  const int c = a.value_.compare(b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Mult operator+(const Mult& a, const Mult& b) {
  if (a.omega_ || b.omega_) return Mult::omega();
  return Mult(a.value_ + b.value_);
}

Mult Mult::surplus(const Mult& a, const Mult& b) {
  if (a <= b) return Mult{};
  if (a.omega_) return omega();
  return Mult(a.value_ - b.value_);
}

}  // namespace solenoid
