#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <concepts>
#include <string>

namespace solenoid {

using Natural = boost::multiprecision::cpp_int;

/// An element of ω ∪ {ω}: a natural number of unbounded size, or OMEGA.
/// Every natural is below OMEGA; OMEGA absorbs addition.
class Mult {
 public:
  Mult() = default;
  template <std::integral T>
  Mult(T n) : value_(n) {  // NOLINT(google-explicit-constructor)
    check_nonnegative();
  }
  explicit Mult(Natural n) : value_(std::move(n)) { check_nonnegative(); }

  [[nodiscard]] static Mult omega() {
    Mult m;
    m.omega_ = true;
    return m;
  }

  [[nodiscard]] bool is_omega() const noexcept { return omega_; }
  [[nodiscard]] bool is_zero() const noexcept { return !omega_ && value_ == 0; }

  /// The finite value; throws std::logic_error on OMEGA.
  [[nodiscard]] const Natural& finite() const;

  /// "w" for OMEGA, decimal digits otherwise.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Mult& a, const Mult& b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Mult& a, const Mult& b);
  friend Mult operator+(const Mult& a, const Mult& b);

  /// Truncated difference: the amount by which a exceeds b, with ω − ω = 0.
  [[nodiscard]] static Mult surplus(const Mult& a, const Mult& b);

 private:
  void check_nonnegative() const;

  Natural value_ = 0;
  bool omega_ = false;
};

}  // namespace solenoid
