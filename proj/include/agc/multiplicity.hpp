#ifndef AGC_MULTIPLICITY_HPP
#define AGC_MULTIPLICITY_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace agc {

/// Edge multiplicity: a nonnegative count or omega (countably infinite).
/// Arithmetic saturates: omega + x = omega, omega * x = omega for x >= 1.
class Multiplicity {
public:
  constexpr Multiplicity() = default;
  constexpr explicit Multiplicity(std::uint64_t n) : count_(n) {}

  static constexpr Multiplicity omega() {
    Multiplicity m;
    m.omega_ = true;
    return m;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_zero() const { return !omega_ && count_ == 0; }
  constexpr bool is_positive() const { return omega_ || count_ > 0; }

  /// Finite count; only meaningful when !is_omega().
  constexpr std::uint64_t count() const { return count_; }

  friend constexpr bool operator==(Multiplicity a, Multiplicity b) {
    return a.omega_ == b.omega_ && a.count_ == b.count_;
  }

  // Total order 0 < 1 < 2 < ... < omega.
  friend constexpr std::strong_ordering operator<=>(Multiplicity a,
                                                    Multiplicity b) {
    if (a.omega_ != b.omega_)
      return a.omega_ ? std::strong_ordering::greater
                      : std::strong_ordering::less;
    return a.count_ <=> b.count_;
  }

  friend constexpr Multiplicity operator+(Multiplicity a, Multiplicity b) {
    if (a.omega_ || b.omega_) return omega();
    return Multiplicity(a.count_ + b.count_);
  }

  friend constexpr Multiplicity operator*(Multiplicity a, Multiplicity b) {
    if (a.is_zero() || b.is_zero()) return Multiplicity(0);
    if (a.omega_ || b.omega_) return omega();
    return Multiplicity(a.count_ * b.count_);
  }

  Multiplicity& operator+=(Multiplicity o) { return *this = *this + o; }

  /// "*" for omega, decimal otherwise (the .agr token convention).
  std::string str() const {
    return omega_ ? std::string("*") : std::to_string(count_);
  }

private:
  bool omega_ = false;
  std::uint64_t count_ = 0;
};

inline constexpr Multiplicity kOmega = Multiplicity::omega();

}  // namespace agc

#endif
