#pragma once

#include <cstdint>

namespace curvelab {

using Coeff = std::uint32_t;

/// Arithmetic in Z/pZ for an odd prime p < 2^31.
class PrimeField {
 public:
  static constexpr Coeff kDefaultCharacteristic = 32003;

  explicit PrimeField(Coeff p = kDefaultCharacteristic);

  Coeff characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  /// Maps an arbitrary integer into [0, p).
  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  /// Square root if one exists (Tonelli-Shanks); returns false otherwise.
  bool sqrt(Coeff a, Coeff& root) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n);

}  // namespace curvelab
