#pragma once

// Dense polynomials over a prime field GF(p), coefficients low to high.
// Only used for modulus selection and the reference arithmetic.

#include <cstdint>
#include <utility>
#include <vector>

namespace permpoly::gf::detail {

using PrimePoly = std::vector<std::uint32_t>;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const { return pow(a, p_ - 2); }

  static void trim(PrimePoly& a);
  static int degree(const PrimePoly& a) { return static_cast<int>(a.size()) - 1; }

  PrimePoly sub(const PrimePoly& a, const PrimePoly& b) const;
  PrimePoly mul(const PrimePoly& a, const PrimePoly& b) const;
  /// Quotient and remainder; b must be nonzero.
  std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b) const;
  PrimePoly mod(const PrimePoly& a, const PrimePoly& m) const { return divmod(a, m).second; }
  PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m) const;
  PrimePoly powmod(PrimePoly a, std::uint64_t e, const PrimePoly& m) const;
  /// Monic gcd (empty when both are zero).
  PrimePoly gcd(PrimePoly a, PrimePoly b) const;
  /// s with s * a = 1 mod m, or empty when gcd(a, m) != 1.
  PrimePoly inverse_mod(const PrimePoly& a, const PrimePoly& m) const;

 private:
  std::uint32_t p_;
};

}  // namespace permpoly::gf::detail
