#pragma once

// Univariate polynomials over a GF(p^k).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpoly/gf.hpp"
#include "permpoly/scan.hpp"

namespace permpoly::poly {

using gf::Code;

struct Term {
  std::uint64_t exponent;
  Code coeff;
};

/// Sum of coeff * x^exponent, exponents strictly increasing, no zero
/// coefficients. Exponents are kept as written; see normalized().
class SparsePoly {
 public:
  SparsePoly(gf::FieldRef field, std::vector<Term> terms);

  const gf::Field& field() const { return *field_; }
  const gf::FieldRef& field_ref() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Code eval(Code x) const;
  Code operator()(Code x) const { return eval(x); }

  /// The same function reduced mod x^Q - x: exponent e >= 1 becomes
  /// ((e - 1) mod (Q - 1)) + 1; like terms are merged.
  SparsePoly normalized() const;

  /// Terms in increasing degree, in the syntax parse_sparse reads.
  std::string to_string() const;

 private:
  gf::FieldRef field_;
  std::vector<Term> terms_;
};

/// Coefficients low to high; the leading coefficient is nonzero unless the
/// polynomial is zero.
class DensePoly {
 public:
  DensePoly(gf::FieldRef field, std::vector<Code> coeffs);
  static DensePoly zero(gf::FieldRef field) { return {std::move(field), {}}; }
  static DensePoly constant(gf::FieldRef field, Code c) { return {std::move(field), {c}}; }
  /// c * x^e
  static DensePoly monomial(gf::FieldRef field, Code c, std::size_t e);

  const gf::Field& field() const { return *field_; }
  const gf::FieldRef& field_ref() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Code lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Code eval(Code x) const;
  Code operator()(Code x) const { return eval(x); }

  DensePoly scaled(Code c) const;
  /// Quotient and remainder by a nonzero divisor.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& divisor) const;

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend bool operator==(const DensePoly& a, const DensePoly& b);

  /// Terms in decreasing degree, in the syntax parse_sparse reads.
  std::string to_string() const;

 private:
  gf::FieldRef field_;
  std::vector<Code> coeffs_;
};

/// Reduction mod x^Q - x, the canonical form of a polynomial function.
DensePoly reduce_mod_field(const DensePoly& f);
DensePoly to_dense(const SparsePoly& f);

/// Parses `c*x^e + c*x^e + ...`. A coefficient is either colon-separated
/// base-p digits (c0:c1:...) or `g^j` (power of the field generator); it may
/// be omitted (meaning 1), and `x^e` may be omitted for a constant term.
/// `x` alone means x^1. Throws std::invalid_argument.
SparsePoly parse_sparse(const gf::FieldRef& field, std::string_view text);
/// A single coefficient in the same syntax.
Code parse_element(const gf::Field& field, std::string_view text);

/// Interpolation through distinct points, O(n^2).
DensePoly interpolate(const gf::FieldRef& field, std::span<const std::pair<Code, Code>> points);

inline constexpr std::uint64_t kInterpolationGuard = 4096;

/// The unique polynomial of degree < Q through a full table of the field.
/// Throws std::invalid_argument unless the x-values are exactly the field,
/// and std::length_error when Q exceeds `guard`.
DensePoly lagrange_interpolate(const gf::FieldRef& field,
                               std::span<const std::pair<Code, Code>> points,
                               std::uint64_t guard = kInterpolationGuard);

/// Sylvester matrix of f (degree n) and g (degree m): m shifted rows of f's
/// coefficients followed by n shifted rows of g's, highest degree first.
std::vector<std::vector<Code>> sylvester_matrix(const DensePoly& f, const DensePoly& g);

/// Determinant by Gaussian elimination with first-nonzero pivoting.
Code determinant(const gf::Field& field, std::vector<std::vector<Code>> matrix);

/// det of the Sylvester matrix. Both inputs need degree >= 1; throws
/// std::invalid_argument otherwise.
Code sylvester_resultant(const DensePoly& f, const DensePoly& g);

/// a0^m * prod g(alpha_i) over the roots alpha_i of f (with multiplicity),
/// found by exhaustive scan in the smallest extension of the coefficient
/// field in which f splits. nullopt when that extension exceeds `cap`.
std::optional<Code> resultant_by_roots(const DensePoly& f, const DensePoly& g,
                                       std::uint64_t cap = gf::kMaxOrder);

// Exhaustive checks over the coefficient field of a polynomial; each runs the
// parallel scan kernels.
scan::PermCheckReport is_permutation(const SparsePoly& f);
std::uint64_t count_roots(const SparsePoly& f);
std::vector<Code> brute_inverse_table(const SparsePoly& f);
scan::InverseCheck verify_inverse(const SparsePoly& f, const scan::PointMap& g);

}  // namespace permpoly::poly
