#pragma once

// Exact arithmetic in GF(p^k) = GF(p)[t]/(M(t)).
//
// An element is stored as its code: the base-p integer whose digits are the
// coefficients c0, c1, ..., c_{k-1} of its residue, c0 least significant.
// Codes double as the enumeration order of the field.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permpoly::gf {

using Code = std::uint32_t;
using BigUint = boost::multiprecision::cpp_int;

/// Largest field order for which tables and exhaustive scans are supported.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero (inverse of 0).
class DomainError : public FieldError {
 public:
  using FieldError::FieldError;
};

/// Operands from different fields.
class MismatchError : public FieldError {
 public:
  using FieldError::FieldError;
};

/// Characteristic, degree, or order outside what the library supports.
class RangeError : public FieldError {
 public:
  using FieldError::FieldError;
};

bool is_prime(std::uint64_t n);

/// Integer power with an overflow check against `limit`; returns 0 on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t limit = kMaxOrder);

/// Ben-Or test: `monic` (c0..ck, ck = 1) has no factor in common with
/// x^{p^i} - x for i <= k/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Smallest monic irreducible of degree k over GF(p), ordered by the integer
/// sum c_i p^i of its lower coefficients. Returns c0..ck.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k);

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// GF(p^k). Immutable after construction; share it freely across threads.
///
/// Multiplication, inversion and powers go through discrete log tables built
/// from the first generator. The polynomial routines prefixed `ref_` do the
/// same work from first principles and are kept to cross-check the tables.
class Field {
  struct Private {};

 public:
  Field(Private, std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  /// Field with the smallest irreducible modulus of degree k.
  static FieldRef make(std::uint32_t p, unsigned k);
  /// Field with a caller-chosen modulus (c0..ck); verified monic irreducible.
  static FieldRef make(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const;

  static constexpr Code zero() { return 0; }
  static constexpr Code one() { return 1; }
  /// Code of the residue class of t; for k = 1 that is -c0.
  Code t() const {
    return k_ == 1 ? from_int(-static_cast<std::int64_t>(modulus_[0])) : static_cast<Code>(p_);
  }

  Code add(Code a, Code b) const {
    return p_ == 2 ? (a ^ b) : add_digits(a, b, false);
  }
  Code sub(Code a, Code b) const {
    return p_ == 2 ? (a ^ b) : add_digits(a, b, true);
  }
  Code neg(Code a) const { return p_ == 2 ? a : add_digits(0, a, true); }

  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }

  /// Throws DomainError for a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  /// a^e with 0^0 = 1 and 0^e = 0 for e >= 1.
  Code pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (order_ - 1))) %
                            (order_ - 1);
    return exp_[l];
  }
  Code pow(Code a, const BigUint& e) const;

  /// Same as pow(a, Q - 2) but named for the role it plays: a^{-1}, or 0 at 0.
  Code inv_or_zero(Code a) const { return a == 0 ? 0 : inv(a); }

  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Code a) const;
  Code exp(std::uint64_t e) const { return exp_[e % (order_ - 1)]; }

  /// First element of multiplicative order Q - 1 in code order; 1 for GF(2).
  Code generator() const { return generator_; }

  /// Image of the integer n under Z -> GF(p).
  Code from_int(std::int64_t n) const;
  Code from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Code a) const;
  bool contains(Code a) const { return a < order_; }

  /// Every element once, in code order.
  auto elements() const { return std::views::iota(Code{0}, order_); }

  // Polynomial-arithmetic reference implementations.
  Code ref_mul(Code a, Code b) const;
  Code ref_inv(Code a) const;
  Code ref_pow(Code a, std::uint64_t e) const;

  /// True iff a^q = a. q must be p^m with m dividing k.
  bool in_subfield(Code a, std::uint64_t q) const;

  std::string to_string(Code a) const;

 private:
  Code add_digits(Code a, Code b, bool subtract) const;
  Code scale(Code a, std::uint32_t d) const;
  Code search_generator() const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
  Code generator_ = 1;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws MismatchError. The field must outlive the element.
class Element {
 public:
  Element(const Field& field, Code code);
  static Element from_coeffs(const Field& field, std::span<const std::uint32_t> coeffs);

  const Field& field() const { return *field_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  Element inv() const { return {*field_, field_->inv(code_)}; }
  Element pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
  Element pow(const BigUint& e) const { return {*field_, field_->pow(code_, e)}; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a) { return {*a.field_, a.field_->neg(a.code_)}; }
  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const { return field_->to_string(code_); }

 private:
  const Field* field_;
  Code code_;
};

/// First element of order Q - 1 in enumeration order (1 for GF(2)).
Element find_generator(const Field& field);

/// Whether a lies in the subfield of order q (a^q == a).
bool is_in_subfield(const Element& a, std::uint64_t q);

/// Text file of moduli, one per line: `p k: c0 c1 ... ck`.
/// Entries are re-verified for irreducibility on load; misses are computed
/// and appended.
class ModulusCache {
 public:
  explicit ModulusCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  std::vector<std::uint32_t> get(std::uint32_t p, unsigned k);
  FieldRef field(std::uint32_t p, unsigned k) { return Field::make(p, k, get(p, k)); }

  static std::string format_line(std::uint32_t p, unsigned k,
                                 std::span<const std::uint32_t> modulus);

 private:
  std::filesystem::path path_;
  std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> entries_;
};

}  // namespace permpoly::gf
