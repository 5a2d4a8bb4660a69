#pragma once

// F_{q^3} viewed over F_q, realised as a single extension GF(p^{3m}).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/gf.hpp"

namespace permpoly::tower {

using gf::Code;

class Tower {
 public:
  /// Builds GF(p^{3m}) with the smallest irreducible modulus, taken from
  /// `cache` when given.
  static Tower make(std::uint32_t p, unsigned m, gf::ModulusCache* cache = nullptr);

  std::uint32_t p() const { return field_->characteristic(); }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t q2() const { return q_ * q_; }
  /// q^3, the order of the big field.
  std::uint64_t order() const { return field_->order(); }

  const gf::Field& field() const { return *field_; }
  const gf::FieldRef& field_ref() const { return field_; }

  /// x^q
  Code frob(Code x) const { return field_->pow(x, q_); }
  /// x^{q^2}
  Code frob2(Code x) const { return field_->pow(x, q_ * q_); }

 private:
  Tower(gf::FieldRef field, unsigned m, std::uint64_t q)
      : field_(std::move(field)), m_(m), q_(q) {}

  gf::FieldRef field_;
  unsigned m_;
  std::uint64_t q_;
};

/// x -> c0 x + c1 x^q + c2 x^{q^2}.
struct LinearizedMap {
  Code c0 = 0;
  Code c1 = 0;
  Code c2 = 0;
};

Code frob_q(const Tower& t, Code x);
Code lmap_eval(const Tower& t, const LinearizedMap& c, Code x);

/// All x with x^3 = 1, ordered 1, g^{(Q-1)/3}, g^{2(Q-1)/3}.
std::vector<Code> cube_roots_of_unity(const Tower& t);

/// The q - 1 nonzero elements of F_q, ordered h^0, h^1, ... with
/// h = g^{(Q-1)/(q-1)}.
std::vector<Code> subfield_units(const Tower& t);

/// The q-Frobenius as a GF(p)-linear map, stored as the images of the basis
/// monomials t^i. Agrees with frob_q on every element.
class FrobeniusTable {
 public:
  explicit FrobeniusTable(const Tower& t);
  Code apply(Code x) const;
  const std::vector<Code>& basis_images() const { return images_; }

 private:
  const gf::Field* field_;
  std::vector<Code> images_;
};

/// Parses a parameter selector: `unity3:j`, `unit:j`, or `coeffs:c0,c1,...`.
/// Throws std::invalid_argument on bad syntax or an out-of-range index.
Code resolve_selector(const Tower& t, std::string_view selector);

}  // namespace permpoly::tower
