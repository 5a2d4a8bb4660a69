#pragma once

// Three permutation trinomial families over F_{q^3}:
//
//   f1(x) = x + A x^{q^2-q+1} + x^{q^2+q-1}      q = 2^m, A^3 = 1
//   f2(x) = x + A x^{q^3-q^2+q} + x^{q^2+q-1}    q = 2^m, A^3 = 1
//   f3(x) = x + A x^{q^2-q+1} + A^2 x^{q^2}      any q, A in F_q^*
//
// f1 permutes iff m != 2 (mod 3), f2 iff m != 1 (mod 3), f3 iff A^3 != 1.
//
// Inverse formulas take the value y = f(x) and return x. Throughout, a, b, c
// stand for y, y^q, y^{q^2}.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpoly/gf.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/tower.hpp"

namespace permpoly::families {

using gf::Code;

enum class Family { f1, f2, f3 };

std::string_view name(Family family);
/// Accepts "f1", "f2", "f3"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view text);

/// An inverse formula divided by zero where it is claimed to be defined.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class FamilyParams {
 public:
  /// Validates the family's hypotheses on A: nonzero, in F_q, and A^3 = 1
  /// for f1/f2 (which also need characteristic 2). Throws
  /// std::invalid_argument on violation.
  static FamilyParams make(Family family, tower::Tower tower, Code A);

  Family family() const { return family_; }
  const tower::Tower& tower() const { return tower_; }
  const gf::Field& field() const { return tower_.field(); }
  Code A() const { return A_; }
  bool a_cubed_is_one() const;

 private:
  FamilyParams(Family family, tower::Tower tower, Code A)
      : family_(family), tower_(std::move(tower)), A_(A) {}

  Family family_;
  tower::Tower tower_;
  Code A_;
};

/// The trinomial with its exponents as written (f2's middle exponent is
/// q^3 - q^2 + q, kept raw).
poly::SparsePoly family_poly(const FamilyParams& fp);

/// The permutation criterion for the family.
bool predicted_pp(const FamilyParams& fp);

/// Which case of a piecewise inverse produced the value.
enum class Branch {
  linear_nonzero,  ///< L(y) != 0
  linear_kernel,   ///< L(y) = 0, y != 0
  zero,            ///< y = 0
  single_formula,  ///< one formula valid on the whole field
};
std::string_view name(Branch branch);

struct InverseValue {
  Code value;
  Branch branch;
};

/// Piecewise inverse of f1. The first branch is
///   N0 L(y) / (N0 + A N0^q + A^2 N0^{q^2}),  N0 = (A y^{q^2+1} + y^{2q^2} + A y^{2q})^{q+1},
/// with L(y) = y + A y^q + A^2 y^{q^2}; the second is
///   y^{q^2+2q+1} / (y^{q^2+2q} + A y^{2q+1} + y^{2q^2+1}).
/// Throws ContractViolation on a zero denominator.
InverseValue f1_inverse_piecewise(const FamilyParams& fp, Code y);
Code f1_inverse_eval(const FamilyParams& fp, Code y);
/// Single rational inverse of f1, 0 at 0.
Code f1_inverse_rational_eval(const FamilyParams& fp, Code y);

/// f2's counterpart with L'(y) = y + A^2 y^q + A y^{q^2} and
/// N0 = (y^2 + A y^{q^2+1} + A y^{2q})^{q+1}; second branch
///   y^{2q^2+q+1} / (y^{2q^2+q} + A y^{2q^2+1} + y^{2q+1}).
/// On L'(y) = 0 the relations ax = cy and bx = cz hold, which give that
/// branch. Swapping q and q^2 in the numerator and the first denominator
/// term does not give an inverse there.
InverseValue f2_inverse_piecewise(const FamilyParams& fp, Code y);
Code f2_inverse_eval(const FamilyParams& fp, Code y);
Code f2_inverse_rational_eval(const FamilyParams& fp, Code y);

/// (A^2 y + y^q + A y^{q^2})^{q^3-2} y^{q+1}, total on the field.
Code f3_inverse_eval(const FamilyParams& fp, Code y);
/// y^{q+1} / (A^2 y + y^q + A y^{q^2}) for y != 0, and 0 at 0.
Code f3_inverse_rational_eval(const FamilyParams& fp, Code y);

/// One way of computing the compositional inverse.
class InverseForm {
 public:
  enum class Kind { piecewise_theorem, rational_remark, brute_table };

  static InverseForm piecewise(const FamilyParams& fp);
  static InverseForm rational(const FamilyParams& fp);
  /// Tabulates the inverse by exhaustive evaluation; throws
  /// scan::NotPermutation when the family member is not a bijection.
  static InverseForm brute(const FamilyParams& fp);

  Kind kind() const { return kind_; }
  Code operator()(Code y) const;
  /// Value together with the branch that produced it.
  InverseValue eval(Code y) const;

 private:
  InverseForm(Kind kind, FamilyParams fp) : kind_(kind), fp_(std::move(fp)) {}

  Kind kind_;
  FamilyParams fp_;
  std::vector<Code> table_;
};

std::string_view name(InverseForm::Kind kind);
/// "piecewise", "rational", or "brute".
InverseForm::Kind parse_inverse_kind(std::string_view text);

// The eliminant pairs behind each family's inverse and their resultant
// factorizations.

struct PolyPair {
  poly::DensePoly f;
  poly::DensePoly g;
};

/// f(y), g(y) for f1 with the value x fixed.
PolyPair remark_quartics_f1(const tower::Tower& t, Code A, Code a, Code b, Code c, Code x);
/// f(x), g(x) for f2 with the value y fixed.
PolyPair remark_quartics_f2(const tower::Tower& t, Code A, Code a, Code b, Code c, Code y);
/// f(y) (linear) and g(y) (quadratic) for f3 with the value x fixed.
PolyPair remark_pair_f3(const tower::Tower& t, Code A, Code a, Code b, Code c, Code x);

/// (alpha, beta) for f1:
///   alpha = ab^2A^2 + bc^2A^2 + ca^2A^2 + a^3 + b^3 + c^3 + abc
///   beta  = a^2b^2A^2 + a^3cA^2 + abc^2A^2 + c^4A^2 + a^2c^2A + ab^3 + a^2bc + b^2c^2 + ac^3
std::pair<Code, Code> remark_alpha_beta_f1(const gf::Field& f, Code A, Code a, Code b, Code c);
/// (alpha, beta) for f2:
///   alpha = ba^2A^2 + b^2cA^2 + c^2aA^2 + a^3 + b^3 + c^3 + abc
///   beta  = a^2b^2A^2 + b^3cA^2 + abc^2A^2 + c^4A^2 + b^2c^2A + ba^3 + b^2ac + a^2c^2 + bc^3
std::pair<Code, Code> remark_alpha_beta_f2(const gf::Field& f, Code A, Code a, Code b, Code c);

struct IdentityCheck {
  enum class Status { equal, unequal, degenerate };
  Status status;
  Code resultant = 0;  ///< Sylvester determinant (0 when degenerate)
  Code factored = 0;   ///< the closed factorization
};

/// Resultant of the family's eliminant pair at (value, a) with b = a^q,
/// c = a^{q^2}, compared with the factorization
///   f1: x^4 (x + a)^8 (alpha x + beta)
///   f2: y^4 (y + b)^8 (alpha y + beta)
///   f3: A c x^2 (A^2 x - b)((A^3 - 1) x - bA)((aA^2 + cA + b) x - ab).
/// A pair whose leading coefficient vanishes is reported as degenerate.
IdentityCheck remark_resultant_identity(const FamilyParams& fp, Code value, Code a);

}  // namespace permpoly::families
