#pragma once

// The local method: if projections psi_1..psi_t and a combiner F satisfy
// F(psi_1(f(x)), ..., psi_t(f(x))) = x for every x, then f is a permutation
// and its inverse is y -> F(psi_1(y), ..., psi_t(y)).
//
// Here the field under consideration is all of F_{q^3} and the projections
// are the Frobenius powers psi_i(x) = x^{q^{i-1}}, i = 1, 2, 3.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permpoly/families.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/tower.hpp"

namespace permpoly::localmethod {

using gf::Code;
using Projection = std::function<Code(Code)>;
using Combiner = std::function<Code(std::span<const Code>)>;

struct LocalScheme {
  poly::SparsePoly f;
  std::vector<Projection> projections;
  Combiner combiner;
};

/// Scheme with psi_1 = x, psi_2 = x^q, psi_3 = x^{q^2}.
LocalScheme frobenius_scheme(const tower::Tower& t, poly::SparsePoly f, Combiner combiner);

struct Projections {
  Code a;  ///< f(x)
  Code b;  ///< a^q
  Code c;  ///< a^{q^2}
};

Projections frob_projections(const tower::Tower& t, const poly::SparsePoly& f, Code x);

struct Certificate {
  bool certified = false;
  /// First x (code order) with F(psi(f(x))) != x.
  std::optional<Code> counterexample;
};

/// A combiner that throws ContractViolation at some x fails the certificate there.
Certificate lemma_certify(const LocalScheme& scheme);
namespace serial {
Certificate lemma_certify(const LocalScheme& scheme);
}

/// y -> F(psi_1(y), ..., psi_t(y)) tabulated over the field.
std::vector<Code> induced_inverse(const LocalScheme& scheme);

/// The x-recovery formula from each family's proof, written in a, b, c:
///   f1: D = Aac + c^2 + Ab^2 (D^q, D^{q^2} by cycling a -> b -> c -> a);
///       x = D^{q+1}(a + Ab + A^2c) / (D^{q+1} + A D^{q^2+q} + A^2 D^{q^2+1})
///       when that denominator is nonzero, else ab^2c / (b^2c + Aab^2 + ac^2);
///   f2: D = a^2 + Aac + Ab^2; x = D^{q+1}(a + A^2b + Ac) / (D^{q+1} + A^2 D^{q^2+q} + A D^{q^2+1})
///       else abc^2 / (bc^2 + Aac^2 + ab^2);
///   f3: x = (aA^2 + cA + b)^{-1} ab;
/// and 0 at a = 0. Throws families::ContractViolation on a zero denominator.
Combiner theorem_combiner(const families::FamilyParams& fp);

struct ScanResult {
  bool holds = true;
  std::optional<Code> witness;  ///< first x where the property fails
};

/// x + Ay + A^2z = a + Ab + A^2c for every x (y = x^q, z = x^{q^2}); for f2 the
/// identity is x + A^2y + Az = a + A^2b + Ac. Throws std::invalid_argument for f3.
ScanResult identity_abc_check(const families::FamilyParams& fp);

/// For every x != 0: Aac + c^2 + Ab^2 != 0 (f1), a^2 + Aac + Ab^2 != 0 (f2).
/// The witness is the first nonzero x where it vanishes.
ScanResult discriminant_nonvanishing(const families::FamilyParams& fp);

/// gcd(2q - 1, q^3 - 1) for f1, gcd(q - 2, q^3 - 1) for f2, with q = 2^m.
gf::BigUint gcd_chain_value(unsigned m, families::Family family);
/// gcd_chain_value(m, family) == 1.
bool gcd_sanity(unsigned m, families::Family family);

}  // namespace permpoly::localmethod
