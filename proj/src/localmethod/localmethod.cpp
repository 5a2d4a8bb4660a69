#include "permpoly/localmethod.hpp"

#include <stdexcept>

#include "permpoly/scan.hpp"

namespace permpoly::localmethod {

using families::Family;
using families::FamilyParams;

LocalScheme frobenius_scheme(const tower::Tower& t, poly::SparsePoly f, Combiner combiner) {
  std::vector<Projection> psi{
      [](Code x) { return x; },
      [t](Code x) { return t.frob(x); },
      [t](Code x) { return t.frob2(x); },
  };
  return {std::move(f), std::move(psi), std::move(combiner)};
}

Projections frob_projections(const tower::Tower& t, const poly::SparsePoly& f, Code x) {
  const Code a = f.eval(x);
  const Code b = t.frob(a);
  const Code c = t.frob(b);
  if (c != t.frob2(a)) throw std::logic_error("Frobenius projections are inconsistent");
  return {a, b, c};
}

namespace {

Code apply_scheme(const LocalScheme& s, Code y) {
  // t is 3 in every scheme built here; larger t falls back to the heap.
  Code buf[8];
  std::vector<Code> heap;
  std::span<Code> args;
  if (s.projections.size() <= 8) {
    args = std::span<Code>(buf, s.projections.size());
  } else {
    heap.resize(s.projections.size());
    args = heap;
  }
  for (std::size_t i = 0; i < s.projections.size(); ++i) args[i] = s.projections[i](y);
  return s.combiner(args);
}

std::function<bool(Code)> certify_predicate(const LocalScheme& s) {
  return [&s](Code x) {
    try {
      return apply_scheme(s, s.f.eval(x)) == x;
    } catch (const families::ContractViolation&) {
      return false;
    }
  };
}

}  // namespace

Certificate lemma_certify(const LocalScheme& scheme) {
  const auto bad = scan::parallel::first_failure(scheme.f.field(), certify_predicate(scheme));
  return {!bad.has_value(), bad};
}

Certificate serial::lemma_certify(const LocalScheme& scheme) {
  const auto bad = scan::serial::first_failure(scheme.f.field(), certify_predicate(scheme));
  return {!bad.has_value(), bad};
}

std::vector<Code> induced_inverse(const LocalScheme& scheme) {
  return scan::evaluate_all(scheme.f.field(), [&](Code y) { return apply_scheme(scheme, y); });
}

Combiner theorem_combiner(const FamilyParams& fp) {
  const gf::FieldRef field = fp.tower().field_ref();
  const Code A = fp.A(), A2 = field->mul(A, A);
  auto div = [field](Code num, Code den) {
    if (den == 0) throw families::ContractViolation("zero denominator in combiner");
    return field->div(num, den);
  };
  switch (fp.family()) {
    case Family::f1:
      return [field, A, A2, div](std::span<const Code> v) -> Code {
        const gf::Field& f = *field;
        const Code a = v[0], b = v[1], c = v[2];
        if (a == 0) return 0;
        auto disc = [&](Code a_, Code b_, Code c_) {
          return f.add(f.add(f.mul(A, f.mul(a_, c_)), f.mul(c_, c_)), f.mul(A, f.mul(b_, b_)));
        };
        const Code d0 = disc(a, b, c), d1 = disc(b, c, a), d2 = disc(c, a, b);
        const Code den = f.add(f.add(f.mul(d0, d1), f.mul(A, f.mul(d1, d2))), f.mul(A2, f.mul(d2, d0)));
        if (den != 0) {
          const Code lin = f.add(f.add(a, f.mul(A, b)), f.mul(A2, c));
          return div(f.mul(f.mul(d0, d1), lin), den);
        }
        const Code bb = f.mul(b, b);
        return div(f.mul(f.mul(a, bb), c),
                   f.add(f.add(f.mul(bb, c), f.mul(A, f.mul(a, bb))), f.mul(a, f.mul(c, c))));
      };
    case Family::f2:
      return [field, A, A2, div](std::span<const Code> v) -> Code {
        const gf::Field& f = *field;
        const Code a = v[0], b = v[1], c = v[2];
        if (a == 0) return 0;
        auto disc = [&](Code a_, Code b_, Code c_) {
          return f.add(f.add(f.mul(a_, a_), f.mul(A, f.mul(a_, c_))), f.mul(A, f.mul(b_, b_)));
        };
        const Code d0 = disc(a, b, c), d1 = disc(b, c, a), d2 = disc(c, a, b);
        const Code den = f.add(f.add(f.mul(d0, d1), f.mul(A2, f.mul(d1, d2))), f.mul(A, f.mul(d2, d0)));
        if (den != 0) {
          const Code lin = f.add(f.add(a, f.mul(A2, b)), f.mul(A, c));
          return div(f.mul(f.mul(d0, d1), lin), den);
        }
        const Code cc = f.mul(c, c);
        return div(f.mul(f.mul(a, b), cc),
                   f.add(f.add(f.mul(b, cc), f.mul(A, f.mul(a, cc))), f.mul(a, f.mul(b, b))));
      };
    case Family::f3:
      return [field, A, A2, div](std::span<const Code> v) -> Code {
        const gf::Field& f = *field;
        const Code a = v[0], b = v[1], c = v[2];
        if (a == 0) return 0;
        return div(f.mul(a, b), f.add(f.add(f.mul(a, A2), f.mul(c, A)), b));
      };
  }
  throw std::logic_error("unreachable");
}

ScanResult identity_abc_check(const FamilyParams& fp) {
  if (fp.family() == Family::f3) throw std::invalid_argument("identity_abc_check applies to f1 and f2");
  const auto& t = fp.tower();
  const auto& f = fp.field();
  const Code A = fp.A(), A2 = f.mul(A, A);
  // Weights on (x, x^q, x^{q^2}) and on (a, b, c).
  const Code w1 = fp.family() == Family::f1 ? A : A2;
  const Code w2 = fp.family() == Family::f1 ? A2 : A;
  const auto fx = families::family_poly(fp);
  const auto bad = scan::first_failure(f, [&](Code x) {
    const auto [a, b, c] = frob_projections(t, fx, x);
    const Code lhs = f.add(f.add(x, f.mul(w1, t.frob(x))), f.mul(w2, t.frob2(x)));
    const Code rhs = f.add(f.add(a, f.mul(w1, b)), f.mul(w2, c));
    return lhs == rhs;
  });
  return {!bad.has_value(), bad};
}

ScanResult discriminant_nonvanishing(const FamilyParams& fp) {
  if (fp.family() == Family::f3) {
    throw std::invalid_argument("discriminant_nonvanishing applies to f1 and f2");
  }
  const auto& t = fp.tower();
  const auto& f = fp.field();
  const Code A = fp.A();
  const bool first = fp.family() == Family::f1;
  const auto fx = families::family_poly(fp);
  const auto bad = scan::first_failure(f, [&](Code x) {
    if (x == 0) return true;
    const auto [a, b, c] = frob_projections(t, fx, x);
    const Code common = f.add(f.mul(A, f.mul(a, c)), f.mul(A, f.mul(b, b)));
    const Code d = f.add(common, first ? f.mul(c, c) : f.mul(a, a));
    return d != 0;
  });
  return {!bad.has_value(), bad};
}

gf::BigUint gcd_chain_value(unsigned m, Family family) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const gf::BigUint q = gf::BigUint(1) << m;
  const gf::BigUint order_minus_one = q * q * q - 1;
  switch (family) {
    case Family::f1: return boost::multiprecision::gcd(gf::BigUint(2 * q - 1), order_minus_one);
    case Family::f2: return boost::multiprecision::gcd(gf::BigUint(q - 2), order_minus_one);
    case Family::f3: break;
  }
  throw std::invalid_argument("gcd chain applies to f1 and f2");
}

bool gcd_sanity(unsigned m, Family family) { return gcd_chain_value(m, family) == 1; }

}  // namespace permpoly::localmethod
