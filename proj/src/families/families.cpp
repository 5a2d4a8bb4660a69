#include "permpoly/families.hpp"

#include <initializer_list>

#include "permpoly/scan.hpp"

namespace permpoly::families {

namespace {

// Variadic sums and products over one field.
struct Arith {
  const gf::Field& f;

  Code sum(std::initializer_list<Code> xs) const {
    Code r = 0;
    for (auto x : xs) r = f.add(r, x);
    return r;
  }
  Code prod(std::initializer_list<Code> xs) const {
    Code r = 1;
    for (auto x : xs) r = f.mul(r, x);
    return r;
  }
  Code pow(Code x, std::uint64_t e) const { return f.pow(x, e); }
  Code sub(Code x, Code y) const { return f.sub(x, y); }
};

Code checked_div(const gf::Field& f, Code num, Code den, const char* what) {
  if (den == 0) throw ContractViolation(std::string("zero denominator in ") + what);
  return f.div(num, den);
}

}  // namespace

std::string_view name(Family family) {
  switch (family) {
    case Family::f1: return "f1";
    case Family::f2: return "f2";
    case Family::f3: return "f3";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "f1") return Family::f1;
  if (text == "f2") return Family::f2;
  if (text == "f3") return Family::f3;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected f1, f2, f3)");
}

std::string_view name(Branch branch) {
  switch (branch) {
    case Branch::linear_nonzero: return "linear_nonzero";
    case Branch::linear_kernel: return "linear_kernel";
    case Branch::zero: return "zero";
    case Branch::single_formula: return "single_formula";
  }
  return "?";
}

FamilyParams FamilyParams::make(Family family, tower::Tower tower, Code A) {
  const auto& f = tower.field();
  if (!f.contains(A) || A == 0) throw std::invalid_argument("A must be a nonzero field element");
  if (!f.in_subfield(A, tower.q())) throw std::invalid_argument("A must lie in F_q");
  if (family != Family::f3) {
    if (tower.p() != 2) {
      throw std::invalid_argument(std::string(name(family)) + " needs characteristic 2");
    }
    if (f.pow(A, 3) != 1) throw std::invalid_argument(std::string(name(family)) + " needs A^3 = 1");
  }
  return {family, std::move(tower), A};
}

bool FamilyParams::a_cubed_is_one() const { return field().pow(A_, 3) == 1; }

poly::SparsePoly family_poly(const FamilyParams& fp) {
  const std::uint64_t q = fp.tower().q();
  const auto& f = fp.field();
  switch (fp.family()) {
    case Family::f1:
      return {fp.tower().field_ref(), {{1, 1}, {q * q - q + 1, fp.A()}, {q * q + q - 1, 1}}};
    case Family::f2:
      return {fp.tower().field_ref(), {{1, 1}, {q * q * q - q * q + q, fp.A()}, {q * q + q - 1, 1}}};
    case Family::f3:
      return {fp.tower().field_ref(),
              {{1, 1}, {q * q - q + 1, fp.A()}, {q * q, f.mul(fp.A(), fp.A())}}};
  }
  throw std::logic_error("unreachable");
}

bool predicted_pp(const FamilyParams& fp) {
  switch (fp.family()) {
    case Family::f1: return fp.tower().m() % 3 != 2;
    case Family::f2: return fp.tower().m() % 3 != 1;
    case Family::f3: return !fp.a_cubed_is_one();
  }
  return false;
}

InverseValue f1_inverse_piecewise(const FamilyParams& fp, Code y) {
  if (y == 0) return {0, Branch::zero};
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q(), q2 = q * q;
  const Code A = fp.A(), A2 = f.mul(A, A);
  const Code L = ar.sum({y, ar.prod({A, ar.pow(y, q)}), ar.prod({A2, ar.pow(y, q2)})});
  if (L != 0) {
    const Code inner = ar.sum({ar.prod({A, ar.pow(y, q2 + 1)}), ar.pow(y, 2 * q2),
                               ar.prod({A, ar.pow(y, 2 * q)})});
    const Code n0 = ar.pow(inner, q + 1);
    const Code den = ar.sum({n0, ar.prod({A, ar.pow(n0, q)}), ar.prod({A2, ar.pow(n0, q2)})});
    return {checked_div(f, f.mul(n0, L), den, "f1 inverse (L != 0 branch)"), Branch::linear_nonzero};
  }
  const Code num = ar.pow(y, q2 + 2 * q + 1);
  const Code den = ar.sum({ar.pow(y, q2 + 2 * q), ar.prod({A, ar.pow(y, 2 * q + 1)}),
                           ar.pow(y, 2 * q2 + 1)});
  return {checked_div(f, num, den, "f1 inverse (L = 0 branch)"), Branch::linear_kernel};
}

Code f1_inverse_eval(const FamilyParams& fp, Code y) { return f1_inverse_piecewise(fp, y).value; }

Code f1_inverse_rational_eval(const FamilyParams& fp, Code y) {
  if (y == 0) return 0;
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q(), q2 = q * q;
  const Code A = fp.A(), A2 = f.mul(A, A);
  auto P = [&](std::uint64_t e) { return ar.pow(y, e); };
  const Code num = ar.sum({
      ar.prod({A2, ar.sum({P(2 * q + 2), P(q2 + 3), P(2 * q2 + q + 1), P(4 * q2)})}),
      ar.prod({A, P(2 * q2 + 2)}),
      P(3 * q + 1),
      P(q2 + q + 2),
      P(2 * q2 + 2 * q),
      P(3 * q2 + 1),
  });
  const Code den = ar.sum({
      ar.prod({A2, ar.sum({P(2 * q + 1), P(2 * q2 + q), P(q2 + 2)})}),
      P(3),
      P(3 * q),
      P(3 * q2),
      P(q2 + q + 1),
  });
  return checked_div(f, num, den, "f1 rational inverse");
}

InverseValue f2_inverse_piecewise(const FamilyParams& fp, Code y) {
  if (y == 0) return {0, Branch::zero};
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q(), q2 = q * q;
  const Code A = fp.A(), A2 = f.mul(A, A);
  const Code L = ar.sum({y, ar.prod({A2, ar.pow(y, q)}), ar.prod({A, ar.pow(y, q2)})});
  if (L != 0) {
    const Code inner = ar.sum({ar.pow(y, 2), ar.prod({A, ar.pow(y, q2 + 1)}),
                               ar.prod({A, ar.pow(y, 2 * q)})});
    const Code n0 = ar.pow(inner, q + 1);
    const Code den = ar.sum({n0, ar.prod({A2, ar.pow(n0, q)}), ar.prod({A, ar.pow(n0, q2)})});
    return {checked_div(f, f.mul(n0, L), den, "f2 inverse (L != 0 branch)"), Branch::linear_nonzero};
  }
  const Code num = ar.pow(y, 2 * q2 + q + 1);
  const Code den = ar.sum({ar.pow(y, 2 * q2 + q), ar.prod({A, ar.pow(y, 2 * q2 + 1)}),
                           ar.pow(y, 2 * q + 1)});
  return {checked_div(f, num, den, "f2 inverse (L = 0 branch)"), Branch::linear_kernel};
}

Code f2_inverse_eval(const FamilyParams& fp, Code y) { return f2_inverse_piecewise(fp, y).value; }

Code f2_inverse_rational_eval(const FamilyParams& fp, Code y) {
  if (y == 0) return 0;
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q(), q2 = q * q;
  const Code A = fp.A(), A2 = f.mul(A, A);
  auto P = [&](std::uint64_t e) { return ar.pow(y, e); };
  const Code num = ar.sum({
      ar.prod({A2, ar.sum({P(2 * q2 + 2), P(q + 3), P(q2 + 2 * q + 1), P(4 * q)})}),
      ar.prod({A, P(2 * q + 2)}),
      P(3 * q2 + 1),
      P(q2 + q + 2),
      P(2 * q2 + 2 * q),
      P(3 * q + 1),
  });
  const Code den = ar.sum({
      ar.prod({A2, ar.sum({P(q + 2), P(2 * q + q2), P(2 * q2 + 1)})}),
      P(3),
      P(3 * q),
      P(3 * q2),
      P(q2 + q + 1),
  });
  return checked_div(f, num, den, "f2 rational inverse");
}

Code f3_inverse_eval(const FamilyParams& fp, Code y) {
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q();
  const Code A = fp.A(), A2 = f.mul(A, A);
  const Code lin = ar.sum({f.mul(A2, y), ar.pow(y, q), f.mul(A, ar.pow(y, q * q))});
  return f.mul(ar.pow(lin, q * q * q - 2), ar.pow(y, q + 1));
}

Code f3_inverse_rational_eval(const FamilyParams& fp, Code y) {
  if (y == 0) return 0;
  const auto& f = fp.field();
  const Arith ar{f};
  const std::uint64_t q = fp.tower().q();
  const Code A = fp.A(), A2 = f.mul(A, A);
  const Code den = ar.sum({f.mul(A2, y), ar.pow(y, q), f.mul(A, ar.pow(y, q * q))});
  return checked_div(f, ar.pow(y, q + 1), den, "f3 rational inverse");
}

InverseForm InverseForm::piecewise(const FamilyParams& fp) { return {Kind::piecewise_theorem, fp}; }
InverseForm InverseForm::rational(const FamilyParams& fp) { return {Kind::rational_remark, fp}; }

InverseForm InverseForm::brute(const FamilyParams& fp) {
  InverseForm form(Kind::brute_table, fp);
  form.table_ = poly::brute_inverse_table(family_poly(fp));
  return form;
}

InverseValue InverseForm::eval(Code y) const {
  switch (kind_) {
    case Kind::brute_table:
      return {table_.at(y), Branch::single_formula};
    case Kind::piecewise_theorem:
      switch (fp_.family()) {
        case Family::f1: return f1_inverse_piecewise(fp_, y);
        case Family::f2: return f2_inverse_piecewise(fp_, y);
        case Family::f3: return {f3_inverse_eval(fp_, y), Branch::single_formula};
      }
      break;
    case Kind::rational_remark: {
      const Branch branch = y == 0 ? Branch::zero : Branch::single_formula;
      switch (fp_.family()) {
        case Family::f1: return {f1_inverse_rational_eval(fp_, y), branch};
        case Family::f2: return {f2_inverse_rational_eval(fp_, y), branch};
        case Family::f3: return {f3_inverse_rational_eval(fp_, y), branch};
      }
      break;
    }
  }
  throw std::logic_error("unreachable");
}

Code InverseForm::operator()(Code y) const { return eval(y).value; }

std::string_view name(InverseForm::Kind kind) {
  switch (kind) {
    case InverseForm::Kind::piecewise_theorem: return "piecewise";
    case InverseForm::Kind::rational_remark: return "rational";
    case InverseForm::Kind::brute_table: return "brute";
  }
  return "?";
}

InverseForm::Kind parse_inverse_kind(std::string_view text) {
  if (text == "piecewise") return InverseForm::Kind::piecewise_theorem;
  if (text == "rational") return InverseForm::Kind::rational_remark;
  if (text == "brute") return InverseForm::Kind::brute_table;
  throw std::invalid_argument("unknown inverse form '" + std::string(text) +
                              "' (expected piecewise, rational, brute)");
}

PolyPair remark_quartics_f1(const tower::Tower& t, Code A, Code a, Code b, Code c, Code x) {
  const auto& f = t.field();
  const Arith ar{f};
  const Code A2 = f.mul(A, A);
  // f(y) = A y^4 + (a + x) y^3 + (bx + ab) y^2 + (aAx^2 + Ax^3) y + Aabx^2 + Abx^3 + a^2x^2
  std::vector<Code> fy{
      ar.sum({ar.prod({A, a, b, x, x}), ar.prod({A, b, x, x, x}), ar.prod({a, a, x, x})}),
      ar.sum({ar.prod({a, A, x, x}), ar.prod({A, x, x, x})}),
      ar.sum({f.mul(b, x), f.mul(a, b)}),
      f.add(a, x),
      A,
  };
  // g(y) = y^4 + (a^2A + Ax^2 + ac + cx) y^2 + (x^3 + a^2x) y + A^2x^4 + cAx^3 + acAx^2
  std::vector<Code> gy{
      ar.sum({ar.prod({A2, x, x, x, x}), ar.prod({c, A, x, x, x}), ar.prod({a, c, A, x, x})}),
      ar.sum({ar.prod({x, x, x}), ar.prod({a, a, x})}),
      ar.sum({ar.prod({a, a, A}), ar.prod({A, x, x}), f.mul(a, c), f.mul(c, x)}),
      0,
      1,
  };
  return {poly::DensePoly(t.field_ref(), std::move(fy)), poly::DensePoly(t.field_ref(), std::move(gy))};
}

PolyPair remark_quartics_f2(const tower::Tower& t, Code A, Code a, Code b, Code c, Code y) {
  const auto& f = t.field();
  const Arith ar{f};
  const Code A2 = f.mul(A, A);
  // f(x) = A x^4 + (b + y) x^3 + (ay + ab) x^2 + (bAy^2 + Ay^3) x + Aaby^2 + Aay^3 + b^2y^2
  std::vector<Code> fx{
      ar.sum({ar.prod({A, a, b, y, y}), ar.prod({A, a, y, y, y}), ar.prod({b, b, y, y})}),
      ar.sum({ar.prod({b, A, y, y}), ar.prod({A, y, y, y})}),
      ar.sum({f.mul(a, y), f.mul(a, b)}),
      f.add(b, y),
      A,
  };
  // g(x) = x^4 + (b^2A + Ay^2 + bc + cy) x^2 + (y^3 + b^2y) x + A^2y^4 + cAy^3 + bcAy^2
  std::vector<Code> gx{
      ar.sum({ar.prod({A2, y, y, y, y}), ar.prod({c, A, y, y, y}), ar.prod({b, c, A, y, y})}),
      ar.sum({ar.prod({y, y, y}), ar.prod({b, b, y})}),
      ar.sum({ar.prod({b, b, A}), ar.prod({A, y, y}), f.mul(b, c), f.mul(c, y)}),
      0,
      1,
  };
  return {poly::DensePoly(t.field_ref(), std::move(fx)), poly::DensePoly(t.field_ref(), std::move(gx))};
}

PolyPair remark_pair_f3(const tower::Tower& t, Code A, Code a, Code b, Code c, Code x) {
  const auto& f = t.field();
  const Arith ar{f};
  const Code A2 = f.mul(A, A), A3 = f.mul(A2, A), A4 = f.mul(A3, A);
  // f(y) = (Ax^2 + A^2bx - A^4x^2 + cx) y + A^2cx^2 - bcx
  std::vector<Code> fy{
      ar.sub(ar.prod({A2, c, x, x}), ar.prod({b, c, x})),
      ar.sub(ar.sum({ar.prod({A, x, x}), ar.prod({A2, b, x}), f.mul(c, x)}), ar.prod({A4, x, x})),
  };
  // g(y) = (A^3x - x + a) y^2 + (xb - ab + A^2ax) y
  std::vector<Code> gy{
      0,
      ar.sub(ar.sum({f.mul(x, b), ar.prod({A2, a, x})}), f.mul(a, b)),
      f.add(ar.sub(f.mul(A3, x), x), a),
  };
  return {poly::DensePoly(t.field_ref(), std::move(fy)), poly::DensePoly(t.field_ref(), std::move(gy))};
}

std::pair<Code, Code> remark_alpha_beta_f1(const gf::Field& f, Code A, Code a, Code b, Code c) {
  const Arith ar{f};
  const Code A2 = f.mul(A, A);
  const Code alpha = ar.sum({ar.prod({a, b, b, A2}), ar.prod({b, c, c, A2}), ar.prod({c, a, a, A2}),
                             ar.prod({a, a, a}), ar.prod({b, b, b}), ar.prod({c, c, c}),
                             ar.prod({a, b, c})});
  const Code beta = ar.sum({ar.prod({a, a, b, b, A2}), ar.prod({a, a, a, c, A2}),
                            ar.prod({a, b, c, c, A2}), ar.prod({c, c, c, c, A2}),
                            ar.prod({a, a, c, c, A}), ar.prod({a, b, b, b}), ar.prod({a, a, b, c}),
                            ar.prod({b, b, c, c}), ar.prod({a, c, c, c})});
  return {alpha, beta};
}

std::pair<Code, Code> remark_alpha_beta_f2(const gf::Field& f, Code A, Code a, Code b, Code c) {
  const Arith ar{f};
  const Code A2 = f.mul(A, A);
  const Code alpha = ar.sum({ar.prod({b, a, a, A2}), ar.prod({b, b, c, A2}), ar.prod({c, c, a, A2}),
                             ar.prod({a, a, a}), ar.prod({b, b, b}), ar.prod({c, c, c}),
                             ar.prod({a, b, c})});
  const Code beta = ar.sum({ar.prod({a, a, b, b, A2}), ar.prod({b, b, b, c, A2}),
                            ar.prod({a, b, c, c, A2}), ar.prod({c, c, c, c, A2}),
                            ar.prod({b, b, c, c, A}), ar.prod({b, a, a, a}), ar.prod({b, b, a, c}),
                            ar.prod({a, a, c, c}), ar.prod({b, c, c, c})});
  return {alpha, beta};
}

IdentityCheck remark_resultant_identity(const FamilyParams& fp, Code value, Code a) {
  const auto& t = fp.tower();
  const auto& f = fp.field();
  const Arith ar{f};
  const Code A = fp.A();
  const Code b = t.frob(a), c = t.frob(b);

  PolyPair pair = [&] {
    switch (fp.family()) {
      case Family::f1: return remark_quartics_f1(t, A, a, b, c, value);
      case Family::f2: return remark_quartics_f2(t, A, a, b, c, value);
      case Family::f3: return remark_pair_f3(t, A, a, b, c, value);
    }
    throw std::logic_error("unreachable");
  }();
  const int want_f = fp.family() == Family::f3 ? 1 : 4;
  const int want_g = fp.family() == Family::f3 ? 2 : 4;
  if (pair.f.degree() != want_f || pair.g.degree() != want_g) {
    return {IdentityCheck::Status::degenerate};
  }
  const Code resultant = poly::sylvester_resultant(pair.f, pair.g);

  Code factored = 0;
  switch (fp.family()) {
    case Family::f1: {
      const auto [alpha, beta] = remark_alpha_beta_f1(f, A, a, b, c);
      factored = ar.prod({ar.pow(value, 4), ar.pow(f.add(value, a), 8), f.add(f.mul(alpha, value), beta)});
      break;
    }
    case Family::f2: {
      const auto [alpha, beta] = remark_alpha_beta_f2(f, A, a, b, c);
      factored = ar.prod({ar.pow(value, 4), ar.pow(f.add(value, b), 8), f.add(f.mul(alpha, value), beta)});
      break;
    }
    case Family::f3: {
      const Code x = value;
      const Code A2 = f.mul(A, A), A3 = f.mul(A2, A);
      factored = ar.prod({A, c, x, x, ar.sub(f.mul(A2, x), b), ar.sub(f.mul(ar.sub(A3, 1), x), f.mul(b, A)),
                          ar.sub(f.mul(ar.sum({f.mul(a, A2), f.mul(c, A), b}), x), f.mul(a, b))});
      break;
    }
  }
  const auto status = resultant == factored ? IdentityCheck::Status::equal : IdentityCheck::Status::unequal;
  return {status, resultant, factored};
}

}  // namespace permpoly::families
