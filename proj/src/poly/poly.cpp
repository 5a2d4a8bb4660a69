#include "permpoly/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permpoly::poly {

namespace {

void require_same(const gf::Field& a, const gf::Field& b) {
  if (!a.same_as(b)) throw gf::MismatchError("polynomials over different fields");
}

// `c*x^e`, dropping a unit coefficient and writing x^1 as x, x^0 as 1.
void write_term(std::ostream& os, const gf::Field& f, Code c, std::uint64_t e) {
  if (e == 0) {
    os << f.to_string(c);
    return;
  }
  if (c != 1) os << f.to_string(c) << '*';
  os << 'x';
  if (e > 1) os << '^' << e;
}

}  // namespace

SparsePoly::SparsePoly(gf::FieldRef field, std::vector<Term> terms) : field_(std::move(field)) {
  std::map<std::uint64_t, Code> merged;
  for (const auto& t : terms) {
    if (!field_->contains(t.coeff)) throw gf::FieldError("coefficient code out of range");
    if (t.exponent >= (std::uint64_t{1} << 63)) throw std::invalid_argument("exponent exceeds 2^63");
    auto& slot = merged[t.exponent];
    slot = field_->add(slot, t.coeff);
  }
  for (const auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({e, c});
  }
}

Code SparsePoly::eval(Code x) const {
  const auto& f = *field_;
  Code acc = 0;
  for (const auto& t : terms_) acc = f.add(acc, f.mul(t.coeff, f.pow(x, t.exponent)));
  return acc;
}

SparsePoly SparsePoly::normalized() const {
  const std::uint64_t period = field_->order() - 1;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const std::uint64_t e = t.exponent == 0 ? 0 : ((t.exponent - 1) % period) + 1;
    out.push_back({e, t.coeff});
  }
  return {field_, std::move(out)};
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    write_term(os, *field_, terms_[i].coeff, terms_[i].exponent);
  }
  return os.str();
}

DensePoly::DensePoly(gf::FieldRef field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_->contains(c)) throw gf::FieldError("coefficient code out of range");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::monomial(gf::FieldRef field, Code c, std::size_t e) {
  std::vector<Code> coeffs(e + 1, 0);
  coeffs[e] = c;
  return {std::move(field), std::move(coeffs)};
}

Code DensePoly::eval(Code x) const {
  const auto& f = *field_;
  Code acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

DensePoly DensePoly::scaled(Code c) const {
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return {field_, std::move(out)};
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& divisor) const {
  require_same(*field_, divisor.field());
  if (divisor.is_zero()) throw gf::DomainError("polynomial division by zero");
  const auto& f = *field_;
  std::vector<Code> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  if (rem.size() < dn) return {zero(field_), *this};
  std::vector<Code> quot(rem.size() - dn + 1, 0);
  const Code lead_inv = f.inv(divisor.lead());
  for (std::size_t i = rem.size(); i-- >= dn;) {
    const Code c = f.mul(rem[i], lead_inv);
    const std::size_t shift = i - (dn - 1);
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) {
      rem[shift + j] = f.sub(rem[shift + j], f.mul(c, divisor.coeffs_[j]));
    }
  }
  return {DensePoly(field_, std::move(quot)), DensePoly(field_, std::move(rem))};
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  require_same(a.field(), b.field());
  std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(a.coeff(i), b.coeff(i));
  return {a.field_, std::move(out)};
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  require_same(a.field(), b.field());
  std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().sub(a.coeff(i), b.coeff(i));
  return {a.field_, std::move(out)};
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  require_same(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return DensePoly::zero(a.field_);
  const auto& f = a.field();
  std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return {a.field_, std::move(out)};
}

bool operator==(const DensePoly& a, const DensePoly& b) {
  return a.field().same_as(b.field()) && a.coeffs_ == b.coeffs_;
}

std::string DensePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    write_term(os, *field_, coeffs_[i], i);
  }
  return os.str();
}

DensePoly reduce_mod_field(const DensePoly& f) {
  const std::uint64_t period = f.field().order() - 1;
  std::vector<Code> out(std::min<std::size_t>(f.coeffs().size(), period + 1), 0);
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    const std::size_t r = e == 0 ? 0 : ((e - 1) % period) + 1;
    out[r] = f.field().add(out[r], f.coeffs()[e]);
  }
  return {f.field_ref(), std::move(out)};
}

DensePoly to_dense(const SparsePoly& f) {
  if (f.is_zero()) return DensePoly::zero(f.field_ref());
  const auto top = f.terms().back().exponent;
  if (top > gf::kMaxOrder) throw std::length_error("degree too large for a dense polynomial");
  std::vector<Code> coeffs(top + 1, 0);
  for (const auto& t : f.terms()) coeffs[t.exponent] = t.coeff;
  return {f.field_ref(), std::move(coeffs)};
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  s = strip(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number in '" + std::string(context) + "'");
  }
  return v;
}

Code parse_coeff(const gf::Field& field, std::string_view s, std::string_view term) {
  s = strip(s);
  if (s.starts_with("g^")) return field.pow(field.generator(), parse_uint(s.substr(2), term));
  std::vector<std::uint32_t> digits;
  std::size_t start = 0;
  while (true) {
    const auto colon = s.find(':', start);
    const auto v = parse_uint(s.substr(start, colon == s.npos ? s.npos : colon - start), term);
    if (v >= field.characteristic()) {
      throw std::invalid_argument("digit not reduced mod p in '" + std::string(term) + "'");
    }
    digits.push_back(static_cast<std::uint32_t>(v));
    if (colon == s.npos) break;
    start = colon + 1;
  }
  if (digits.size() > field.degree()) {
    throw std::invalid_argument("too many digits in '" + std::string(term) + "'");
  }
  return field.from_coeffs(digits);
}

}  // namespace

Code parse_element(const gf::Field& field, std::string_view text) {
  return parse_coeff(field, text, text);
}

SparsePoly parse_sparse(const gf::FieldRef& field, std::string_view text) {
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto term = strip(text.substr(start, plus == text.npos ? text.npos : plus - start));
    if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + std::string(text) + "'");
    std::string_view coeff_part, mono_part;
    if (const auto star = term.find('*'); star != term.npos) {
      coeff_part = term.substr(0, star);
      mono_part = strip(term.substr(star + 1));
    } else if (term.front() == 'x') {
      mono_part = term;
    } else {
      coeff_part = term;
    }
    const Code c = coeff_part.empty() ? Code{1} : parse_coeff(*field, coeff_part, term);
    std::uint64_t e = 0;
    if (!mono_part.empty()) {
      if (mono_part.front() != 'x') throw std::invalid_argument("expected x in '" + std::string(term) + "'");
      const auto rest = strip(mono_part.substr(1));
      if (rest.empty()) {
        e = 1;
      } else if (rest.front() == '^') {
        e = parse_uint(rest.substr(1), term);
      } else {
        throw std::invalid_argument("expected ^ in '" + std::string(term) + "'");
      }
    }
    terms.push_back({e, c});
    if (plus == text.npos) break;
    start = plus + 1;
  }
  return {field, std::move(terms)};
}

DensePoly interpolate(const gf::FieldRef& field, std::span<const std::pair<Code, Code>> points) {
  const auto& f = *field;
  // master = prod (x - x_i)
  DensePoly master = DensePoly::constant(field, 1);
  for (const auto& [x, y] : points) {
    master = master * DensePoly(field, {f.neg(x), 1});
  }
  std::vector<Code> acc(points.size(), 0);
  for (const auto& [xi, yi] : points) {
    if (yi == 0) continue;
    // basis = master / (x - xi) by synthetic division.
    const auto& m = master.coeffs();
    std::vector<Code> basis(m.size() - 1, 0);
    Code carry = 0;
    for (std::size_t i = m.size() - 1; i-- > 0;) {
      carry = f.add(m[i + 1], f.mul(carry, xi));
      basis[i] = carry;
    }
    // Horner value of basis at xi is prod_{j != i} (xi - xj).
    Code weight = 0;
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) weight = f.add(f.mul(weight, xi), *it);
    if (weight == 0) throw std::invalid_argument("interpolation points are not distinct");
    const Code scale = f.div(yi, weight);
    for (std::size_t i = 0; i < basis.size(); ++i) acc[i] = f.add(acc[i], f.mul(basis[i], scale));
  }
  return {field, std::move(acc)};
}

DensePoly lagrange_interpolate(const gf::FieldRef& field,
                               std::span<const std::pair<Code, Code>> points,
                               std::uint64_t guard) {
  const auto& f = *field;
  if (f.order() > guard) {
    throw std::length_error("field order " + std::to_string(f.order()) +
                            " exceeds the interpolation guard " + std::to_string(guard));
  }
  std::vector<bool> seen(f.order(), false);
  for (const auto& [x, y] : points) {
    if (!f.contains(x) || !f.contains(y)) throw std::invalid_argument("point outside the field");
    if (seen[x]) throw std::invalid_argument("repeated x-value " + f.to_string(x));
    seen[x] = true;
  }
  if (points.size() != f.order()) {
    throw std::invalid_argument("points cover " + std::to_string(points.size()) + " of " +
                                std::to_string(f.order()) + " field elements");
  }
  return interpolate(field, points);
}

scan::PermCheckReport is_permutation(const SparsePoly& f) {
  return scan::is_permutation(f.field(), [&](Code x) { return f.eval(x); });
}

std::uint64_t count_roots(const SparsePoly& f) {
  return scan::count_roots(f.field(), [&](Code x) { return f.eval(x); });
}

std::vector<Code> brute_inverse_table(const SparsePoly& f) {
  return scan::brute_inverse_table(f.field(), [&](Code x) { return f.eval(x); });
}

scan::InverseCheck verify_inverse(const SparsePoly& f, const scan::PointMap& g) {
  return scan::verify_inverse(f.field(), [&](Code x) { return f.eval(x); }, g);
}

}  // namespace permpoly::poly
