#include <stdexcept>

#include "permpoly/poly.hpp"

namespace permpoly::poly {

std::vector<std::vector<Code>> sylvester_matrix(const DensePoly& f, const DensePoly& g) {
  const int n = f.degree(), m = g.degree();
  const std::size_t size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<Code>> rows(size, std::vector<Code>(size, 0));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) rows[r][r + i] = f.coeff(n - i);
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) rows[m + r][r + i] = g.coeff(m - i);
  }
  return rows;
}

Code determinant(const gf::Field& field, std::vector<std::vector<Code>> a) {
  const std::size_t n = a.size();
  Code det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = field.neg(det);
    }
    det = field.mul(det, a[col][col]);
    const Code inv = field.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Code factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
      }
    }
  }
  return det;
}

Code sylvester_resultant(const DensePoly& f, const DensePoly& g) {
  if (!f.field().same_as(g.field())) throw gf::MismatchError("polynomials over different fields");
  if (f.degree() < 1 || g.degree() < 1) {
    throw std::invalid_argument("resultant needs two polynomials of degree at least 1");
  }
  return determinant(f.field(), sylvester_matrix(f, g));
}

namespace {

// The coefficient field embedded in an extension of degree d over it.
struct Embedding {
  gf::FieldRef big;
  std::vector<Code> image;  // image[c] for every code c of the small field

  Embedding(const gf::Field& small, unsigned d) {
    big = gf::Field::make(small.characteristic(), small.degree() * d);
    const auto& B = *big;
    // A root theta of the small field's modulus generates its copy inside B.
    const auto& mod = small.modulus();
    Code theta = 0;
    bool found = false;
    for (Code z = 0; z < B.order() && !found; ++z) {
      Code acc = 0;
      for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = B.add(B.mul(acc, z), B.from_int(*it));
      if (acc == 0) {
        theta = z;
        found = true;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in its extension");
    std::vector<Code> powers(small.degree());
    Code pw = 1;
    for (auto& p : powers) {
      p = pw;
      pw = B.mul(pw, theta);
    }
    image.resize(small.order());
    for (Code c = 0; c < small.order(); ++c) {
      const auto digits = small.coeffs(c);
      Code acc = 0;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        acc = B.add(acc, B.mul(B.from_int(digits[i]), powers[i]));
      }
      image[c] = acc;
    }
  }

  std::vector<Code> map(const DensePoly& f) const {
    std::vector<Code> out;
    out.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) out.push_back(image[c]);
    return out;
  }
};

Code horner(const gf::Field& F, const std::vector<Code>& coeffs, Code x) {
  Code acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

// Divides by (x - root) in place when the remainder is zero.
bool divide_out(const gf::Field& F, std::vector<Code>& coeffs, Code root) {
  if (coeffs.size() < 2) return false;
  std::vector<Code> quot(coeffs.size() - 1);
  Code carry = 0;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    carry = F.add(coeffs[i + 1], F.mul(carry, root));
    quot[i] = carry;
  }
  const Code rem = F.add(coeffs[0], F.mul(carry, root));
  if (rem != 0) return false;
  coeffs = std::move(quot);
  return true;
}

}  // namespace

std::optional<Code> resultant_by_roots(const DensePoly& f, const DensePoly& g, std::uint64_t cap) {
  if (!f.field().same_as(g.field())) throw gf::MismatchError("polynomials over different fields");
  if (f.degree() < 1 || g.degree() < 1) {
    throw std::invalid_argument("resultant needs two polynomials of degree at least 1");
  }
  const auto& small = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  const auto m = static_cast<std::uint64_t>(g.degree());
  for (unsigned d = 1;; ++d) {
    const std::uint64_t big_order = gf::checked_pow(small.order(), d, cap);
    if (big_order == 0) return std::nullopt;
    const Embedding emb(small, d);
    const auto& B = *emb.big;
    auto rest = emb.map(f);
    const auto gb = emb.map(g);
    std::vector<Code> roots;
    for (Code z = 0; z < B.order() && roots.size() < n; ++z) {
      while (divide_out(B, rest, z)) roots.push_back(z);
    }
    if (roots.size() < n) continue;  // does not split yet

    Code r = B.pow(emb.image[f.lead()], m);
    for (auto alpha : roots) r = B.mul(r, horner(B, gb, alpha));
    for (Code c = 0; c < small.order(); ++c) {
      if (emb.image[c] == r) return c;
    }
    throw std::logic_error("resultant fell outside the coefficient field");
  }
}

}  // namespace permpoly::poly
