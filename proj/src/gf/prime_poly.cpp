#include "prime_poly.hpp"

#include <algorithm>

namespace permpoly::gf::detail {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void PrimeField::trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly PrimeField::sub(const PrimePoly& a, const PrimePoly& b) const {
  PrimePoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

PrimePoly PrimeField::mul(const PrimePoly& a, const PrimePoly& b) const {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

std::pair<PrimePoly, PrimePoly> PrimeField::divmod(const PrimePoly& a,
                                                   const PrimePoly& b) const {
  PrimePoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  PrimePoly q(r.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    const std::uint32_t c = mul(r[i], lead_inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = sub(r[shift + j], mul(c, b[j]));
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

PrimePoly PrimeField::mulmod(const PrimePoly& a, const PrimePoly& b,
                             const PrimePoly& m) const {
  return mod(mul(a, b), m);
}

PrimePoly PrimeField::powmod(PrimePoly a, std::uint64_t e, const PrimePoly& m) const {
  PrimePoly result = mod(PrimePoly{1}, m);
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

PrimePoly PrimeField::gcd(PrimePoly a, PrimePoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t lead_inv = inv(a.back());
    for (auto& c : a) c = mul(c, lead_inv);
  }
  return a;
}

PrimePoly PrimeField::inverse_mod(const PrimePoly& a, const PrimePoly& m) const {
  // Invariant: s0 * a = r0 (mod m), s1 * a = r1 (mod m).
  PrimePoly r0 = m, r1 = mod(a, m);
  PrimePoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    PrimePoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return {};
  const std::uint32_t scale = inv(r0[0]);
  for (auto& c : s0) c = mul(c, scale);
  return mod(s0, m);
}

}  // namespace permpoly::gf::detail
