#include "permpoly/gf.hpp"

#include <algorithm>
#include <sstream>

#include "prime_poly.hpp"

namespace permpoly::gf {

using detail::PrimeField;
using detail::PrimePoly;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return 0;
    r *= base;
  }
  return r <= limit ? r : 0;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_characteristic(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw RangeError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw RangeError("extension degree must be at least 1");
  if (checked_pow(p, k) == 0) {
    throw RangeError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                     " exceeds 2^24");
  }
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  PrimeField fp(p);
  PrimePoly f(monic.begin(), monic.end());
  PrimeField::trim(f);
  const int k = PrimeField::degree(f);
  if (k < 1 || f.back() != 1) return false;
  if (k == 1) return true;
  const PrimePoly x{0, 1};
  PrimePoly h = x;
  for (int i = 1; i <= k / 2; ++i) {
    h = fp.powmod(h, p, f);
    if (PrimeField::degree(fp.gcd(f, fp.sub(h, x))) > 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k) {
  check_characteristic(p, k);
  const std::uint64_t count = checked_pow(p, k);
  std::vector<std::uint32_t> candidate(k + 1, 0);
  candidate[k] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (unsigned i = 0; i < k; ++i) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for valid p, k
}

FieldRef Field::make(std::uint32_t p, unsigned k) {
  return make(p, k, find_irreducible(p, k));
}

FieldRef Field::make(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  return std::make_shared<const Field>(Private{}, p, k, std::move(modulus));
}

Field::Field(Private, std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  check_characteristic(p, k);
  if (modulus_.size() != k + 1 || modulus_.back() != 1) {
    throw FieldError("modulus must be monic of degree " + std::to_string(k));
  }
  if (std::any_of(modulus_.begin(), modulus_.end(), [p](auto c) { return c >= p; })) {
    throw FieldError("modulus coefficients must be reduced mod p");
  }
  if (!is_irreducible(p, modulus_)) throw FieldError("modulus is not irreducible");
  order_ = static_cast<std::uint32_t>(checked_pow(p, k));
  digit_weight_.resize(k);
  std::uint32_t w = 1;
  for (unsigned i = 0; i < k; ++i, w *= p) digit_weight_[i] = w;

  generator_ = search_generator();

  // Multiplication by the generator is linear over GF(p): tabulate g * t^i.
  std::vector<Code> times_g(k);
  for (unsigned i = 0; i < k; ++i) times_g[i] = ref_mul(digit_weight_[i], generator_);

  exp_.resize(order_ - 1);
  log_.assign(order_, 0);
  Code acc = 1;
  for (std::uint32_t e = 0; e + 1 < order_; ++e) {
    exp_[e] = acc;
    log_[acc] = e;
    Code next = 0, rest = acc;
    for (unsigned i = 0; i < k; ++i, rest /= p_) {
      const std::uint32_t d = rest % p_;
      if (d != 0) next = add(next, scale(times_g[i], d));
    }
    acc = next;
  }
}

Code Field::scale(Code a, std::uint32_t d) const {
  if (d == 1) return a;
  Code r = 0;
  for (unsigned i = 0; i < k_; ++i, a /= p_) {
    r += static_cast<Code>((std::uint64_t{a % p_} * d) % p_) * digit_weight_[i];
  }
  return r;
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

Code Field::add_digits(Code a, Code b, bool subtract) const {
  Code r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t d = subtract ? (da + p_ - db) : (da + db);
    if (d >= p_) d -= p_;
    r += d * digit_weight_[i];
  }
  return r;
}

Code Field::inv(Code a) const {
  if (a == 0) throw DomainError("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (order_ - 1) - l];
}

Code Field::pow(Code a, const BigUint& e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto reduced = static_cast<std::uint64_t>(e % (order_ - 1));
  return exp_[(static_cast<std::uint64_t>(log_[a]) * reduced) % (order_ - 1)];
}

std::uint32_t Field::log(Code a) const {
  if (a == 0) throw DomainError("logarithm of zero");
  return log_[a];
}

Code Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw FieldError("too many coefficients for this field");
  Code r = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw FieldError("coefficient not reduced mod p");
    r += coeffs[i] * digit_weight_[i];
  }
  return r;
}

std::vector<std::uint32_t> Field::coeffs(Code a) const {
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Code Field::ref_mul(Code a, Code b) const {
  PrimeField fp(p_);
  auto pa = coeffs(a), pb = coeffs(b);
  PrimeField::trim(pa);
  PrimeField::trim(pb);
  PrimePoly r = fp.mod(fp.mul(pa, pb), modulus_);
  r.resize(k_, 0);
  return from_coeffs(r);
}

Code Field::ref_inv(Code a) const {
  if (a == 0) throw DomainError("inverse of zero");
  PrimeField fp(p_);
  auto pa = coeffs(a);
  PrimeField::trim(pa);
  PrimePoly r = fp.inverse_mod(pa, modulus_);
  r.resize(k_, 0);
  return from_coeffs(r);
}

Code Field::ref_pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e > 0) {
    if (e & 1) result = ref_mul(result, a);
    a = ref_mul(a, a);
    e >>= 1;
  }
  return result;
}

Code Field::search_generator() const {
  if (order_ == 2) return 1;
  const auto factors = prime_factors(order_ - 1);
  for (Code g = 1; g < order_; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](auto r) {
      return ref_pow(g, (order_ - 1) / r) != 1;
    });
    if (primitive) return g;
  }
  throw FieldError("no generator found");  // unreachable
}

bool Field::in_subfield(Code a, std::uint64_t q) const {
  unsigned m = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= p_;
    ++m;
  }
  if (v != q || m == 0 || k_ % m != 0) {
    throw RangeError(std::to_string(q) + " is not a subfield order of GF(" +
                     std::to_string(p_) + "^" + std::to_string(k_) + ")");
  }
  return pow(a, q) == a;
}

std::string Field::to_string(Code a) const {
  const auto c = coeffs(a);
  std::ostringstream os;
  for (unsigned i = 0; i < k_; ++i) {
    if (i) os << ':';
    os << c[i];
  }
  return os.str();
}

Element::Element(const Field& field, Code code) : field_(&field), code_(code) {
  if (!field.contains(code)) throw FieldError("element code out of range");
}

Element Element::from_coeffs(const Field& field, std::span<const std::uint32_t> coeffs) {
  return {field, field.from_coeffs(coeffs)};
}

namespace {
const Field& common_field(const Element& a, const Element& b) {
  if (!a.field().same_as(b.field())) throw MismatchError("elements belong to different fields");
  return a.field();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return {f, f.add(a.code(), b.code())};
}
Element operator-(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return {f, f.sub(a.code(), b.code())};
}
Element operator*(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return {f, f.mul(a.code(), b.code())};
}
Element operator/(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return {f, f.div(a.code(), b.code())};
}
bool operator==(const Element& a, const Element& b) {
  return a.field().same_as(b.field()) && a.code() == b.code();
}

Element find_generator(const Field& field) { return {field, field.generator()}; }

bool is_in_subfield(const Element& a, std::uint64_t q) { return a.field().in_subfield(a.code(), q); }

}  // namespace permpoly::gf
