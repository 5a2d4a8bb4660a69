#include "permpoly/tower.hpp"

#include <charconv>
#include <stdexcept>

namespace permpoly::tower {

Tower Tower::make(std::uint32_t p, unsigned m, gf::ModulusCache* cache) {
  if (m < 1) throw gf::RangeError("tower base degree must be at least 1");
  if (!gf::is_prime(p)) throw gf::RangeError("characteristic " + std::to_string(p) + " is not prime");
  if (gf::checked_pow(p, 3 * m) == 0) {
    throw gf::RangeError("tower order " + std::to_string(p) + "^" + std::to_string(3 * m) +
                         " exceeds 2^24");
  }
  auto field = cache ? cache->field(p, 3 * m) : gf::Field::make(p, 3 * m);
  return Tower(std::move(field), m, gf::checked_pow(p, m));
}

Code frob_q(const Tower& t, Code x) { return t.frob(x); }

Code lmap_eval(const Tower& t, const LinearizedMap& c, Code x) {
  const auto& f = t.field();
  const Code y = t.frob(x);
  const Code z = t.frob(y);
  return f.add(f.add(f.mul(c.c0, x), f.mul(c.c1, y)), f.mul(c.c2, z));
}

std::vector<Code> cube_roots_of_unity(const Tower& t) {
  const auto& f = t.field();
  const std::uint64_t n = f.order() - 1;
  if (n % 3 != 0) return {f.one()};
  const Code w = f.exp(n / 3);
  return {f.one(), w, f.mul(w, w)};
}

std::vector<Code> subfield_units(const Tower& t) {
  const auto& f = t.field();
  const std::uint64_t count = t.q() - 1;
  const Code h = f.exp((f.order() - 1) / count);
  std::vector<Code> out;
  out.reserve(count);
  Code acc = f.one();
  for (std::uint64_t j = 0; j < count; ++j) {
    out.push_back(acc);
    acc = f.mul(acc, h);
  }
  return out;
}

FrobeniusTable::FrobeniusTable(const Tower& t) : field_(&t.field()) {
  const auto& f = t.field();
  Code basis = f.one();
  for (unsigned i = 0; i < f.degree(); ++i) {
    images_.push_back(t.frob(basis));
    basis = f.mul(basis, f.t());
  }
}

Code FrobeniusTable::apply(Code x) const {
  const auto& f = *field_;
  const std::uint32_t p = f.characteristic();
  Code r = 0;
  for (std::size_t i = 0; i < images_.size(); ++i, x /= p) {
    const std::uint32_t d = x % p;
    if (d != 0) r = f.add(r, f.mul(f.from_int(d), images_[i]));
  }
  return r;
}

namespace {

std::uint64_t parse_index(std::string_view text, std::string_view selector) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad index in selector '" + std::string(selector) + "'");
  }
  return v;
}

}  // namespace

Code resolve_selector(const Tower& t, std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("selector '" + std::string(selector) +
                                "' must be unity3:j, unit:j, or coeffs:c0,c1,...");
  }
  const auto kind = selector.substr(0, colon);
  const auto rest = selector.substr(colon + 1);
  auto pick = [&](const std::vector<Code>& list) {
    const auto j = parse_index(rest, selector);
    if (j >= list.size()) {
      throw std::invalid_argument("selector '" + std::string(selector) + "' out of range (" +
                                  std::to_string(list.size()) + " candidates)");
    }
    return list[j];
  };
  if (kind == "unity3") return pick(cube_roots_of_unity(t));
  if (kind == "unit") return pick(subfield_units(t));
  if (kind == "coeffs") {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const auto piece = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
      const auto v = parse_index(piece, selector);
      if (v >= t.p()) throw std::invalid_argument("coefficient " + std::to_string(v) + " not reduced mod p");
      coeffs.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (coeffs.size() > t.field().degree()) {
      throw std::invalid_argument("too many coefficients in selector '" + std::string(selector) + "'");
    }
    return t.field().from_coeffs(coeffs);
  }
  throw std::invalid_argument("unknown selector kind '" + std::string(kind) + "'");
}

}  // namespace permpoly::tower
