#include <fstream>
#include <sstream>

#include "permpoly/gf.hpp"

namespace permpoly::gf {

namespace {

bool parse_line(const std::string& line, std::uint32_t& p, unsigned& k,
                std::vector<std::uint32_t>& coeffs) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) return false;
  std::istringstream head(line.substr(0, colon));
  if (!(head >> p >> k)) return false;
  std::istringstream tail(line.substr(colon + 1));
  coeffs.clear();
  for (std::uint32_t c; tail >> c;) coeffs.push_back(c);
  return tail.eof() && coeffs.size() == k + 1;
}

}  // namespace

ModulusCache::ModulusCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // created on first append
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::uint32_t p = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> coeffs;
    if (!parse_line(line, p, k, coeffs)) {
      throw FieldError(path_.string() + ":" + std::to_string(lineno) + ": malformed modulus entry");
    }
    if (!is_prime(p) || coeffs.back() != 1 || !is_irreducible(p, coeffs)) {
      throw FieldError(path_.string() + ":" + std::to_string(lineno) +
                       ": cached modulus is not monic irreducible");
    }
    entries_[{p, k}] = std::move(coeffs);
  }
}

std::vector<std::uint32_t> ModulusCache::get(std::uint32_t p, unsigned k) {
  if (auto it = entries_.find({p, k}); it != entries_.end()) return it->second;
  auto modulus = find_irreducible(p, k);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw FieldError("cannot append to modulus cache " + path_.string());
  out << format_line(p, k, modulus) << '\n';
  entries_[{p, k}] = modulus;
  return modulus;
}

std::string ModulusCache::format_line(std::uint32_t p, unsigned k,
                                      std::span<const std::uint32_t> modulus) {
  std::ostringstream os;
  os << p << ' ' << k << ':';
  for (auto c : modulus) os << ' ' << c;
  return os.str();
}

}  // namespace permpoly::gf
