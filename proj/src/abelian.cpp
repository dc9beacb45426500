#include "nilaut/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nilaut/errors.hpp"

namespace nilaut {

Int checked_mul(Int a, Int b) {
  if (a != 0 && b > std::numeric_limits<Int>::max() / a)
    throw std::overflow_error("integer overflow in multiplication");
  return a * b;
}

Int checked_pow(Int base, unsigned exponent) {
  Int result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<std::pair<Int, unsigned>> out;
  for (Int d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int gcd(Int a, Int b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

FgAbelian FgAbelian::from_primary(PrimaryMap primary, unsigned free_rank) {
  FgAbelian u;
  u.free_rank_ = free_rank;
  for (auto& [p, exps] : primary) {
    if (!is_prime(p)) throw std::invalid_argument("primary key " + std::to_string(p) + " is not prime");
    std::erase(exps, 0u);
    if (exps.empty()) continue;
    std::sort(exps.begin(), exps.end(), std::greater<>());
    u.primary_.emplace(p, std::move(exps));
  }
  return u;
}

FgAbelian FgAbelian::from_invariant_factors(std::span<const Int> factors, unsigned free_rank,
                                            bool refactor) {
  PrimaryMap primary;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw std::invalid_argument("invariant factor " + std::to_string(factors[i]) + " is < 2");
    if (!refactor && i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw std::invalid_argument("factors do not form a divisor chain");
    for (auto [p, e] : factorize(factors[i])) primary[p].push_back(e);
  }
  return from_primary(std::move(primary), free_rank);
}

FgAbelian FgAbelian::free(unsigned rank) {
  FgAbelian u;
  u.free_rank_ = rank;
  return u;
}

FgAbelian FgAbelian::cyclic(Int n) {
  if (n == 0) throw std::invalid_argument("cyclic(0); use free(1) for Z");
  if (n == 1) return {};
  const Int f[] = {n};
  return from_invariant_factors(f, 0);
}

namespace {

class DescriptorScanner {
 public:
  explicit DescriptorScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Int number() {
    skip_ws();
    std::size_t start = pos_;
    Int value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = checked_mul(value, 10) + static_cast<Int>(s_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad abelian descriptor '" + std::string(s_) + "': " + what, 1, pos_ + 1);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FgAbelian FgAbelian::parse(std::string_view text) {
  DescriptorScanner sc(text);
  if (sc.done()) sc.fail("empty descriptor");
  unsigned free = 0;
  std::vector<Int> factors;
  do {
    if (sc.accept('Z')) {
      Int k = 1;
      if (sc.accept('^')) k = sc.number();
      free += static_cast<unsigned>(k);
    } else if (sc.accept('C')) {
      sc.expect('_');
      Int n;
      if (sc.accept('{')) {
        n = sc.number();
        sc.expect('}');
      } else {
        n = sc.number();
      }
      Int copies = 1;
      if (sc.accept('^')) copies = sc.number();
      if (n < 1) sc.fail("cyclic order must be positive");
      if (n >= 2)
        for (Int i = 0; i < copies; ++i) factors.push_back(n);
    } else {
      if (sc.number() != 1) sc.fail("expected Z, C_n or 1");
    }
  } while (sc.accept('x'));
  if (!sc.done()) sc.fail("trailing input");
  return from_invariant_factors(factors, free, /*refactor=*/true);
}

std::vector<unsigned> FgAbelian::exponents_at(Int p) const {
  auto it = primary_.find(p);
  return it == primary_.end() ? std::vector<unsigned>{} : it->second;
}

std::set<Int> FgAbelian::primes() const {
  std::set<Int> out;
  for (const auto& [p, _] : primary_) out.insert(p);
  return out;
}

FgAbelian FgAbelian::torsion() const {
  FgAbelian t = *this;
  t.free_rank_ = 0;
  return t;
}

FgAbelian FgAbelian::sylow(Int p) const {
  FgAbelian s;
  if (auto it = primary_.find(p); it != primary_.end()) s.primary_.emplace(p, it->second);
  return s;
}

Int FgAbelian::order() const {
  if (free_rank_ != 0) throw std::domain_error("order of an infinite group");
  Int n = 1;
  for (const auto& [p, exps] : primary_)
    for (unsigned e : exps) n = checked_mul(n, checked_pow(p, e));
  return n;
}

std::string FgAbelian::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z^" << free_rank_;
    first = false;
  }
  auto inv = invariant_factors(*this);
  for (auto it = inv.factors.rbegin(); it != inv.factors.rend(); ++it) {
    if (!first) os << " x ";
    os << "C_" << *it;
    first = false;
  }
  return os.str();
}

InvariantFactors invariant_factors(const FgAbelian& u) {
  std::size_t k = 0;
  for (const auto& [p, exps] : u.primary()) k = std::max(k, exps.size());
  // largest factor first, then reversed into a divisor chain
  std::vector<Int> factors(k, 1);
  for (const auto& [p, exps] : u.primary())
    for (std::size_t i = 0; i < exps.size(); ++i)
      factors[i] = checked_mul(factors[i], checked_pow(p, exps[i]));
  std::reverse(factors.begin(), factors.end());
  return {std::move(factors), u.free_rank()};
}

bool is_isomorphic(const FgAbelian& u, const FgAbelian& v) { return u == v; }

FgAbelian hom_structure(const FgAbelian& u, const FgAbelian& v) {
  FgAbelian::PrimaryMap out;
  for (const auto& [p, us] : u.primary()) {
    auto vs = v.exponents_at(p);
    for (unsigned a : us)
      for (unsigned b : vs) out[p].push_back(std::min(a, b));
  }
  // T(V)^rho(U)
  for (const auto& [p, vs] : v.primary())
    for (unsigned i = 0; i < u.free_rank(); ++i)
      out[p].insert(out[p].end(), vs.begin(), vs.end());
  return FgAbelian::from_primary(std::move(out), u.free_rank() * v.free_rank());
}

unsigned torsion_rank(const FgAbelian& u) {
  std::size_t d = 0;
  for (const auto& [p, exps] : u.primary()) d = std::max(d, exps.size());
  return static_cast<unsigned>(d);
}

unsigned free_rank(const FgAbelian& u) { return u.free_rank(); }

unsigned rank(const FgAbelian& u) { return torsion_rank(u) + u.free_rank(); }

Int exponent_of_torsion(const FgAbelian& u) {
  Int e = 1;
  for (const auto& [p, exps] : u.primary()) e = checked_mul(e, checked_pow(p, exps.front()));
  return e;
}

bool is_homocyclic_at(const FgAbelian& u, Int p) {
  auto exps = u.exponents_at(p);
  return std::adjacent_find(exps.begin(), exps.end(), std::not_equal_to<>()) == exps.end();
}

bool is_homocyclic(const FgAbelian& u) {
  if (!u.is_finite()) return false;
  auto inv = invariant_factors(u);
  return std::adjacent_find(inv.factors.begin(), inv.factors.end(), std::not_equal_to<>()) ==
         inv.factors.end();
}

bool is_cyclic(const FgAbelian& u) { return rank(u) <= 1; }

FgAbelian direct_product(const FgAbelian& u, const FgAbelian& v) {
  auto primary = u.primary();
  for (const auto& [p, vs] : v.primary()) primary[p].insert(primary[p].end(), vs.begin(), vs.end());
  return FgAbelian::from_primary(std::move(primary), u.free_rank() + v.free_rank());
}

FgAbelian power(const FgAbelian& u, unsigned n) {
  FgAbelian out;
  for (unsigned i = 0; i < n; ++i) out = direct_product(out, u);
  return out;
}

}  // namespace nilaut
