#pragma once

// Finitely generated abelian groups described by their structure invariants.
//
// The canonical form is the primary decomposition: a free rank plus, for
// every prime p dividing the torsion order, the non-increasing list of
// exponents a_1 >= a_2 >= ... so that the p-part is C_{p^a_1} x C_{p^a_2} x ...
// Two descriptors compare equal iff the groups are isomorphic.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilaut {

using Int = std::uint64_t;

// Checked 64-bit arithmetic; throws std::overflow_error.
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned exponent);

bool is_prime(Int n);
// Prime factorization in increasing prime order, n >= 1.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
Int gcd(Int a, Int b);

class FgAbelian {
 public:
  using PrimaryMap = std::map<Int, std::vector<unsigned>>;

  // The trivial group.
  FgAbelian() = default;

  // Exponent lists may come in any order and are sorted; zero exponents
  // are dropped. Throws std::invalid_argument for a non-prime key.
  static FgAbelian from_primary(PrimaryMap primary, unsigned free_rank = 0);

  // Without `refactor`, `factors` must be a divisor chain of integers >= 2.
  // With it, any list of integers >= 2 is accepted and split into primary parts.
  static FgAbelian from_invariant_factors(std::span<const Int> factors, unsigned free_rank,
                                          bool refactor = false);
  static FgAbelian free(unsigned rank);
  // C_n; cyclic(1) is trivial.
  static FgAbelian cyclic(Int n);

  // `Z^b x C_{n1} x C_{n2} ...`, whitespace-insensitive. Also accepts `Z`,
  // `C_n^k` for k copies, and `1` for the trivial group.
  static FgAbelian parse(std::string_view text);

  unsigned free_rank() const { return free_rank_; }
  const PrimaryMap& primary() const { return primary_; }
  // Exponents at p; empty when p does not divide the torsion order.
  std::vector<unsigned> exponents_at(Int p) const;
  std::set<Int> primes() const;

  bool is_trivial() const { return free_rank_ == 0 && primary_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_torsion_free() const { return primary_.empty(); }
  bool is_mixed() const { return free_rank_ > 0 && !primary_.empty(); }

  FgAbelian torsion() const;
  FgAbelian sylow(Int p) const;
  // Order of a finite descriptor. Throws std::domain_error when infinite.
  Int order() const;

  // Emission in invariant-factor order, largest factor first: `Z^1 x C_4 x C_2`.
  std::string to_string() const;

  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;
  friend auto operator<=>(const FgAbelian&, const FgAbelian&) = default;

 private:
  unsigned free_rank_ = 0;
  PrimaryMap primary_;
};

struct InvariantFactors {
  // Divisor chain, each entry >= 2 and dividing the next.
  std::vector<Int> factors;
  unsigned free_rank = 0;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

InvariantFactors invariant_factors(const FgAbelian& u);
bool is_isomorphic(const FgAbelian& u, const FgAbelian& v);

// Hom(U, V) = Hom(T(U), T(V)) x T(V)^rho(U) x Z^(rho(U) rho(V)), with
// Hom(C_{p^a}, C_{p^b}) = C_{p^min(a,b)} for every same-prime pair of factors.
FgAbelian hom_structure(const FgAbelian& u, const FgAbelian& v);

// r(U) = d(U) + rho(U).
unsigned rank(const FgAbelian& u);
// d(U): the largest number of primary factors at a single prime.
unsigned torsion_rank(const FgAbelian& u);
unsigned free_rank(const FgAbelian& u);
// 1 for trivial torsion.
Int exponent_of_torsion(const FgAbelian& u);
bool is_homocyclic_at(const FgAbelian& u, Int p);
// Finite and all invariant factors equal (the trivial group counts).
bool is_homocyclic(const FgAbelian& u);
bool is_cyclic(const FgAbelian& u);
FgAbelian direct_product(const FgAbelian& u, const FgAbelian& v);
FgAbelian power(const FgAbelian& u, unsigned n);

}  // namespace nilaut
