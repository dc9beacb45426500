#pragma once

// Automorphism sets of finite groups: Inn, IA, IA*, Aut_c, built from
// Hom(G/G', G') for class 2 and by generator-image search otherwise.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilaut/abelian.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/kernels.hpp"
#include "nilaut/pcgroup.hpp"

namespace nilaut {

// A bijection of element indices that respects multiplication.
class Automorphism {
 public:
  // Checks bijectivity and phi(g s) = phi(g) phi(s) for all g and every
  // generator s, which forces multiplicativity. Throws PreconditionError.
  static Automorphism from_images(const FiniteGroup& g, std::vector<Index> images);
  static Automorphism identity(const FiniteGroup& g);

  Index operator()(Index x) const { return images_[x]; }
  const std::vector<Index>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  explicit Automorphism(std::vector<Index> images) : images_(std::move(images)) {}
  friend Automorphism compose(const Automorphism& a, const Automorphism& b);
  friend Automorphism inverse(const Automorphism& a);
  std::vector<Index> images_;
};

// a after b: x -> a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);

enum class AutKind { Inner, IA, IAStar, AutC, Full, Other };
std::string to_string(AutKind kind);

// A sorted, duplicate-free set of automorphisms of one group.
class AutSet {
 public:
  AutSet(AutKind kind, std::size_t degree, std::vector<Automorphism> members);

  AutKind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<Automorphism>& members() const { return members_; }
  bool contains(const Automorphism& a) const;
  bool contains_identity() const;
  bool is_subset_of(const AutSet& other) const;

  // Closed under composition and inverses. O(order^2 * degree); the result is cached.
  bool is_closed() const;
  bool is_abelian() const;

  // The subset of members satisfying `keep`, under a new kind.
  template <class Pred>
  AutSet filter(AutKind kind, Pred keep) const {
    std::vector<Automorphism> out;
    for (const auto& a : members_)
      if (keep(a)) out.push_back(a);
    return AutSet(kind, degree_, std::move(out));
  }

 private:
  AutKind kind_;
  std::size_t degree_;
  std::vector<Automorphism> members_;
  mutable std::optional<bool> closed_;
};

bool set_equal(const AutSet& a, const AutSet& b);

// The composition group as a Cayley table (members in set order).
FiniteGroup as_group(const AutSet& s);

struct AutStructure {
  std::size_t order = 1;
  std::optional<FgAbelian> abelian;  // only when the set is an abelian group
};
AutStructure structure_of(const AutSet& s);

struct AutOptions {
  std::size_t oracle_cap = 128;             // largest |G| for the brute-force paths
  std::size_t candidate_cap = 20'000'000;   // largest generator-image search space
  kernels::Policy policy = kernels::Policy::Parallel;
};

AutSet inner(const FiniteGroup& g);

// T_theta(g) = g theta(gX) for a homomorphism theta: G/X -> Y given on the
// cosets of X (indexed as in quotient(g, x)). Y must be central and lie in X.
// Throws YNotCentral, ThetaNotHomomorphism, PreconditionError.
Automorphism t_theta(const FiniteGroup& g, const Subgroup& x, const Subgroup& y, std::span<const Index> theta);

// IA(G) = { T_theta : theta in Hom(G/G', G') } for class <= 2. Throws NotClass2.
AutSet ia_class2(const FiniteGroup& g);

// IA(G) for any finite G by generator-image search: each generator goes to an
// element of its own G'-coset with the same order. Throws CapExceeded when
// |G| exceeds the oracle cap or the search space exceeds the candidate cap.
AutSet ia_bruteforce(const FiniteGroup& g, const AutOptions& opts = {});

// All automorphisms, by generator images of matching order. Throws CapExceeded.
AutSet aut_bruteforce(const FiniteGroup& g, const AutOptions& opts = {});

// ia_class2 for class <= 2, ia_bruteforce otherwise.
AutSet ia(const FiniteGroup& g, const AutOptions& opts = {});
// IA automorphisms fixing Z(G) pointwise.
AutSet ia_star(const FiniteGroup& g, const AutOptions& opts = {});
// Class-preserving automorphisms: filtered from IA* for class <= 2, from the
// full automorphism group otherwise.
AutSet aut_c(const FiniteGroup& g, const AutOptions& opts = {});

}  // namespace nilaut
