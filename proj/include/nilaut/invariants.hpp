#pragma once

// Structural analysis of finite groups given by Cayley tables.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nilaut/abelian.hpp"
#include "nilaut/pcgroup.hpp"

namespace nilaut {

// A subset of a group's elements closed under multiplication and inverses.
// Holds sorted element indices and a membership mask; the ambient group is
// passed to every query that needs the table.
class Subgroup {
 public:
  // Throws std::invalid_argument unless `elements` form a subgroup of g.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Index> elements);
  static Subgroup generated_by(const FiniteGroup& g, std::span<const Index> generators);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  std::size_t order() const { return elements_.size(); }
  std::size_t ambient_order() const { return mask_.size(); }
  std::span<const Index> elements() const { return elements_; }
  bool contains(Index x) const { return mask_[x] != 0; }
  bool is_subset_of(const Subgroup& other) const;

  bool is_normal(const FiniteGroup& g) const;
  bool is_abelian(const FiniteGroup& g) const;
  bool is_cyclic(const FiniteGroup& g) const;
  bool is_elementary_abelian(const FiniteGroup& g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  Subgroup(std::vector<Index> elements, std::size_t n);

  std::vector<Index> elements_;
  std::vector<char> mask_;
};

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
// The subgroup generated by a and b (their product when one is normal).
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
// [A, B] = < [a, b] : a in A, b in B >
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Index x);
Subgroup derived_subgroup(const FiniteGroup& g);
// K(G): all commutators [a, b], sorted.
std::vector<Index> commutator_set(const FiniteGroup& g);
// [x, G] = { [x, g] : g in G }, sorted. A set, not necessarily a subgroup.
std::vector<Index> commutator_with(const FiniteGroup& g, Index x);

struct Quotient {
  FiniteGroup group;
  std::vector<Index> projection;       // element of G -> coset index
  std::vector<Index> representatives;  // coset index -> smallest element of the coset
};

// Cosets are numbered by their smallest element. Generators of the quotient
// are the images of g's generators. Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

// The relabelled subgroup as a group in its own right; `embedding` maps its
// indices back into g.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Index> embedding;
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// Z_{i+1} from Z_i: the preimage of the center of G / Z_i.
Subgroup upper_central_next(const FiniteGroup& g, const Subgroup& zi);
// gamma_1 = G, gamma_{i+1} = [gamma_i, G], down to the first repeated term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
// Length of the lower central series; 0 for the trivial group. Throws NotNilpotent.
unsigned nilpotency_class(const FiniteGroup& g);
// Classes ordered by smallest element, each sorted.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);
// class_of[x] is the position of x's class in conjugacy_classes(g).
std::vector<std::size_t> conjugacy_class_ids(const FiniteGroup& g);

std::size_t exponent(const FiniteGroup& g);
// The prime when |G| is a prime power, nothing otherwise (including |G| = 1).
std::optional<Int> p_group_prime(const FiniteGroup& g);

// Intersection of the maximal subgroups. Nilpotent groups: kernels of all
// homomorphisms onto C_p, found by generator-image search. Other groups:
// maximal subgroups found by walking the subgroup lattice.
Subgroup frattini_subgroup(const FiniteGroup& g);
// G' G^p for a p-group. Throws PreconditionError otherwise.
Subgroup frattini_by_powers(const FiniteGroup& g);

// Independent cyclic factors of a finite abelian group: g is the internal
// direct product of <basis[i]>, and basis[i] has order basis_orders[i], a
// prime power. Factors are listed by prime, then by decreasing order.
struct AbelianDecomposition {
  FgAbelian type;
  std::vector<Index> basis;
  std::vector<Int> basis_orders;
};
// Throws NotAbelian.
AbelianDecomposition decompose_abelian(const FiniteGroup& g);
FgAbelian abelian_structure(const FiniteGroup& g);
FgAbelian abelian_structure(const FiniteGroup& g, const Subgroup& h);
unsigned torsion_rank_of_group(const FiniteGroup& h);

// d(H): the smallest size of a generating set. Abelian groups use the
// recognized structure; other nilpotent groups the Frattini quotient.
// Throws NotNilpotent otherwise.
unsigned minimal_generator_count(const FiniteGroup& h);
// A generating set of size minimal_generator_count(h) for nilpotent h.
std::vector<Index> minimal_generating_set(const FiniteGroup& h);

// Ordered tuples of size d(H) that generate H: all of them when |H|^d <= 10^6
// (then at most `sample_limit`, chosen by seeded shuffle), otherwise up to
// `sample_limit` distinct ones drawn uniformly with the given seed.
std::vector<std::vector<Index>> minimal_generating_tuples(const FiniteGroup& h, std::size_t sample_limit,
                                                          std::uint64_t seed);

struct StructureTriple {
  enum class Source { ComputedFromGroup, UserSupplied };
  FgAbelian center_quotient;  // G/Z(G) = A x Z^a
  FgAbelian abelianization;   // G/G'   = B x Z^b
  FgAbelian derived;          // G'     = C x Z^c
  Source source = Source::UserSupplied;

  // `A | B | C`, each side in the abelian descriptor syntax.
  static StructureTriple parse(std::string_view text);
  std::string to_string() const;
};

// Throws NotClass2 when G has class >= 3.
StructureTriple structure_triple(const FiniteGroup& g);

// What is defined for any finite group: orders and, when abelian, descriptors.
struct StructureSummary {
  std::size_t order = 1;
  std::optional<unsigned> nilpotency_class;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
  std::size_t frattini_order = 1;
  std::size_t center_quotient_order = 1;
  bool derived_equals_commutator_set = true;
  std::optional<StructureTriple> triple;  // class <= 2 only
  FgAbelian abelianization;
};
StructureSummary structure_summary(const FiniteGroup& g);

}  // namespace nilaut
