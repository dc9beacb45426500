#pragma once

// Data-parallel kernels over Cayley tables.
//
// Every kernel comes as an OpenMP version and a serial reference with the
// same contract; tests hold the two to identical results and bench/ times
// them against each other. The parallel versions return the same answer
// regardless of thread count.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilaut/pcgroup.hpp"

namespace nilaut::kernels {

enum class Policy { Serial, Parallel };

struct Triple {
  Index a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

bool is_latin_square(std::span<const Index> table, std::size_t n);

// The lexicographically smallest (a, b, c) with (ab)c != a(bc), if any.
std::optional<Triple> find_associativity_violation_serial(std::span<const Index> table, std::size_t n);
std::optional<Triple> find_associativity_violation_parallel(std::span<const Index> table, std::size_t n);

// As above but c ranges over `generators` only (c is reported as a table index).
std::optional<Triple> find_generator_triple_violation_serial(std::span<const Index> table, std::size_t n,
                                                             std::span<const Index> generators);
std::optional<Triple> find_generator_triple_violation_parallel(std::span<const Index> table, std::size_t n,
                                                               std::span<const Index> generators);

inline std::optional<Triple> find_associativity_violation(std::span<const Index> table, std::size_t n,
                                                          Policy policy = Policy::Parallel) {
  return policy == Policy::Parallel ? find_associativity_violation_parallel(table, n)
                                    : find_associativity_violation_serial(table, n);
}

// Spanning tree of the right Cayley graph of `g` with respect to `generators`:
// every non-identity element e in `order` satisfies e = parent[e] * generators[via[e]].
struct CayleyTree {
  std::vector<Index> order;   // BFS order, identity first
  std::vector<Index> parent;  // indexed by element
  std::vector<std::size_t> via;
};

// Throws PreconditionError if `generators` do not generate `g`.
CayleyTree cayley_tree(const FiniteGroup& g, std::span<const Index> generators);

// Extends generators[s] -> images[s] to a homomorphism g -> target, or
// returns nothing when no homomorphism has these values. The result maps
// every element of g to its image.
std::optional<std::vector<Index>> extend_homomorphism(const FiniteGroup& g, const CayleyTree& tree,
                                                      std::span<const Index> generators,
                                                      const FiniteGroup& target,
                                                      std::span<const Index> images);

// All homomorphisms g -> target whose generator images are drawn from
// candidates[s] (one list per generator), optionally only the bijective ones.
// Results are sorted lexicographically and free of duplicates.
struct HomSearch {
  const FiniteGroup* source;
  const FiniteGroup* target;
  std::span<const Index> generators;
  std::vector<std::vector<Index>> candidates;
  bool bijective_only = false;
};

std::size_t candidate_count(const HomSearch& search);
std::vector<std::vector<Index>> search_homomorphisms_serial(const HomSearch& search);
std::vector<std::vector<Index>> search_homomorphisms_parallel(const HomSearch& search);

inline std::vector<std::vector<Index>> search_homomorphisms(const HomSearch& search,
                                                            Policy policy = Policy::Parallel) {
  return policy == Policy::Parallel ? search_homomorphisms_parallel(search)
                                    : search_homomorphisms_serial(search);
}

}  // namespace nilaut::kernels
