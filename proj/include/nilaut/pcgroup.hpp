#pragma once

// Power-commutator presentations, the collector, and materialized finite groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilaut/abelian.hpp"

namespace nilaut {

using Index = std::uint32_t;

// One letter of a word: generator position and a signed exponent.
struct Letter {
  std::size_t generator;
  long exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

// Exponent vector (a_1, ..., a_k) with 0 <= a_i < e_i.
using NormalForm = std::vector<unsigned>;

// Generators g_1..g_k with relative orders e_i, power relations
// g_i^{e_i} = w_i and conjugate relations g_i^{-1} g_j g_i = w_ij for i < j.
// Omitted relations default to the identity and to g_j respectively.
//
// Right-hand sides are normally words in later generators. Other words are
// accepted; the collector's step budget and the associativity scan in
// build_group decide whether such a presentation defines a group.
class PcPresentation {
 public:
  PcPresentation() = default;
  PcPresentation(std::vector<std::string> generators, std::vector<unsigned> relative_orders);

  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<unsigned>& relative_orders() const { return relative_orders_; }
  // Throws std::out_of_range for an unknown name.
  std::size_t generator_index(std::string_view name) const;

  void set_power(std::size_t i, Word rhs);
  // Sets g_i^{-1} g_j g_i = rhs; requires i < j.
  void set_conjugate(std::size_t i, std::size_t j, Word rhs);

  const Word& power(std::size_t i) const { return powers_.at(i); }
  // The stored right-hand side, or the single letter g_j when omitted.
  Word conjugate(std::size_t i, std::size_t j) const;
  bool has_conjugate(std::size_t i, std::size_t j) const { return conjugates_.count({i, j}) != 0; }

  // Product of the relative orders, or CapExceeded when above `cap`.
  std::size_t normal_form_count(std::size_t cap) const;

 private:
  std::vector<std::string> generators_;
  std::vector<unsigned> relative_orders_;
  std::vector<Word> powers_;
  std::map<std::pair<std::size_t, std::size_t>, Word> conjugates_;
};

inline constexpr std::size_t kDefaultCollectionBudget = 1'000'000;
inline constexpr std::size_t kDefaultGroupCap = 4096;
inline constexpr std::size_t kDefaultFullScanCap = 512;

// Collection from the left: the word is consumed letter by letter and each
// letter is multiplied into the current normal form, pushing the conjugated
// tail and any power relation back onto the front of the remaining word.
// Inverse letters are rewritten as positive powers once the generator's
// order is known; that order is cached, so one Collector serves one thread.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres, std::size_t budget = kDefaultCollectionBudget);

  NormalForm identity() const { return NormalForm(pres_->size(), 0); }
  NormalForm collect(const Word& word) const;
  // a * word, with `a` already in normal form.
  NormalForm multiply(NormalForm a, const Word& word) const;
  const PcPresentation& presentation() const { return *pres_; }

 private:
  // Expands signed letters into generator positions with positive exponents.
  void push_word(std::vector<std::size_t>& stack, const Word& word) const;
  long generator_order(std::size_t i) const;

  const PcPresentation* pres_;
  std::size_t budget_;
  mutable std::vector<long> generator_orders_;
};

NormalForm collect(const PcPresentation& pres, const Word& word,
                   std::size_t budget = kDefaultCollectionBudget);

enum class Verification {
  Full,              // every associativity triple checked
  GeneratorTriples,  // Latin square plus (ab)g = a(bg) for all a, b and generators g
};

// A finite group materialized as its Cayley table.
//
// Elements are indices 0..n-1. Groups built from a presentation index
// elements by lexicographic normal-form order, so the identity is 0.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, {}) {}
  // Validates shape and the Latin-square property and locates the identity;
  // throws ConsistencyError otherwise. Associativity is the builder's job.
  FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators,
              std::string name = {}, std::string family = {},
              std::vector<unsigned> relative_orders = {}, std::vector<std::string> generator_names = {});

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index identity() const { return identity_; }
  // a^{-1} g a
  Index conjugate(Index g, Index a) const { return mul(inv(a), mul(g, a)); }
  // [a, b] = a^{-1} b^{-1} a b
  Index commutator(Index a, Index b) const { return mul(inv(a), mul(inv(b), mul(a, b))); }
  Index pow(Index a, long long k) const;
  std::size_t element_order(Index a) const;

  std::span<const Index> table() const { return table_; }
  std::span<const Index> generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }

  // Present for groups built from a presentation or a product of such.
  bool has_normal_forms() const { return !relative_orders_.empty() || n_ == 1; }
  const std::vector<unsigned>& relative_orders() const { return relative_orders_; }
  NormalForm normal_form(Index a) const;
  Index index_of(const NormalForm& nf) const;

  const std::string& name() const { return name_; }
  const std::string& family() const { return family_; }
  void set_name(std::string name) { name_ = std::move(name); }
  void set_family(std::string family) { family_ = std::move(family); }

  Verification verification() const { return verification_; }
  void set_verification(Verification v) { verification_ = v; }

  bool is_abelian() const;

 private:
  std::size_t n_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
  std::vector<Index> generators_;
  std::vector<std::string> generator_names_;
  std::vector<unsigned> relative_orders_;
  std::string name_;
  std::string family_;
  Verification verification_ = Verification::Full;
};

struct BuildOptions {
  std::size_t cap = kDefaultGroupCap;
  std::size_t full_scan_cap = kDefaultFullScanCap;
  std::size_t budget = kDefaultCollectionBudget;
};

// Enumerates all normal forms, fills the table through the collector and
// verifies it. Throws CapExceeded, CollectionBudgetExceeded or ConsistencyError.
FiniteGroup build_group(const PcPresentation& pres, const BuildOptions& opts = {},
                        std::string name = {}, std::string family = {});

// Latin square and all n^3 associativity triples.
bool check_consistency(std::span<const Index> table, std::size_t n);
bool check_consistency(const FiniteGroup& g);

// Componentwise multiplication, elements indexed g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap = kDefaultGroupCap);

// The multiplication table of `g` relabelled by the bijection `perm`
// (old index -> new index). Used to test isomorphism invariance.
FiniteGroup relabel(const FiniteGroup& g, std::span<const Index> perm);

}  // namespace nilaut
