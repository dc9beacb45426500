#pragma once

// Classification predicates for IA(G) = Inn(G), Schur-type bounds, and the
// corpus suite that checks each predicate against direct computation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilaut/abelian.hpp"
#include "nilaut/autos.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/pcgroup.hpp"

namespace nilaut {

enum class CaseTag {
  Finite,       // a = b = c = 0
  TorsionFree,  // G' free abelian, G/G' free abelian
  MixedB,       // G' free abelian, G/G' with torsion
  TorsionC,     // G' finite, G/G' infinite
  MixedD,       // G' mixed
  Iii,          // IA* = Inn against G' cyclic
  Abelian,      // G' trivial; nothing to classify
};
std::string to_string(CaseTag tag);

struct ClassificationVerdict {
  CaseTag tag = CaseTag::Finite;
  bool predicate_holds = false;
  bool direct_check_holds = false;
  bool consistent = false;
  std::optional<std::string> witness;  // first failed clause, or the mismatch
  // Finite groups only: abstract isomorphism next to the set comparison.
  std::optional<bool> isomorphic;
  std::optional<std::size_t> ia_order;
  std::optional<std::size_t> inn_order;
};

// Throws InadmissibleTriple naming the violated constraint.
void check_admissible(const StructureTriple& t);

// Case predicate of the IA = Inn classification next to the Hom isomorphism
// Hom(B x Z^b, C x Z^c) = A x Z^a.
ClassificationVerdict classify_thm21_symbolic(const StructureTriple& t);
// IA* version: G' cyclic against Hom(A x Z^a, C x Z^c) = A x Z^a.
ClassificationVerdict classify_thm21_iii_symbolic(const StructureTriple& t);

// Predicate from the recognized triple against IA(G) = Inn(G) as sets.
// Abelian input is consistent by definition. Throws NotClass2.
ClassificationVerdict classify_thm21_finite(const FiniteGroup& g);
// G' cyclic against IA(G)* = Inn(G) as abstract groups. Throws NotClass2.
ClassificationVerdict check_thm21_iii(const FiniteGroup& g);
// The p-group form of classify_thm21_finite; throws PreconditionError unless |G| is a prime power.
ClassificationVerdict check_cor25(const FiniteGroup& g);

// Aut_c(G) = Inn(G) for class 2 with G' cyclic. Throws PreconditionError.
bool check_cor22(const FiniteGroup& g, const AutOptions& opts = {});
// IA(G) = Inn(G) for class 2 with d(G) = 2. Throws PreconditionError.
bool check_cor23(const FiniteGroup& g);
// exp T(G/Z) = exp T(G') for class <= 2. Throws NotClass2.
bool check_lemma12(const FiniteGroup& g);
// G/Z = (G')^r with r = r(G/Z) iff G' cyclic and G/Z homocyclic. Throws NotClass2.
bool check_thm35(const FiniteGroup& g);

enum class Status { Pass, Fail, Violation, NotApplicable, Error };
std::string to_string(Status s);

struct CheckResult {
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json values = nlohmann::json::object();
};

// |G| in {p^4, p^5} for p-groups of co-class 2 with |G/Z| = |G'|^d;
// NotApplicable for every other group.
CheckResult check_thm36(const FiniteGroup& g);

struct TupleBound {
  std::vector<Index> tuple;  // representatives in G of a minimal generating tuple of G/Z
  Int product = 1;           // product of |[x_i, G]|
};

struct SchurReport {
  unsigned d = 0;  // d(G/Z)
  std::size_t center_quotient_order = 1;
  std::size_t derived_order = 1;
  std::size_t commutator_set_order = 1;
  std::vector<TupleBound> tuples;
  Int commutator_set_bound = 1;  // |K(G)|^d
  Int derived_bound = 1;         // |G'|^d
  bool chain_holds = true;
  bool equality1 = false;  // |G/Z| = |G'|^d
  bool equality2 = false;  // |G/Z| = |K(G)|^d
  std::optional<bool> derived_is_commutator_set;  // checked when equality1
  std::optional<bool> inn_autc_iastar_equal;      // checked when equality1
  bool derived_cyclic = false;
  std::vector<std::string> violations;  // THEOREM VIOLATION lines
};

struct SchurOptions {
  std::size_t sample_limit = 64;
  std::uint64_t seed = 0;
  AutOptions autos;
};

SchurReport schur_report(const FiniteGroup& g, const SchurOptions& opts = {});

struct Fact {
  std::string name;
  std::string expected;
  std::string actual;
  bool holds = false;
};

struct TheoremReport {
  std::string name;
  std::vector<Fact> facts;
  bool ok() const;
};

// Every stated property of the order-32 class-3 example, checked on `g`.
TheoremReport verify_example32(const FiniteGroup& g, const AutOptions& opts = {});
TheoremReport verify_example32();

// Suite checks, in report order.
inline const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names{
      "containments", "cor22", "cor23", "cor25",  "example32", "lemma12", "lemma14", "oracle",
      "schur",        "thm21", "thm21-iii", "thm21-symbolic", "thm31", "thm35", "thm36"};
  return names;
}

struct SuiteOptions {
  std::vector<std::string> selectors{"all"};
  std::size_t sample_limit = 64;
  std::uint64_t seed = 0;
  AutOptions autos;
  bool parallel = true;
};

struct CheckRecord {
  std::string group;
  std::string check;
  CheckResult result;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<CheckRecord> records;          // sorted by (group, check)
  std::vector<std::pair<std::string, std::string>> witnesses;  // group name -> serialized group
  std::size_t count(Status s) const;
  bool ok() const;  // no Fail, Violation or Error
};

// Throws std::invalid_argument for an unknown selector.
std::vector<std::string> resolve_selectors(const std::vector<std::string>& selectors);

SuiteReport run_suite(const std::vector<FiniteGroup>& corpus, const SuiteOptions& opts = {});

}  // namespace nilaut
