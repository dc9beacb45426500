#include "nilaut/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/group_io.hpp"

namespace nilaut {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Finite: return "finite";
    case CaseTag::TorsionFree: return "torsion-free";
    case CaseTag::MixedB: return "mixed-b";
    case CaseTag::TorsionC: return "torsion-c";
    case CaseTag::MixedD: return "mixed-d";
    case CaseTag::Iii: return "iii";
    case CaseTag::Abelian: return "abelian";
  }
  return "finite";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Violation: return "violation";
    case Status::NotApplicable: return "not-applicable";
    case Status::Error: return "error";
  }
  return "error";
}

namespace {

std::string pstr(Int p) { return std::to_string(p); }

bool derived_trivial(const StructureTriple& t) { return t.derived.is_trivial(); }

// The finite-case clauses; the first one that fails, if any.
std::optional<std::string> finite_case_failure(const StructureTriple& t) {
  const FgAbelian& a = t.center_quotient;
  const FgAbelian& b = t.abelianization;
  if (!is_cyclic(t.derived)) return "G' = " + t.derived.to_string() + " is not cyclic";
  for (const auto& [p, alpha] : a.primary()) {
    const auto beta = b.exponents_at(p);
    if (alpha.size() != beta.size())
      return "m != n at p = " + pstr(p) + " (" + std::to_string(alpha.size()) + " vs " +
             std::to_string(beta.size()) + ")";
    if (is_homocyclic_at(a, p)) continue;
    std::size_t r = beta.size();
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (beta[j] < alpha[0]) {
        r = j;
        break;
      }
    if (r == beta.size())
      return "(G/Z)_" + pstr(p) + " is not homocyclic and no beta_j falls below alpha_1";
    for (std::size_t j = 0; j < r; ++j)
      if (alpha[j] != alpha[0]) return "alpha_j != alpha_1 below r at p = " + pstr(p);
    for (std::size_t j = r; j < beta.size(); ++j)
      if (beta[j] != alpha[j]) return "beta_j != alpha_j from r on at p = " + pstr(p);
  }
  return std::nullopt;
}

ClassificationVerdict finish(ClassificationVerdict v, std::optional<std::string> failed) {
  v.consistent = v.predicate_holds == v.direct_check_holds;
  if (failed) v.witness = *failed;
  if (!v.consistent) {
    std::string msg = "predicate " + std::string(v.predicate_holds ? "holds" : "fails") + " but direct check " +
                      (v.direct_check_holds ? "holds" : "fails");
    v.witness = v.witness ? msg + "; " + *v.witness : msg;
  }
  return v;
}

void require_class_at_most_2(const FiniteGroup& g) {
  if (!is_nilpotent(g)) throw NotClass2("group is not nilpotent");
  if (nilpotency_class(g) > 2) throw NotClass2("nilpotency class is " + std::to_string(nilpotency_class(g)));
}

Int ipow(Int base, unsigned e) { return checked_pow(base, e); }

}  // namespace

void check_admissible(const StructureTriple& t) {
  const FgAbelian& a = t.center_quotient;
  const FgAbelian& b = t.abelianization;
  const FgAbelian& c = t.derived;
  for (Int p : a.primes()) {
    const auto alpha = a.exponents_at(p);
    const auto beta = b.exponents_at(p);
    if (beta.empty()) throw InadmissibleTriple("pi(A) is not contained in pi(B): " + pstr(p));
    if (alpha.size() > beta.size()) throw InadmissibleTriple("m_i > n_i at p = " + pstr(p));
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (alpha[j] > beta[j]) throw InadmissibleTriple("alpha_ij > beta_ij at p = " + pstr(p));
  }
  if (a.free_rank() > b.free_rank()) throw InadmissibleTriple("a > b");
  if (exponent_of_torsion(a) != exponent_of_torsion(c)) throw InadmissibleTriple("exp(A) != exp(C)");
  if (a.is_trivial() != c.is_trivial()) throw InadmissibleTriple("G/Z is trivial exactly when G' is");
}

ClassificationVerdict classify_thm21_symbolic(const StructureTriple& t) {
  check_admissible(t);
  const FgAbelian& a = t.center_quotient;
  const FgAbelian& b = t.abelianization;
  const FgAbelian& c = t.derived;
  ClassificationVerdict v;
  v.direct_check_holds = is_isomorphic(hom_structure(b, c), a);
  std::optional<std::string> failed;
  const FgAbelian ta = a.torsion(), tb = b.torsion(), tc = c.torsion();
  if (derived_trivial(t)) {
    v.tag = CaseTag::Abelian;
    v.predicate_holds = true;
  } else if (a.is_finite() && b.is_finite() && c.is_finite()) {
    v.tag = CaseTag::Finite;
    failed = finite_case_failure(t);
    v.predicate_holds = !failed;
  } else if (tc.is_trivial()) {
    // G' free abelian: cyclic with rho(G/Z) = rho(G/G')
    v.tag = tb.is_trivial() ? CaseTag::TorsionFree : CaseTag::MixedB;
    if (c.free_rank() != 1) failed = "G' = " + c.to_string() + " is not infinite cyclic";
    else if (a.free_rank() != b.free_rank()) failed = "rho(G/Z) != rho(G/G')";
    v.predicate_holds = !failed;
  } else if (c.free_rank() == 0) {
    v.tag = CaseTag::TorsionC;
    if (!tb.is_trivial()) failed = "G/G' is not torsion-free";
    else if (!is_isomorphic(a, power(tc, b.free_rank()))) failed = "A x Z^a is not C^b";
    v.predicate_holds = !failed;
  } else {
    v.tag = CaseTag::MixedD;
    if (!a.is_mixed()) failed = "G/Z is not mixed";
    else if (c.free_rank() != 1) failed = "G' is not C x Z";
    else if (!tb.is_trivial()) failed = "G/G' is not torsion-free";
    else if (!is_isomorphic(ta, power(tc, b.free_rank()))) failed = "A is not C^b";
    else if (a.free_rank() != b.free_rank()) failed = "rho(G/Z) != rho(G/G')";
    v.predicate_holds = !failed;
  }
  return finish(v, failed);
}

ClassificationVerdict classify_thm21_iii_symbolic(const StructureTriple& t) {
  check_admissible(t);
  ClassificationVerdict v;
  v.tag = CaseTag::Iii;
  v.predicate_holds = is_cyclic(t.derived);
  v.direct_check_holds = is_isomorphic(hom_structure(t.center_quotient, t.derived), t.center_quotient);
  std::optional<std::string> failed;
  if (!v.predicate_holds) failed = "G' = " + t.derived.to_string() + " is not cyclic";
  return finish(v, failed);
}

ClassificationVerdict classify_thm21_finite(const FiniteGroup& g) {
  require_class_at_most_2(g);
  ClassificationVerdict v;
  const AutSet in = inner(g);
  if (g.is_abelian()) {
    v.tag = CaseTag::Abelian;
    v.predicate_holds = v.direct_check_holds = true;
    v.isomorphic = true;
    v.ia_order = v.inn_order = 1;
    return finish(v, std::nullopt);
  }
  const StructureTriple t = structure_triple(g);
  v.tag = CaseTag::Finite;
  const auto failed = finite_case_failure(t);
  v.predicate_holds = !failed;
  const AutSet ia_set = ia_class2(g);
  v.direct_check_holds = set_equal(ia_set, in);
  v.isomorphic = structure_of(ia_set).abelian == structure_of(in).abelian;
  v.ia_order = ia_set.order();
  v.inn_order = in.order();
  return finish(v, failed);
}

ClassificationVerdict check_thm21_iii(const FiniteGroup& g) {
  require_class_at_most_2(g);
  ClassificationVerdict v;
  v.tag = CaseTag::Iii;
  const Subgroup d = derived_subgroup(g);
  v.predicate_holds = d.is_cyclic(g);
  const AutSet star = ia_star(g);
  const AutSet in = inner(g);
  const auto s1 = structure_of(star), s2 = structure_of(in);
  v.direct_check_holds = s1.abelian && s2.abelian && is_isomorphic(*s1.abelian, *s2.abelian);
  v.isomorphic = v.direct_check_holds;
  v.ia_order = star.order();
  v.inn_order = in.order();
  std::optional<std::string> failed;
  if (!v.predicate_holds) failed = "G' is not cyclic";
  return finish(v, failed);
}

ClassificationVerdict check_cor25(const FiniteGroup& g) {
  if (!p_group_prime(g)) throw PreconditionError("order is not a prime power");
  return classify_thm21_finite(g);
}

bool check_cor22(const FiniteGroup& g, const AutOptions& opts) {
  if (!is_nilpotent(g) || nilpotency_class(g) != 2) throw PreconditionError("needs nilpotency class 2");
  if (!derived_subgroup(g).is_cyclic(g)) throw PreconditionError("needs G' cyclic");
  return set_equal(aut_c(g, opts), inner(g));
}

bool check_cor23(const FiniteGroup& g) {
  if (!is_nilpotent(g) || nilpotency_class(g) != 2) throw PreconditionError("needs nilpotency class 2");
  if (minimal_generator_count(g) != 2) throw PreconditionError("needs d(G) = 2");
  return set_equal(ia_class2(g), inner(g));
}

bool check_lemma12(const FiniteGroup& g) {
  require_class_at_most_2(g);
  if (g.is_abelian()) return true;
  const StructureTriple t = structure_triple(g);
  return exponent_of_torsion(t.center_quotient) == exponent_of_torsion(t.derived);
}

bool check_thm35(const FiniteGroup& g) {
  require_class_at_most_2(g);
  FgAbelian a, c;
  if (!g.is_abelian()) {
    const StructureTriple t = structure_triple(g);
    a = t.center_quotient;
    c = t.derived;
  }
  const bool iso = is_isomorphic(a, power(c, rank(a)));
  const bool predicate = is_cyclic(c) && is_homocyclic(a);
  return iso == predicate;
}

CheckResult check_thm36(const FiniteGroup& g) {
  CheckResult r;
  const auto p = p_group_prime(g);
  if (!p || g.is_abelian()) {
    r.status = Status::NotApplicable;
    r.detail = "not a non-abelian p-group";
    return r;
  }
  unsigned n = 0;
  for (std::size_t m = g.order(); m > 1; m /= *p) ++n;
  const unsigned cls = nilpotency_class(g);
  r.values["n"] = n;
  r.values["class"] = cls;
  if (n < cls + 2 || n - cls != 2) {
    r.status = Status::NotApplicable;
    r.detail = "co-class " + std::to_string(n - cls);
    return r;
  }
  const Quotient q = quotient(g, center(g));
  const unsigned d = minimal_generator_count(q.group);
  const Int bound = ipow(derived_subgroup(g).order(), d);
  if (q.group.order() != bound) {
    r.status = Status::NotApplicable;
    r.detail = "no |G/Z| = |G'|^d";
    return r;
  }
  r.values["order"] = g.order();
  r.status = (n == 4 || n == 5) ? Status::Pass : Status::Violation;
  r.detail = "|G| = " + pstr(*p) + "^" + std::to_string(n);
  return r;
}

SchurReport schur_report(const FiniteGroup& g, const SchurOptions& opts) {
  SchurReport s;
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  const auto k = commutator_set(g);
  const Quotient q = quotient(g, z);
  s.center_quotient_order = q.group.order();
  s.derived_order = d.order();
  s.commutator_set_order = k.size();
  s.derived_cyclic = d.is_cyclic(g);
  s.d = minimal_generator_count(q.group);
  s.commutator_set_bound = ipow(k.size(), s.d);
  s.derived_bound = ipow(d.order(), s.d);

  std::map<Index, std::size_t> class_size;
  for (const auto& tuple : minimal_generating_tuples(q.group, opts.sample_limit, opts.seed)) {
    TupleBound tb;
    for (Index c : tuple) {
      const Index x = q.representatives[c];
      tb.tuple.push_back(x);
      auto it = class_size.find(x);
      if (it == class_size.end()) it = class_size.emplace(x, commutator_with(g, x).size()).first;
      tb.product = checked_mul(tb.product, it->second);
    }
    const bool ok = s.center_quotient_order <= tb.product && tb.product <= s.commutator_set_bound;
    if (!ok) {
      std::ostringstream os;
      os << "THEOREM VIOLATION: chain fails for tuple (";
      for (std::size_t i = 0; i < tb.tuple.size(); ++i) os << (i ? "," : "") << tb.tuple[i];
      os << "): |G/Z| = " << s.center_quotient_order << ", product = " << tb.product
         << ", |K|^d = " << s.commutator_set_bound;
      s.violations.push_back(os.str());
      s.chain_holds = false;
    }
    s.tuples.push_back(std::move(tb));
  }
  if (s.commutator_set_bound > s.derived_bound) {
    s.chain_holds = false;
    s.violations.push_back("THEOREM VIOLATION: |K(G)|^d > |G'|^d");
  }
  if (s.center_quotient_order > s.derived_bound) {
    s.chain_holds = false;
    s.violations.push_back("THEOREM VIOLATION: |G/Z| > |G'|^d");
  }
  s.equality1 = s.center_quotient_order == s.derived_bound;
  s.equality2 = s.center_quotient_order == s.commutator_set_bound;
  if (s.equality1) {
    s.derived_is_commutator_set = k.size() == d.order();
    if (!*s.derived_is_commutator_set)
      s.violations.push_back("THEOREM VIOLATION: |G/Z| = |G'|^d but K(G) != G'");
    const AutSet in = inner(g);
    const AutSet ac = aut_c(g, opts.autos);
    const AutSet st = ia_star(g, opts.autos);
    s.inn_autc_iastar_equal = set_equal(in, ac) && set_equal(ac, st);
    if (!*s.inn_autc_iastar_equal)
      s.violations.push_back("THEOREM VIOLATION: |G/Z| = |G'|^d but Inn, Aut_c, IA* differ");
  }
  return s;
}

bool TheoremReport::ok() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.holds; });
}

TheoremReport verify_example32(const FiniteGroup& g, const AutOptions& opts) {
  TheoremReport r;
  r.name = "example32";
  auto fact = [&](std::string name, const std::string& expected, const std::string& actual) {
    r.facts.push_back({std::move(name), expected, actual, expected == actual});
  };
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  auto num = [](std::size_t v) { return std::to_string(v); };

  fact("order", "32", num(g.order()));
  const auto& names = g.generator_names();
  auto gen = [&](const std::string& n) -> std::optional<Index> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return g.generators()[i];
    return std::nullopt;
  };
  const auto x = gen("x"), y = gen("y"), u = gen("u");
  fact("generators x, y, u present", "true", yes(x && y && u));
  if (!(x && y && u)) return r;

  unsigned cls = 0;
  try {
    cls = nilpotency_class(g);
  } catch (const NotNilpotent&) {
  }
  fact("nilpotency class", "3", num(cls));
  fact("|x|", "4", num(g.element_order(*x)));
  fact("|y|", "8", num(g.element_order(*y)));
  fact("|u|", "2", num(g.element_order(*u)));
  fact("u = [x, y]", "true", yes(g.commutator(*x, *y) == *u));
  fact("x^2 y^-4 = 1", "true", yes(g.mul(g.pow(*x, 2), g.pow(*y, -4)) == g.identity()));
  fact("[x, y, x] = 1", "true", yes(g.commutator(*u, *x) == g.identity()));
  fact("[x, y, y] y^-4 = 1", "true", yes(g.mul(g.commutator(*u, *y), g.pow(*y, -4)) == g.identity()));

  const Subgroup z = center(g);
  const std::vector<Index> y4{g.pow(*y, 4)};
  fact("|Z(G)|", "2", num(z.order()));
  fact("Z(G) = <y^4>", "true", yes(z == Subgroup::generated_by(g, y4)));

  const Subgroup phi = frattini_subgroup(g);
  const std::vector<Index> y2u{g.pow(*y, 2), *u};
  fact("|Phi(G)|", "8", num(phi.order()));
  fact("Phi(G) = <y^2, u>", "true", yes(phi == Subgroup::generated_by(g, y2u)));
  fact("Phi(G) = G' G^2", "true", yes(phi == frattini_by_powers(g)));
  fact("Z(G) <= Phi(G)", "true", yes(z.is_subset_of(phi)));

  const Subgroup d = derived_subgroup(g);
  fact("|G'|", "4", num(d.order()));
  fact("G' elementary abelian", "true", yes(d.is_elementary_abelian(g)));
  fact("G' cyclic", "false", yes(d.is_cyclic(g)));
  fact("G' descriptor", "C_2 x C_2", abelian_structure(g, d).to_string());

  const Quotient q = quotient(g, z);
  const unsigned dz = minimal_generator_count(q.group);
  fact("d(G)", "2", num(minimal_generator_count(g)));
  fact("d(G/Z)", "2", num(dz));
  fact("|G/Z|", "16", num(q.group.order()));
  fact("|G/Z| = |G'|^d", "true", yes(q.group.order() == ipow(d.order(), dz)));
  fact("gamma_3 <= Z(G)", "true", yes(lower_central_series(g).at(2).is_subset_of(z)));
  fact("co-class", "2", num(5 - cls));

  const CheckResult t36 = check_thm36(g);
  fact("order p^4 or p^5 (co-class 2, |G/Z| = |G'|^d)", "pass", to_string(t36.status));

  const AutSet in = inner(g), ac = aut_c(g, opts), st = ia_star(g, opts);
  fact("|Inn(G)|", "16", num(in.order()));
  fact("Inn = Aut_c = IA*", "true", yes(set_equal(in, ac) && set_equal(ac, st)));
  fact("K(G) = G'", "true", yes(commutator_set(g).size() == d.order()));
  return r;
}

TheoremReport verify_example32() {
  return verify_example32(paper_example_32());
}

std::size_t SuiteReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.result.status == s; }));
}

bool SuiteReport::ok() const {
  return count(Status::Fail) == 0 && count(Status::Violation) == 0 && count(Status::Error) == 0;
}

std::vector<std::string> resolve_selectors(const std::vector<std::string>& selectors) {
  std::set<std::string> out;
  const auto& all = suite_checks();
  for (const auto& s : selectors) {
    if (s == "all") {
      out.insert(all.begin(), all.end());
    } else if (std::find(all.begin(), all.end(), s) != all.end()) {
      out.insert(s);
    } else {
      throw std::invalid_argument("unknown check '" + s + "'");
    }
  }
  return {out.begin(), out.end()};
}

namespace {

struct GroupFacts {
  bool nilpotent = false;
  unsigned cls = 0;
  bool class2 = false;  // class <= 2
};

CheckResult na(std::string why) { return {Status::NotApplicable, std::move(why), nlohmann::json::object()}; }

CheckResult verdict_result(const ClassificationVerdict& v) {
  CheckResult r;
  r.status = v.consistent ? Status::Pass : Status::Fail;
  r.values["case"] = to_string(v.tag);
  r.values["predicate"] = v.predicate_holds;
  r.values["direct"] = v.direct_check_holds;
  if (v.isomorphic) r.values["isomorphic"] = *v.isomorphic;
  if (v.ia_order) r.values["ia_order"] = *v.ia_order;
  if (v.inn_order) r.values["inn_order"] = *v.inn_order;
  if (v.witness) r.detail = *v.witness;
  return r;
}

CheckResult run_check(const std::string& check, const FiniteGroup& g, const GroupFacts& f, const SuiteOptions& o) {
  auto b = [](bool ok) { return ok ? Status::Pass : Status::Fail; };
  if (check == "example32") {
    if (g.family() != "paper-example-32") return na("only for the order-32 example");
    const TheoremReport t = verify_example32(g, o.autos);
    CheckResult r;
    r.status = t.ok() ? Status::Pass : Status::Fail;
    for (const auto& fact : t.facts) {
      r.values[fact.name] = fact.actual;
      if (!fact.holds && r.detail.empty()) r.detail = fact.name + ": expected " + fact.expected + ", got " + fact.actual;
    }
    return r;
  }
  if (check == "schur") {
    if (!f.nilpotent) return na("not nilpotent");
    SchurOptions so{o.sample_limit, o.seed, o.autos};
    const SchurReport s = schur_report(g, so);
    CheckResult r;
    r.status = s.violations.empty() ? Status::Pass : Status::Violation;
    r.values["d"] = s.d;
    r.values["center_quotient_order"] = s.center_quotient_order;
    r.values["derived_order"] = s.derived_order;
    r.values["commutator_set_order"] = s.commutator_set_order;
    r.values["commutator_set_bound"] = s.commutator_set_bound;
    r.values["derived_bound"] = s.derived_bound;
    r.values["tuples"] = s.tuples.size();
    Int lo = 0, hi = 0;
    for (const auto& t : s.tuples) {
      lo = lo == 0 ? t.product : std::min(lo, t.product);
      hi = std::max(hi, t.product);
    }
    r.values["product_min"] = lo;
    r.values["product_max"] = hi;
    r.values["equality1"] = s.equality1;
    r.values["equality2"] = s.equality2;
    r.values["derived_cyclic"] = s.derived_cyclic;
    if (s.derived_is_commutator_set) r.values["derived_is_commutator_set"] = *s.derived_is_commutator_set;
    if (s.inn_autc_iastar_equal) r.values["inn_autc_iastar_equal"] = *s.inn_autc_iastar_equal;
    if (!s.violations.empty()) r.detail = s.violations.front();
    return r;
  }
  if (check == "thm36") return check_thm36(g);
  if (check == "containments" || check == "thm31") {
    if (!f.nilpotent) return na("not nilpotent");
    if (!f.class2 && g.order() > o.autos.oracle_cap) return na("class >= 3 above the oracle cap");
    const AutSet in = inner(g), all_ia = ia(g, o.autos), st = ia_star(g, o.autos);
    CheckResult r;
    if (check == "thm31") {
      const unsigned d = minimal_generator_count(quotient(g, center(g)).group);
      const Int bound = ipow(derived_subgroup(g).order(), d);
      r.values["ia_star_order"] = st.order();
      r.values["bound"] = bound;
      r.status = st.order() <= bound ? Status::Pass : Status::Violation;
      if (r.status == Status::Violation) r.detail = "THEOREM VIOLATION: |IA*| > |G'|^d";
      return r;
    }
    const AutSet ac = aut_c(g, o.autos);
    const bool chain = in.is_subset_of(ac) && ac.is_subset_of(st) && st.is_subset_of(all_ia);
    const bool closed = in.is_closed() && ac.is_closed() && st.is_closed() && all_ia.is_closed();
    r.values["inn"] = in.order();
    r.values["aut_c"] = ac.order();
    r.values["ia_star"] = st.order();
    r.values["ia"] = all_ia.order();
    r.values["closed"] = closed;
    r.status = b(chain && closed);
    if (!chain) r.detail = "Inn <= Aut_c <= IA* <= IA fails";
    else if (!closed) r.detail = "an automorphism set is not closed";
    return r;
  }
  if (!f.class2) return na("nilpotency class is not at most 2");
  if (check == "lemma12") {
    const bool ok = check_lemma12(g);
    CheckResult r{b(ok), ok ? "" : "exp T(G/Z) != exp T(G')", nlohmann::json::object()};
    if (!g.is_abelian()) {
      const StructureTriple t = structure_triple(g);
      r.values["exp_center_quotient"] = exponent_of_torsion(t.center_quotient);
      r.values["exp_derived"] = exponent_of_torsion(t.derived);
    }
    return r;
  }
  if (check == "lemma14") {
    FgAbelian gz, gab = abelian_structure(quotient(g, derived_subgroup(g)).group), gd;
    if (!g.is_abelian()) {
      const StructureTriple t = structure_triple(g);
      gz = t.center_quotient;
      gd = t.derived;
    }
    const Int hom_ia = hom_structure(gab, gd).order();
    const Int hom_star = hom_structure(gz, gd).order();
    const std::size_t n_ia = ia_class2(g).order(), n_star = ia_star(g, o.autos).order();
    CheckResult r;
    r.values["ia"] = n_ia;
    r.values["hom_abelianization_derived"] = hom_ia;
    r.values["ia_star"] = n_star;
    r.values["hom_center_quotient_derived"] = hom_star;
    r.status = b(n_ia == hom_ia && n_star == hom_star);
    if (r.status == Status::Fail) r.detail = "IA or IA* order differs from the Hom order";
    return r;
  }
  if (check == "oracle") {
    if (g.order() > o.autos.oracle_cap) return na("order above the oracle cap");
    const AutSet a = ia_class2(g), brute = ia_bruteforce(g, o.autos);
    CheckResult r;
    r.values["ia_class2"] = a.order();
    r.values["ia_bruteforce"] = brute.order();
    r.status = b(set_equal(a, brute));
    if (r.status == Status::Fail) r.detail = "Hom construction and brute force disagree";
    return r;
  }
  if (check == "thm21") return verdict_result(classify_thm21_finite(g));
  if (check == "thm21-iii") {
    if (g.is_abelian()) return na("abelian");
    return verdict_result(check_thm21_iii(g));
  }
  if (check == "thm21-symbolic") {
    if (g.is_abelian()) return na("abelian");
    StructureTriple t = structure_triple(g);
    const ClassificationVerdict sym = classify_thm21_symbolic(t);
    const ClassificationVerdict fin = classify_thm21_finite(g);
    CheckResult r;
    r.values["symbolic_predicate"] = sym.predicate_holds;
    r.values["finite_predicate"] = fin.predicate_holds;
    r.values["symbolic_direct"] = sym.direct_check_holds;
    r.values["finite_direct"] = fin.direct_check_holds;
    r.values["finite_isomorphic"] = fin.isomorphic.value_or(false);
    const bool iso_only = !fin.direct_check_holds && fin.isomorphic.value_or(false);
    if (iso_only) r.values["isomorphic_without_equality"] = true;
    const bool same_direct = sym.direct_check_holds == fin.direct_check_holds || iso_only;
    r.status = b(sym.predicate_holds == fin.predicate_holds && same_direct &&
                 sym.direct_check_holds == fin.isomorphic.value_or(false));
    if (r.status == Status::Fail) r.detail = "symbolic and concrete classification disagree";
    return r;
  }
  if (check == "cor22") {
    if (g.is_abelian() || !derived_subgroup(g).is_cyclic(g)) return na("needs class 2 with G' cyclic");
    return {b(check_cor22(g, o.autos)), "", nlohmann::json::object()};
  }
  if (check == "cor23") {
    if (g.is_abelian() || minimal_generator_count(g) != 2) return na("needs class 2 with d(G) = 2");
    return {b(check_cor23(g)), "", nlohmann::json::object()};
  }
  if (check == "cor25") {
    if (g.is_abelian() || !p_group_prime(g)) return na("needs a non-abelian p-group");
    return verdict_result(check_cor25(g));
  }
  if (check == "thm35") {
    const bool ok = check_thm35(g);
    return {b(ok), ok ? "" : "isomorphism and predicate disagree", nlohmann::json::object()};
  }
  throw std::invalid_argument("unknown check '" + check + "'");
}

std::vector<CheckRecord> run_group(const FiniteGroup& g, const std::vector<std::string>& checks,
                                   const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  GroupFacts f;
  try {
    f.nilpotent = is_nilpotent(g);
    if (f.nilpotent) f.cls = nilpotency_class(g);
    f.class2 = f.nilpotent && f.cls <= 2;
  } catch (const std::exception&) {
  }
  for (const auto& c : checks) {
    CheckRecord rec{g.name(), c, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rec.result = run_check(c, g, f, o);
    } catch (const std::exception& e) {
      rec.result = {Status::Error, e.what(), nlohmann::json::object()};
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const std::vector<FiniteGroup>& corpus, const SuiteOptions& opts) {
  const auto checks = resolve_selectors(opts.selectors);
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return corpus[a].name() < corpus[b].name(); });

  std::vector<std::vector<CheckRecord>> per_group(corpus.size());
  const auto n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (long i = 0; i < n; ++i) per_group[i] = run_group(corpus[order[i]], checks, opts);

  SuiteReport report;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool bad = false;
    for (auto& rec : per_group[i]) {
      const Status s = rec.result.status;
      bad = bad || s == Status::Fail || s == Status::Violation || s == Status::Error;
      report.records.push_back(std::move(rec));
    }
    if (bad) report.witnesses.emplace_back(corpus[order[i]].name(), serialize_group(corpus[order[i]]));
  }
  return report;
}

}  // namespace nilaut
