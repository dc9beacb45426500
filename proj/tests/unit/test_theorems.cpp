#include <doctest.h>

#include "nilaut/corpus.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/report.hpp"
#include "nilaut/theorems.hpp"

using namespace nilaut;

namespace {

StructureTriple triple(const char* text) { return StructureTriple::parse(text); }

}  // namespace

TEST_CASE("symbolic classification: finite case") {
  auto v = classify_thm21_symbolic(triple("C_2xC_2 | C_2xC_2 | C_2"));
  CHECK(v.tag == CaseTag::Finite);
  CHECK(v.predicate_holds);
  CHECK(v.direct_check_holds);
  CHECK(v.consistent);

  v = classify_thm21_symbolic(triple("C_2xC_2 | C_2xC_2xC_4 | C_2"));
  CHECK(v.tag == CaseTag::Finite);
  CHECK_FALSE(v.predicate_holds);
  CHECK_FALSE(v.direct_check_holds);
  CHECK(v.consistent);
  CHECK(v.witness);
}

TEST_CASE("symbolic classification: infinite cases") {
  auto v = classify_thm21_symbolic(triple("Z^2 | Z^2 | Z"));
  CHECK(v.tag == CaseTag::TorsionFree);
  CHECK(v.predicate_holds);
  CHECK(v.consistent);

  v = classify_thm21_symbolic(triple("Z^2 | Z^2 x C_2 | Z"));
  CHECK(v.tag == CaseTag::MixedB);
  CHECK(v.consistent);

  v = classify_thm21_symbolic(triple("C_2 x C_2 | Z x C_2 x C_2 | C_2"));
  CHECK(v.tag == CaseTag::TorsionC);
  CHECK(v.consistent);

  v = classify_thm21_symbolic(triple("Z^2 x C_2 | Z^2 x C_2 | Z x C_2"));
  CHECK(v.tag == CaseTag::MixedD);
  CHECK(v.consistent);

  v = classify_thm21_iii_symbolic(triple("C_2xC_2 | C_2xC_2 | C_2"));
  CHECK(v.tag == CaseTag::Iii);
  CHECK(v.predicate_holds);
  CHECK(v.consistent);
}

TEST_CASE("inadmissible triples") {
  CHECK_THROWS_AS(check_admissible(triple("C_3 | C_2 | C_2")), InadmissibleTriple);
  CHECK_THROWS_AS(check_admissible(triple("C_4 x C_4 | C_2 x C_2 | C_4")), InadmissibleTriple);
  CHECK_THROWS_AS(check_admissible(triple("1 | C_2 | C_2")), InadmissibleTriple);
  CHECK_NOTHROW(check_admissible(triple("C_2xC_2 | C_2xC_2 | C_2")));
  CHECK_THROWS_AS(classify_thm21_symbolic(triple("C_3 | C_2 | C_2")), InadmissibleTriple);
}

TEST_CASE("finite classification witnesses") {
  for (const auto& g : {dihedral(8), quaternion(8), heisenberg(3, 1), heisenberg(5, 1)}) {
    CAPTURE(g.name());
    const auto v = classify_thm21_finite(g);
    CHECK(v.predicate_holds);
    CHECK(v.direct_check_holds);
    CHECK(v.consistent);
  }
  const auto g = direct_product(quaternion(8), cyclic(4));
  const auto v = classify_thm21_finite(g);
  CHECK_FALSE(v.predicate_holds);
  CHECK_FALSE(v.direct_check_holds);
  CHECK(v.consistent);
  CHECK(v.ia_order == 8u);
  CHECK(v.inn_order == 4u);

  const auto iii = check_thm21_iii(g);
  CHECK(iii.predicate_holds);
  CHECK(iii.direct_check_holds);
  CHECK(iii.consistent);
  CHECK(classify_thm21_finite(cyclic(6)).consistent);
  CHECK_THROWS_AS(classify_thm21_finite(paper_example_32()), NotClass2);
}

TEST_CASE("corollaries and lemmas") {
  CHECK(check_cor23(heisenberg(5, 1)));
  CHECK(check_cor22(quaternion(8)));
  CHECK_THROWS_AS(check_cor23(direct_product(quaternion(8), cyclic(4))), PreconditionError);
  CHECK(check_lemma12(cyclic(12)));
  CHECK(check_lemma12(direct_product(quaternion(8), cyclic(4))));
  CHECK(check_cor25(dihedral(8)).consistent);
  CHECK_THROWS_AS(check_cor25(direct_product(quaternion(8), cyclic(3))), PreconditionError);
  CHECK(check_thm35(quaternion(8)));
  CHECK(check_thm35(direct_product(quaternion(8), cyclic(4))));
}

TEST_CASE("Schur chain") {
  const auto q = schur_report(quaternion(8));
  CHECK(q.center_quotient_order == 4);
  CHECK(q.derived_order == 2);
  CHECK(q.d == 2);
  CHECK(q.equality1);
  CHECK(q.chain_holds);
  CHECK(q.derived_is_commutator_set == true);
  CHECK(q.inn_autc_iastar_equal == true);
  CHECK(q.violations.empty());

  const auto p = schur_report(paper_example_32());
  CHECK(p.center_quotient_order == 16);
  CHECK(p.derived_order == 4);
  CHECK(p.d == 2);
  CHECK(p.equality1);
  CHECK_FALSE(p.derived_cyclic);
  CHECK(p.chain_holds);
  CHECK(p.tuples.size() >= 20);
  for (const auto& t : p.tuples) {
    CHECK(16 <= t.product);
    CHECK(t.product <= p.commutator_set_bound);
  }
}

TEST_CASE("co-class 2") {
  const auto r = check_thm36(paper_example_32());
  CHECK(r.status == Status::Pass);
  CHECK(check_thm36(quaternion(8)).status == Status::NotApplicable);
  CHECK(check_thm36(cyclic(4)).status == Status::NotApplicable);
}

TEST_CASE("the order-32 example report") {
  const auto r = verify_example32();
  for (const auto& f : r.facts) {
    CAPTURE(f.name);
    CHECK(f.holds);
  }
  CHECK(r.ok());
  CHECK(r.facts.size() >= 15);
}

TEST_CASE("suite") {
  CHECK(run_suite({}).records.empty());
  CHECK(run_suite({}).ok());
  SuiteOptions o;
  o.selectors = {"thm36"};
  const auto r = run_suite({paper_example_32()}, o);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].result.status == Status::Pass);
  CHECK_THROWS_AS(resolve_selectors({"nope"}), std::invalid_argument);
  CHECK(resolve_selectors({"all"}) == suite_checks());
}

TEST_CASE("suite output does not depend on scheduling") {
  std::vector<FiniteGroup> corpus;
  for (const auto& g : default_corpus())
    if (g.order() <= 64) corpus.push_back(g);
  SuiteOptions a, b;
  b.parallel = false;
  b.autos.policy = kernels::Policy::Serial;
  const auto ra = run_suite(corpus, a);
  const auto rb = run_suite(corpus, b);
  CHECK(ra.ok());
  CHECK(suite_json(ra).dump() == suite_json(rb).dump());
}
