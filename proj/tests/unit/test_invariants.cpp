#include <doctest.h>

#include <set>

#include "nilaut/corpus.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/invariants.hpp"
#include "oracles.hpp"

using namespace nilaut;

namespace {

std::vector<char> mask_of(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> m(g.order(), 0);
  for (Index x : h.elements()) m[x] = 1;
  return m;
}

Index by_name(const FiniteGroup& g, const std::string& name) {
  for (std::size_t i = 0; i < g.generator_names().size(); ++i)
    if (g.generator_names()[i] == name) return g.generators()[i];
  FAIL("no generator " << name);
  return 0;
}

FiniteGroup small_symmetric3() {
  PcPresentation s3({"a", "b"}, {2, 3});
  s3.set_conjugate(0, 1, {{1, 2}});
  return build_group(s3);
}

}  // namespace

TEST_CASE("center and derived subgroup against definitions") {
  for (const auto& g : default_corpus()) {
    if (g.order() > 256) continue;
    CAPTURE(g.name());
    CHECK(mask_of(g, center(g)) == oracle::naive_center(g));
    CHECK(mask_of(g, derived_subgroup(g)) == oracle::naive_derived(g));
  }
}

TEST_CASE("the order-32 example") {
  const auto g = paper_example_32();
  const Index x = by_name(g, "x"), y = by_name(g, "y"), u = by_name(g, "u");
  CHECK(g.element_order(x) == 4);
  CHECK(g.element_order(y) == 8);
  CHECK(g.element_order(u) == 2);
  const Index y4[] = {g.pow(y, 4)};
  CHECK(center(g) == Subgroup::generated_by(g, y4));
  const auto d = derived_subgroup(g);
  CHECK(d.order() == 4);
  CHECK(d.is_elementary_abelian(g));
  CHECK_FALSE(d.is_cyclic(g));
  CHECK(abelian_structure(g, d) == FgAbelian::parse("C_2 x C_2"));
  const Index phi_gens[] = {g.pow(y, 2), u};
  CHECK(frattini_subgroup(g) == Subgroup::generated_by(g, phi_gens));
  CHECK(frattini_by_powers(g) == frattini_subgroup(g));
  CHECK(nilpotency_class(g) == 3);
  CHECK(minimal_generator_count(g) == 2);
  CHECK(g.commutator(x, y) == u);
  CHECK_THROWS_AS(structure_triple(g), NotClass2);
}

TEST_CASE("abelian groups") {
  const auto g = abelian_from(FgAbelian::parse("C_8 x C_4 x C_2"));
  CHECK(center(g).order() == g.order());
  CHECK(derived_subgroup(g).order() == 1);
  CHECK(commutator_set(g) == std::vector<Index>{g.identity()});
  CHECK(nilpotency_class(g) == 1);
  CHECK(nilpotency_class(cyclic(1)) == 0);
  for (const auto& f : oracle::abelian_types_up_to(64)) {
    const auto u = FgAbelian::from_invariant_factors(f, 0, true);
    CHECK(abelian_structure(abelian_from(u)) == u);
    const auto dec = decompose_abelian(abelian_from(u));
    CHECK(dec.type == u);
    CHECK(Subgroup::generated_by(abelian_from(u), dec.basis).order() == u.order());
  }
  CHECK_THROWS_AS(decompose_abelian(quaternion(8)), NotAbelian);
}

TEST_CASE("quotients") {
  const auto g = quaternion(8);
  const auto q = quotient(g, center(g));
  CHECK(q.group.order() == 4);
  CHECK(abelian_structure(q.group) == FgAbelian::parse("C_2 x C_2"));
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      CHECK(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
  const auto s3 = small_symmetric3();
  const Index a[] = {s3.generators()[0]};
  CHECK_THROWS_AS(quotient(s3, Subgroup::generated_by(s3, a)), NotNormal);
}

TEST_CASE("non-nilpotent input") {
  const auto s3 = small_symmetric3();
  CHECK_FALSE(is_nilpotent(s3));
  CHECK_THROWS_AS(nilpotency_class(s3), NotNilpotent);
  CHECK_THROWS_AS(minimal_generator_count(s3), NotNilpotent);
  CHECK(frattini_subgroup(s3).order() == 1);
  CHECK(center(s3).order() == 1);
}

TEST_CASE("Frattini subgroup matches G' G^p on p-groups") {
  for (const auto& g : default_corpus()) {
    if (!p_group_prime(g) || g.order() > 256) continue;
    CAPTURE(g.name());
    CHECK(frattini_subgroup(g) == frattini_by_powers(g));
  }
  CHECK(frattini_subgroup(cyclic(12)).order() == 2);
  CHECK_THROWS_AS(frattini_by_powers(cyclic(6)), PreconditionError);
}

TEST_CASE("extraspecial groups") {
  for (Int p : {2, 3}) {
    for (auto type : {ExtraspecialType::Plus, ExtraspecialType::Minus}) {
      const auto g = extraspecial(p, 2, type);
      CHECK(center(g).order() == p);
      CHECK(center(g) == derived_subgroup(g));
      CHECK(frattini_subgroup(g) == center(g));
      CHECK(minimal_generator_count(g) == 4);
    }
  }
}

TEST_CASE("generating tuples") {
  const auto v = abelian_from(FgAbelian::parse("C_2 x C_2"));
  const auto tuples = minimal_generating_tuples(v, 100, 0);
  CHECK(tuples.size() == 6);
  for (const auto& t : tuples) CHECK(t.size() == 2);
  CHECK(minimal_generating_tuples(cyclic(1), 10, 0) == std::vector<std::vector<Index>>{{}});

  const auto g = heisenberg(3, 2);
  const auto a = minimal_generating_tuples(g, 30, 5);
  const auto b = minimal_generating_tuples(g, 30, 5);
  CHECK(a == b);
  CHECK(a.size() == 30);
  for (const auto& t : a) CHECK(Subgroup::generated_by(g, t).order() == g.order());
  CHECK(std::set<std::vector<Index>>(a.begin(), a.end()).size() == a.size());
}

TEST_CASE("structure triples") {
  const auto t = structure_triple(quaternion(8));
  CHECK(t.center_quotient == FgAbelian::parse("C_2 x C_2"));
  CHECK(t.abelianization == FgAbelian::parse("C_2 x C_2"));
  CHECK(t.derived == FgAbelian::cyclic(2));
  const auto p = StructureTriple::parse("C_2xC_2 | C_2xC_2xC_4 | C_2");
  CHECK(p.abelianization == FgAbelian::parse("C_4 x C_2 x C_2"));
  CHECK_THROWS(StructureTriple::parse("C_2 | C_2"));
  CHECK(torsion_rank_of_group(abelian_from(FgAbelian::parse("C_4 x C_2 x C_3"))) == 2);
  const auto s = structure_summary(paper_example_32());
  CHECK(s.order == 32);
  CHECK(s.nilpotency_class == 3u);
  CHECK(s.center_quotient_order == 16);
  CHECK(s.frattini_order == 8);
  CHECK_FALSE(s.triple);
}

TEST_CASE("conjugacy classes partition the group") {
  const auto g = paper_example_32();
  const auto classes = conjugacy_classes(g);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == 32);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == oracle::fingerprint(g).class_sizes);
  const auto ids = conjugacy_class_ids(g);
  for (Index a = 0; a < g.order(); ++a)
    for (Index x : g.generators()) CHECK(ids[g.conjugate(a, x)] == ids[a]);
}
