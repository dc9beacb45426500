#include <doctest.h>

#include <numeric>
#include <vector>

#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/pcgroup.hpp"
#include "oracles.hpp"

using namespace nilaut;

TEST_CASE("collection in the order-32 presentation") {
  const auto pres = paper_example_32_presentation();
  const std::size_t x = 0, y = 1, u = 2;
  CHECK(collect(pres, {}) == NormalForm{0, 0, 0});
  CHECK(collect(pres, {{y, 1}, {x, 1}}) == NormalForm{1, 1, 1});
  CHECK(collect(pres, {{u, 1}, {y, 1}}) == NormalForm{0, 5, 1});
  CHECK(collect(pres, {{x, 2}}) == NormalForm{0, 4, 0});
  CHECK(collect(pres, {{x, 4}}) == NormalForm{0, 0, 0});
  CHECK(collect(pres, {{y, -1}}) == NormalForm{0, 7, 0});
}

TEST_CASE("collector budget") {
  const auto pres = paper_example_32_presentation();
  Word w;
  for (int i = 0; i < 50; ++i) w.push_back({static_cast<std::size_t>(2 - i % 3), 1});
  CHECK_THROWS_AS(collect(pres, w, 10), CollectionBudgetExceeded);
}

TEST_CASE("build_group on small presentations") {
  const auto g = paper_example_32();
  CHECK(g.order() == 32);
  CHECK(g.identity() == 0);
  CHECK(check_consistency(g));

  PcPresentation c5({"a"}, {5});
  const auto c = build_group(c5);
  CHECK(c.order() == 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) CHECK(c.mul(i, j) == (i + j) % 5);

  PcPresentation q({"x", "y"}, {2, 4});
  q.set_power(0, {{1, 2}});
  q.set_conjugate(0, 1, {{1, 3}});
  const auto q8 = build_group(q);
  CHECK(q8.order() == 8);
  std::size_t involutions = 0;
  for (Index a = 0; a < 8; ++a) involutions += q8.element_order(a) == 2;
  CHECK(involutions == 1);
  CHECK(oracle::fingerprint(q8) == oracle::fingerprint(quaternion(8)));

  PcPresentation v({"x", "y"}, {2, 2});
  CHECK(check_consistency(build_group(v)));
}

TEST_CASE("inconsistent presentation is rejected") {
  // x^2 = y commutes with x, so y^x = y^2 cannot hold
  PcPresentation bad({"x", "y"}, {2, 3});
  bad.set_power(0, {{1, 1}});
  bad.set_conjugate(0, 1, {{1, 2}});
  CHECK_THROWS_AS(build_group(bad), ConsistencyError);
}

TEST_CASE("corrupted table fails the consistency check") {
  const auto g = quaternion(8);
  std::vector<Index> t(g.table().begin(), g.table().end());
  std::swap(t[1 * 8 + 2], t[1 * 8 + 3]);
  CHECK_FALSE(check_consistency(t, 8));
}

TEST_CASE("cap on the number of normal forms") {
  PcPresentation big({"a", "b", "c"}, {64, 64, 64});
  BuildOptions o;
  o.cap = 1000;
  CHECK_THROWS_AS(build_group(big, o), CapExceeded);
}

TEST_CASE("direct products") {
  CHECK(direct_product(quaternion(8), cyclic(2)).order() == 16);
  const auto c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(abelian_structure(c6) == FgAbelian::cyclic(6));
  CHECK(oracle::fingerprint(direct_product(dihedral(8), cyclic(1))) == oracle::fingerprint(dihedral(8)));
}

TEST_CASE("relabelling preserves invariants") {
  const auto g = paper_example_32();
  std::vector<Index> perm(g.order());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::reverse(perm.begin(), perm.end());
  const auto h = relabel(g, perm);
  CHECK(check_consistency(h));
  CHECK(oracle::fingerprint(h) == oracle::fingerprint(g));
  CHECK(nilpotency_class(h) == 3);
}

TEST_CASE("families against independent constructions") {
  for (Int p : {2, 3, 5}) {
    const auto h = heisenberg(p, 1);
    const auto t = oracle::heisenberg_matrix_table(p, 1);
    CHECK(oracle::fingerprint(h) == oracle::fingerprint(t, h.order()));
  }
  const auto h = heisenberg(2, 2);
  CHECK(oracle::fingerprint(h) == oracle::fingerprint(oracle::heisenberg_matrix_table(2, 2), 64));
  CHECK(oracle::fingerprint(extraspecial(2, 1, ExtraspecialType::Plus)) == oracle::fingerprint(dihedral(8)));
  CHECK(oracle::fingerprint(extraspecial(2, 1, ExtraspecialType::Minus)) == oracle::fingerprint(quaternion(8)));
  CHECK(oracle::fingerprint(extraspecial(3, 1, ExtraspecialType::Plus)) == oracle::fingerprint(heisenberg(3, 1)));
  for (unsigned n : {4u, 6u, 8u, 16u}) {
    const auto d = dihedral(n);
    std::size_t involutions = 0;
    for (Index a = 0; a < d.order(); ++a) involutions += d.element_order(a) == 2;
    CHECK(involutions == (n % 4 == 0 ? n / 2 + 1 : n / 2));
  }
  CHECK(cyclic(1).order() == 1);
  CHECK(abelian_from(FgAbelian::parse("C_4 x C_2 x C_3")).order() == 24);
  CHECK_THROWS(quaternion(12));
  CHECK_THROWS(central_heisenberg(2, 1, {2}));
}
