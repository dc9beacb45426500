#include <doctest.h>

#include <stdexcept>

#include "nilaut/abelian.hpp"
#include "oracles.hpp"

using namespace nilaut;

namespace {

FgAbelian from_factors(const oracle::CyclicFactors& f) {
  return FgAbelian::from_invariant_factors(f, 0, true);
}

}  // namespace

TEST_CASE("invariant factor input is split into primary parts") {
  const Int f24[] = {2, 4};
  CHECK(FgAbelian::from_invariant_factors(f24, 0).primary() == FgAbelian::PrimaryMap{{2, {2, 1}}});
  const Int f6[] = {6};
  CHECK(FgAbelian::from_invariant_factors(f6, 0).primary() == FgAbelian::PrimaryMap{{2, {1}}, {3, {1}}});
  auto z = FgAbelian::from_invariant_factors({}, 1);
  CHECK(z.free_rank() == 1);
  CHECK(z.is_torsion_free());
  const Int bad[] = {4, 2};
  CHECK_THROWS_AS(FgAbelian::from_invariant_factors(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(FgAbelian::from_primary({{4, {1}}}), std::invalid_argument);
}

TEST_CASE("invariant factors recombine primes") {
  auto u = FgAbelian::from_primary({{2, {2, 1}}, {3, {1}}});
  CHECK(invariant_factors(u) == InvariantFactors{{2, 12}, 0});
  CHECK(invariant_factors(FgAbelian{}) == InvariantFactors{{}, 0});
  CHECK(invariant_factors(FgAbelian::from_primary({{2, {1, 1}}})) == InvariantFactors{{2, 2}, 0});
}

TEST_CASE("descriptor syntax round trips") {
  CHECK(FgAbelian::parse("Z^1 x C_4 x C_2").to_string() == "Z^1 x C_4 x C_2");
  CHECK(FgAbelian::parse("C_2xC_3") == FgAbelian::cyclic(6));
  CHECK(FgAbelian::parse(" C_2 ^3 ") == FgAbelian::parse("C_2 x C_2 x C_2"));
  CHECK(FgAbelian::parse("1").is_trivial());
  CHECK(FgAbelian::parse("Z") == FgAbelian::free(1));
  CHECK(FgAbelian::parse("C_{12}") == FgAbelian::cyclic(12));
  CHECK_THROWS(FgAbelian::parse("C_"));
  CHECK_THROWS(FgAbelian::parse("Q_8"));
  for (const auto& f : oracle::abelian_types_up_to(64)) {
    const auto u = from_factors(f);
    CHECK(FgAbelian::parse(u.to_string()) == u);
  }
}

TEST_CASE("isomorphism is equality of canonical forms") {
  const Int f6[] = {6};
  CHECK(is_isomorphic(FgAbelian::from_primary({{2, {1}}, {3, {1}}}), FgAbelian::from_invariant_factors(f6, 0)));
  CHECK_FALSE(is_isomorphic(FgAbelian::free(1), FgAbelian::cyclic(2)));
  CHECK(is_isomorphic(FgAbelian::from_primary({{2, {2, 1}}}), FgAbelian::from_primary({{2, {1, 2}}})));
}

TEST_CASE("hom structure on the basic cases") {
  CHECK(hom_structure(FgAbelian::free(2), FgAbelian::cyclic(2)) == FgAbelian::from_primary({{2, {1, 1}}}));
  CHECK(hom_structure(FgAbelian::cyclic(4), FgAbelian::free(1)).is_trivial());
  const auto c4c2 = FgAbelian::parse("C_4 x C_2");
  CHECK(hom_structure(c4c2, FgAbelian::cyclic(4)) == c4c2);
  CHECK(hom_structure(c4c2, FgAbelian::parse("C_2 x C_2")) == FgAbelian::from_primary({{2, {1, 1, 1, 1}}}));
  CHECK(hom_structure(FgAbelian::parse("Z^2 x C_6"), FgAbelian::parse("Z x C_4")) ==
        FgAbelian::parse("Z^2 x C_4 x C_4 x C_2"));
  CHECK(hom_structure(FgAbelian::cyclic(9), FgAbelian::cyclic(4)).is_trivial());
}

TEST_CASE("hom structure matches enumeration for small groups") {
  const auto types = oracle::abelian_types_up_to(16);
  for (const auto& a : types)
    for (const auto& b : types) {
      if (oracle::hom_order_by_enumeration(a, b) > 5000) continue;
      const auto h = hom_structure(from_factors(a), from_factors(b));
      CAPTURE(from_factors(a).to_string());
      CAPTURE(from_factors(b).to_string());
      CHECK(h.order() == oracle::hom_order_by_enumeration(a, b));
      CHECK(h.primary() == oracle::hom_type_by_enumeration(a, b));
    }
}

TEST_CASE("rank functions") {
  const auto u = FgAbelian::parse("Z^2 x C_4 x C_2 x C_3");
  CHECK(free_rank(u) == 2);
  CHECK(torsion_rank(u) == 2);
  CHECK(rank(u) == 4);
  CHECK(exponent_of_torsion(u) == 12);
  CHECK(exponent_of_torsion(FgAbelian::free(3)) == 1);
  CHECK(is_homocyclic(FgAbelian::parse("C_4 x C_4")));
  CHECK_FALSE(is_homocyclic(FgAbelian::parse("C_4 x C_2")));
  CHECK(is_homocyclic(FgAbelian{}));
  CHECK(is_homocyclic_at(u, 3));
  CHECK_FALSE(is_homocyclic_at(u, 2));
  CHECK(is_cyclic(FgAbelian::cyclic(12)));
  CHECK(is_cyclic(FgAbelian::free(1)));
  CHECK_FALSE(is_cyclic(FgAbelian::parse("C_2 x C_2")));
  CHECK(direct_product(FgAbelian::cyclic(2), FgAbelian::cyclic(3)) == FgAbelian::cyclic(6));
  CHECK(power(FgAbelian::cyclic(2), 3) == FgAbelian::parse("C_2^3"));
  CHECK(power(FgAbelian::cyclic(2), 0).is_trivial());
  CHECK_THROWS_AS(FgAbelian::free(1).order(), std::domain_error);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_pow(2, 10) == 1024);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 40), std::overflow_error);
  CHECK(factorize(360) == std::vector<std::pair<Int, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
}
