#include "nilaut/families.hpp"

#include <stdexcept>
#include <string>

namespace nilaut {

namespace {

std::string str(Int v) { return std::to_string(v); }

unsigned checked_order(Int p, unsigned k) {
  Int q = checked_pow(p, k);
  if (q > kDefaultGroupCap) throw std::invalid_argument("relative order p^k too large");
  return static_cast<unsigned>(q);
}

void require_prime(Int p) {
  if (!is_prime(p)) throw std::invalid_argument(str(p) + " is not prime");
}

}  // namespace

PcPresentation paper_example_32_presentation() {
  PcPresentation pres({"x", "y", "u"}, {2, 8, 2});
  const std::size_t x = 0, y = 1, u = 2;
  pres.set_power(x, {{y, 4}});
  pres.set_conjugate(x, y, {{y, 1}, {u, 1}});
  // [u, y] = y^4 is central, so u^y = u y^4 = y^4 u
  pres.set_conjugate(y, u, {{y, 4}, {u, 1}});
  return pres;
}

PcPresentation quaternion_presentation(unsigned order) {
  unsigned n = 0;
  while ((1u << n) < order) ++n;
  if (order < 8 || (1u << n) != order) throw std::invalid_argument("quaternion order must be 2^n with n >= 3");
  const unsigned half = order / 2;
  PcPresentation pres({"x", "y"}, {2, half});
  pres.set_power(0, {{1, static_cast<long>(half / 2)}});
  pres.set_conjugate(0, 1, {{1, static_cast<long>(half - 1)}});
  return pres;
}

PcPresentation heisenberg_presentation(Int p, unsigned k) {
  require_prime(p);
  if (k == 0) throw std::invalid_argument("heisenberg needs k >= 1");
  const unsigned q = checked_order(p, k);
  PcPresentation pres({"x", "y", "z"}, {q, q, q});
  // x^-1 y x = y z^-1 for x = 1 + E12, y = 1 + E23, z = 1 + E13
  pres.set_conjugate(0, 1, {{1, 1}, {2, static_cast<long>(q - 1)}});
  return pres;
}

FiniteGroup cyclic(Int n) {
  if (n == 0) throw std::invalid_argument("cyclic(0)");
  if (n == 1) {
    FiniteGroup g;
    g.set_name("C_1");
    g.set_family("cyclic");
    return g;
  }
  if (n > kDefaultGroupCap) throw std::invalid_argument("cyclic order exceeds cap");
  PcPresentation pres({"g"}, {static_cast<unsigned>(n)});
  return build_group(pres, {}, "C_" + str(n), "cyclic");
}

FiniteGroup abelian_from(const FgAbelian& u) {
  if (!u.is_finite()) throw std::invalid_argument("abelian_from needs a finite descriptor");
  if (u.is_trivial()) {
    FiniteGroup g;
    g.set_name("1");
    g.set_family("abelian");
    return g;
  }
  std::vector<std::string> names;
  std::vector<unsigned> orders;
  for (const auto& [p, exps] : u.primary())
    for (unsigned e : exps) {
      names.push_back("a" + std::to_string(names.size() + 1));
      orders.push_back(checked_order(p, e));
    }
  PcPresentation pres(std::move(names), std::move(orders));
  return build_group(pres, {}, u.to_string(), "abelian");
}

FiniteGroup dihedral(unsigned order) {
  if (order < 4 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even and >= 4");
  const unsigned m = order / 2;
  PcPresentation pres({"s", "r"}, {2, m});
  pres.set_conjugate(0, 1, {{1, static_cast<long>(m - 1)}});
  return build_group(pres, {}, "D_" + std::to_string(order), "dihedral");
}

FiniteGroup quaternion(unsigned order) {
  return build_group(quaternion_presentation(order), {}, "Q_" + std::to_string(order), "quaternion");
}

FiniteGroup extraspecial(Int p, unsigned m, ExtraspecialType type) {
  require_prime(p);
  if (m == 0) throw std::invalid_argument("extraspecial needs m >= 1");
  const auto pu = static_cast<unsigned>(p);
  std::vector<std::string> names;
  for (unsigned i = 1; i <= m; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  names.push_back("z");
  const std::size_t z = 2 * m;
  PcPresentation pres(names, std::vector<unsigned>(2 * m + 1, pu));
  for (unsigned i = 0; i < m; ++i) pres.set_conjugate(2 * i, 2 * i + 1, {{2 * i + 1, 1}, {z, 1}});
  if (type == ExtraspecialType::Minus) {
    pres.set_power(0, {{z, 1}});
    if (p == 2) pres.set_power(1, {{z, 1}});
  }
  const char* tag = type == ExtraspecialType::Plus ? "+" : "-";
  return build_group(pres, {}, "extraspecial(" + str(p) + "^" + std::to_string(1 + 2 * m) + tag + ")",
                     "extraspecial");
}

FiniteGroup heisenberg(Int p, unsigned k) {
  return build_group(heisenberg_presentation(p, k), {}, "heisenberg(" + str(p) + "," + std::to_string(k) + ")",
                     "heisenberg");
}

FiniteGroup central_heisenberg(Int p, unsigned e, const std::vector<unsigned>& pair_exponents) {
  require_prime(p);
  if (e == 0 || pair_exponents.empty()) throw std::invalid_argument("central_heisenberg needs e >= 1 and a pair");
  std::vector<std::string> names;
  std::vector<unsigned> orders;
  std::string tag;
  for (std::size_t i = 0; i < pair_exponents.size(); ++i) {
    const unsigned f = pair_exponents[i];
    if (f == 0 || f > e) throw std::invalid_argument("pair exponent must lie in [1, e]");
    names.push_back("x" + std::to_string(i + 1));
    names.push_back("y" + std::to_string(i + 1));
    orders.push_back(checked_order(p, f));
    orders.push_back(checked_order(p, f));
    tag += (i ? "," : "") + std::to_string(f);
  }
  names.push_back("z");
  const unsigned zorder = checked_order(p, e);
  orders.push_back(zorder);
  PcPresentation pres(names, orders);
  const std::size_t z = names.size() - 1;
  for (std::size_t i = 0; i < pair_exponents.size(); ++i) {
    const long shift = static_cast<long>(checked_order(p, e - pair_exponents[i]));
    pres.set_conjugate(2 * i, 2 * i + 1, {{2 * i + 1, 1}, {z, shift}});
  }
  return build_group(pres, {}, "central_heisenberg(" + str(p) + "," + std::to_string(e) + ";" + tag + ")",
                     "central-heisenberg");
}

FiniteGroup paper_example_32() {
  return build_group(paper_example_32_presentation(), {}, "paper_example_32", "paper-example-32");
}

}  // namespace nilaut
