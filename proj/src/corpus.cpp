#include "nilaut/corpus.hpp"

#include <algorithm>

#include "nilaut/families.hpp"

namespace nilaut {

std::vector<FiniteGroup> default_corpus() {
  std::vector<FiniteGroup> c;
  for (Int n : {1, 2, 6, 12, 16}) c.push_back(cyclic(n));
  for (const char* u : {"C_2 x C_2", "C_4 x C_2", "C_3 x C_3", "C_2^3", "C_4 x C_4", "C_6 x C_2", "C_8 x C_4 x C_2"})
    c.push_back(abelian_from(FgAbelian::parse(u)));

  c.push_back(dihedral(8));
  c.push_back(dihedral(16));
  c.push_back(quaternion(8));
  c.push_back(quaternion(16));
  for (Int p : {2, 3, 5}) {
    c.push_back(extraspecial(p, 1, ExtraspecialType::Plus));
    c.push_back(extraspecial(p, 1, ExtraspecialType::Minus));
    c.push_back(heisenberg(p, 1));
  }
  for (Int p : {2, 3}) {
    c.push_back(extraspecial(p, 2, ExtraspecialType::Plus));
    c.push_back(extraspecial(p, 2, ExtraspecialType::Minus));
    c.push_back(heisenberg(p, 2));
  }
  c.push_back(direct_product(quaternion(8), cyclic(2)));
  c.push_back(direct_product(quaternion(8), cyclic(4)));
  c.push_back(direct_product(dihedral(8), cyclic(2)));
  c.push_back(direct_product(heisenberg(3, 1), cyclic(3)));
  c.push_back(direct_product(dihedral(8), dihedral(8)));
  c.push_back(central_heisenberg(2, 2, {2, 1}));
  c.push_back(paper_example_32());

  std::sort(c.begin(), c.end(), [](const FiniteGroup& a, const FiniteGroup& b) { return a.name() < b.name(); });
  return c;
}

}  // namespace nilaut
