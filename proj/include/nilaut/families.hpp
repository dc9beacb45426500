#pragma once

// Built-in group families. Every constructor goes through build_group, so the
// returned tables are verified like any user-supplied presentation.

#include <vector>

#include "nilaut/abelian.hpp"
#include "nilaut/pcgroup.hpp"

namespace nilaut {

enum class ExtraspecialType {
  Plus,   // p odd: exponent p; p = 2: central product of copies of D_8
  Minus,  // p odd: exponent p^2; p = 2: Q_8 central product copies of D_8
};

// Generators x, y, u with relative orders 2, 8, 2: x^2 = y^4, y^x = y u,
// u^x = u, u^y = y^4 u. Normal forms are x^i y^j u^k.
PcPresentation paper_example_32_presentation();
// Generators x, y with relative orders 2 and 2^(n-1): x^2 = y^(2^(n-2)), y^x = y^-1.
PcPresentation quaternion_presentation(unsigned order);
// Generators x, y, z of relative order p^k: y^x = y z^-1, z central.
PcPresentation heisenberg_presentation(Int p, unsigned k);

FiniteGroup cyclic(Int n);
// Requires a finite descriptor; one generator per primary factor.
FiniteGroup abelian_from(const FgAbelian& u);
// Dihedral group of the given order (2m, m >= 2).
FiniteGroup dihedral(unsigned order);
// Generalized quaternion group of order 2^n, n >= 3.
FiniteGroup quaternion(unsigned order);
// Extraspecial group of order p^(1+2m).
FiniteGroup extraspecial(Int p, unsigned m, ExtraspecialType type);
// Upper unitriangular 3x3 matrices over Z/p^k.
FiniteGroup heisenberg(Int p, unsigned k);
// Class-2 group generated by pairs x_i, y_i of order p^f_i and a central z of
// order p^e with [x_i, y_i] = z^(p^(e - f_i)); requires 1 <= f_i <= e. The
// quotient by the center is the product of C_{p^f_i}^2.
FiniteGroup central_heisenberg(Int p, unsigned e, const std::vector<unsigned>& pair_exponents);
FiniteGroup paper_example_32();

}  // namespace nilaut
