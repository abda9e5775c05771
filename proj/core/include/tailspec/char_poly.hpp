#pragma once

#include "tailspec/graph.hpp"
#include "tailspec/int_poly.hpp"

namespace tailspec {

/// det(lambda I - A(g)) as an exact monic integer polynomial of degree
/// g.n, computed by the Faddeev-LeVerrier recursion (every division by
/// the step index is exact over the integers). The empty graph gives
/// the constant 1. Practical bound n <= 64.
IntPoly charpoly(const Graph& g);

/// Characteristic polynomial of the path P_m: Q(.,0) = 1, Q(.,1) = x,
/// Q(.,m) = x Q(.,m-1) - Q(.,m-2). Equals U_m(x/2), the Chebyshev
/// polynomial of the second kind.
IntPoly chebyshev_q(int m);

/// Characteristic polynomial of g expanded at vertex v:
///   x P(g\v) - sum_{v'~v} P(g\{v,v'}) - 2 sum_{cycles Z through v} P(g\Z).
/// Identically equal to charpoly(g). Requires g.n <= 20 (the cycle
/// enumeration is exhaustive).
IntPoly schwenk_expand(const Graph& g, int v);

/// Result of clearing denominators in P(lambda) - x Pv(lambda) = 0 under
/// lambda = x + 1/x. Every root of s in (-1,1)\{0} corresponds to an
/// eigenvalue lambda = x + 1/x outside [-2,2].
struct TailEquation {
    IntPoly s;             // x-powers stripped, leading coefficient > 0
    int stripped_x_power;  // multiplicity of the removed x = 0 root
    bool sign_flipped;     // whether -1 normalization was applied
};

/// s0(x) = x^n [P(x + 1/x) - x Pv(x + 1/x)] with n = deg P, then all
/// factors of x stripped (x = 0 would mean |lambda| = infinity) and the
/// sign normalized. Requires deg Pv == deg P - 1 or Pv == 0.
TailEquation tail_equation_poly(const IntPoly& p, const IntPoly& pv);

}  // namespace tailspec
