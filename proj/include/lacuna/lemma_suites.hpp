#pragma once

#include <cstddef>
#include <ostream>

namespace lacuna {

// Exhaustive exact checks of the three combinatorial identities:
//  - extraction identity (both parts) for every node set T inside
//    {0, ..., t_max} and random-coefficient polynomials of degree <= 6,
//  - multivariate alternating sums vanish for every box with sum w <= 6
//    and every monomial of smaller total degree,
//  - the shifted symmetric values f_p^{R,N} agree with a degree-p
//    polynomial for p <= R <= 6 < N <= 10.
// fault_inject flips the sign of one extraction weight; the suite must
// then fail (negative control). Returns true when every identity holds.
bool run_lemma_suites(long t_max, bool fault_inject, std::ostream& log);

}  // namespace lacuna
