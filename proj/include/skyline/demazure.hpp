#pragma once

#include "skyline/composition.hpp"
#include "skyline/polynomial.hpp"

namespace skyline {

// Interchanges x_i and x_{i+1} in every monomial. Requires 1 <= i < arity.
Polynomial swap_vars(const Polynomial& f, int i);

// Divided difference (f - s_i f) / (x_i - x_{i+1}). The numerator is always
// exactly divisible; a nonzero remainder would indicate an internal bug and
// aborts. The result is symmetric in x_i, x_{i+1}.
Polynomial divided_difference(const Polynomial& f, int i);

// Demazure operator: the divided difference applied to x_i * f.
Polynomial pi(const Polynomial& f, int i);

// Key polynomial by the operator recursion: the monomial x^alpha when alpha
// is a partition, otherwise pi applied at the smallest ascent.
Polynomial key_recursive(const Composition& alpha);

// Key polynomial as the weight generating function of the semistandard
// skyline fillings of alpha.
Polynomial key_combinatorial(const Composition& alpha);

}  // namespace skyline
