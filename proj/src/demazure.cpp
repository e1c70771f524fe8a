#include "skyline/demazure.hpp"

#include <stdexcept>

#include "skyline/filling.hpp"

namespace skyline {

namespace {

void check_index(const Polynomial& f, int i) {
    if (i < 1 || i >= f.arity())
        throw std::out_of_range("variable index must satisfy 1 <= i < arity");
}

}  // namespace

Polynomial swap_vars(const Polynomial& f, int i) {
    check_index(f, i);
    Polynomial out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector swapped = e;
        int ei = e.exponent(i);
        swapped.set_exponent(i, e.exponent(i + 1));
        swapped.set_exponent(i + 1, ei);
        out.add_term(swapped, c);
    }
    return out;
}

Polynomial divided_difference(const Polynomial& f, int i) {
    check_index(f, i);
    Polynomial remainder = f - swap_vars(f, i);
    Polynomial quotient(f.arity());
    // Exact division by x_i - x_{i+1} via leading-term elimination in the
    // graded-lex order (which has x_i > x_{i+1}); each step strictly lowers
    // the leading monomial.
    while (!remainder.is_zero()) {
        // copy: add_term below erases this exact node when the term cancels
        const ExponentVector lead = remainder.terms().begin()->first;
        const std::int64_t coeff = remainder.terms().begin()->second;
        if (lead.exponent(i) == 0)
            throw std::logic_error(
                "divided difference: numerator is not divisible by x_i - x_{i+1}");
        ExponentVector q = lead;
        q.add_to_exponent(i, -1);
        quotient.add_term(q, coeff);
        ExponentVector shifted = q;
        shifted.add_to_exponent(i + 1, 1);
        remainder.add_term(lead, checked_mul(coeff, -1));
        remainder.add_term(shifted, coeff);
    }
    return quotient;
}

Polynomial pi(const Polynomial& f, int i) {
    check_index(f, i);
    Polynomial xf(f.arity());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector lifted = e;
        lifted.add_to_exponent(i, 1);
        xf.add_term(lifted, c);
    }
    return divided_difference(xf, i);
}

Polynomial key_recursive(const Composition& alpha) {
    const int n = alpha.num_rows();
    if (alpha.is_partition())
        return Polynomial::monomial(ExponentVector(alpha.parts()));
    int i = 1;
    while (alpha.part(i) >= alpha.part(i + 1)) ++i;
    return pi(key_recursive(alpha.with_swapped_parts(i)), i);
}

Polynomial key_combinatorial(const Composition& alpha) {
    Polynomial sum(alpha.num_rows());
    for (const Filling& f : enumerate_ssf(alpha))
        sum.add_term(weight(f), 1);
    return sum;
}

}  // namespace skyline
