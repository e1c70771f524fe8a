#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "skyline/monomial.hpp"

#include "json.hpp"

namespace skyline {

// Coefficient arithmetic is exact: any 64-bit wraparound throws instead of
// producing a wrong value.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Sparse multivariate polynomial over the integers with a fixed arity.
// Terms are kept in graded-lex order (largest first) and zero coefficients
// are never stored. Binary operations require equal arities.
class Polynomial {
  public:
    using TermMap = std::map<ExponentVector, std::int64_t, GrlexDescending>;

    explicit Polynomial(int arity);

    static Polynomial monomial(ExponentVector e, std::int64_t coeff = 1);
    static Polynomial constant(int arity, std::int64_t value);
    static Polynomial variable(int arity, int var);  // x_var

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    std::int64_t coefficient(const ExponentVector& e) const;

    // Adds coeff * x^e, erasing the term if the result cancels.
    void add_term(const ExponentVector& e, std::int64_t coeff);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(std::int64_t scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, std::int64_t s) { return a *= s; }
    friend Polynomial operator*(std::int64_t s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= -1; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    void check_same_arity(const Polynomial& other) const;

    int arity_;
    TermMap terms_;
};

// Canonical text form: terms in graded-lex order, e.g. "x1^2 + x1*x2 + x2^2",
// "2*x1^3 - x2", "0". Exponent-0 factors and unit coefficients are omitted.
std::string to_text(const Polynomial& p);

// Parses the text form back; the arity must be supplied since trailing unused
// variables are not visible in the text.
Polynomial polynomial_from_text(const std::string& text, int arity);

// JSON form: { "arity": n, "terms": [{"coeff": c, "exponents": [...]}, ...] }
// with terms in canonical order.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace skyline
