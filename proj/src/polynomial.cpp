#include "skyline/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skyline {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient multiplication");
    return r;
}

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
}

Polynomial Polynomial::monomial(ExponentVector e, std::int64_t coeff) {
    Polynomial p(e.arity());
    p.add_term(e, coeff);
    return p;
}

Polynomial Polynomial::constant(int arity, std::int64_t value) {
    Polynomial p(arity);
    p.add_term(ExponentVector(arity), value);
    return p;
}

Polynomial Polynomial::variable(int arity, int var) {
    ExponentVector e(arity);
    e.set_exponent(var, 1);
    return monomial(std::move(e));
}

std::int64_t Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const ExponentVector& e, std::int64_t coeff) {
    if (e.arity() != arity_)
        throw std::invalid_argument("exponent vector arity mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_arity(const Polynomial& other) const {
    if (arity_ != other.arity_)
        throw std::invalid_argument("polynomials have different arities");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_arity(b);
    Polynomial out(a.arity());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e = ea;
            for (int v = 1; v <= e.arity(); ++v)
                e.add_to_exponent(v, eb.exponent(v));
            out.add_term(e, checked_mul(ca, cb));
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    return *this = *this * other;
}

Polynomial& Polynomial::operator*=(std::int64_t scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c = checked_mul(c, scalar);
    return *this;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
    std::ostringstream out;
    bool first = true;
    for (int v = 1; v <= e.arity(); ++v) {
        int exp = e.exponent(v);
        if (exp == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << v;
        if (exp > 1) out << '^' << exp;
    }
    return out.str();
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t abs = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_text(e);
        if (mono.empty()) {
            out << abs;
        } else {
            if (abs != 1) out << abs << '*';
            out << mono;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int arity;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos == s.size();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(pos) + ": " + what);
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw std::overflow_error("coefficient literal does not fit 64 bits");
        }
    }

    // factor := 'x' var ('^' exp)?
    void parse_factor(ExponentVector& e) {
        skip_ws();
        if (pos >= s.size() || s[pos] != 'x') fail("expected a variable factor");
        ++pos;
        std::int64_t var = parse_integer();
        if (var < 1 || var > arity) fail("variable index out of range");
        std::int64_t exp = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            exp = parse_integer();
            if (exp < 1) fail("exponent must be positive");
        }
        e.add_to_exponent(static_cast<int>(var), static_cast<int>(exp));
    }

    // term := integer ('*' factor)* | factor ('*' factor)*
    void parse_term(Polynomial& p, std::int64_t sign) {
        skip_ws();
        std::int64_t coeff = 1;
        ExponentVector e(arity);
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_integer();
        } else {
            parse_factor(e);
        }
        skip_ws();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            parse_factor(e);
            skip_ws();
        }
        p.add_term(e, checked_mul(sign, coeff));
    }

    Polynomial parse() {
        Polynomial p(arity);
        skip_ws();
        if (eof()) fail("empty input");
        if (s.compare(pos, 1, "0") == 0) {
            std::size_t save = pos;
            ++pos;
            if (eof()) return p;
            pos = save;
        }
        std::int64_t sign = 1;
        if (s[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (s[pos] == '+') {
            ++pos;
        }
        parse_term(p, sign);
        while (!eof()) {
            skip_ws();
            if (s[pos] == '+')
                sign = 1;
            else if (s[pos] == '-')
                sign = -1;
            else
                fail("expected '+' or '-' between terms");
            ++pos;
            parse_term(p, sign);
        }
        return p;
    }
};

}  // namespace

Polynomial polynomial_from_text(const std::string& text, int arity) {
    if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
    Parser parser{text, 0, arity};
    return parser.parse();
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"coeff", c}, {"exponents", e.exponents()}});
    return nlohmann::json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p(j.at("arity").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(ExponentVector(term.at("exponents").get<std::vector<int>>()),
                   term.at("coeff").get<std::int64_t>());
    return p;
}

}  // namespace skyline
