#pragma once

#include <stdexcept>
#include <vector>

namespace skyline {

// Exponent vector of a monomial in x_1..x_n. Variable indices are 1-based;
// the arity is fixed at construction.
class ExponentVector {
  public:
    explicit ExponentVector(int arity) : exps_(check_arity(arity), 0) {}

    explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
        if (exps_.empty())
            throw std::invalid_argument("exponent vector must have arity >= 1");
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    }

    int arity() const { return static_cast<int>(exps_.size()); }

    int exponent(int var) const {
        check_var(var);
        return exps_[var - 1];
    }

    void set_exponent(int var, int e) {
        check_var(var);
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
        exps_[var - 1] = e;
    }

    void add_to_exponent(int var, int delta) {
        check_var(var);
        if (exps_[var - 1] + delta < 0)
            throw std::invalid_argument("exponent would become negative");
        exps_[var - 1] += delta;
    }

    int total_degree() const {
        int d = 0;
        for (int e : exps_) d += e;
        return d;
    }

    const std::vector<int>& exponents() const { return exps_; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    static int check_arity(int arity) {
        if (arity < 1) throw std::invalid_argument("arity must be >= 1");
        return arity;
    }
    void check_var(int var) const {
        if (var < 1 || var > arity())
            throw std::out_of_range("variable index out of range");
    }

    std::vector<int> exps_;
};

// Graded lexicographic order with x1 > x2 > ... > xn, largest monomial first.
// This is the canonical term order for printing and for the exact division
// inside the divided difference.
struct GrlexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exponents() > b.exponents();
    }
};

}  // namespace skyline
