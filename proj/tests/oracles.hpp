// Independent oracles for the derived expected values: a brute-force filling
// enumerator and condition checker that share no code with the library
// implementation, a direct tableau enumerator, and a deterministic random
// polynomial generator.
#pragma once

#include <random>
#include <vector>

#include "skyline/composition.hpp"
#include "skyline/filling.hpp"
#include "skyline/polynomial.hpp"

namespace oracle {

// Checks the four conditions directly on nested rows; row/column indices are
// 0-based here to keep this code visibly separate from the library.
inline bool is_semistandard(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
            if (rows[i][j] < rows[i][j + 1]) return false;
    for (int i = 0; i < n; ++i)
        for (int v : rows[i])
            if (v < 1 || v > i + 1) return false;
    for (int i = 0; i < n; ++i)
        for (int i2 = i + 1; i2 < n; ++i2)
            for (std::size_t j = 0; j < rows[i].size() && j < rows[i2].size(); ++j)
                if (rows[i][j] == rows[i2][j]) return false;
    // a at (lo, j) below b at (hi, j) with a < b needs c = rows[hi][j+1] > a
    for (int hi = 0; hi < n; ++hi)
        for (int lo = hi + 1; lo < n; ++lo)
            for (std::size_t j = 0; j < rows[hi].size() && j < rows[lo].size(); ++j) {
                int a = rows[lo][j], b = rows[hi][j];
                if (a >= b) continue;
                if (j + 1 >= rows[hi].size() || rows[hi][j + 1] <= a) return false;
            }
    return true;
}

// Every assignment of 1..n to the boxes, filtered by is_semistandard.
inline std::vector<std::vector<std::vector<int>>> brute_force_ssf(
    const std::vector<int>& parts) {
    const int n = static_cast<int>(parts.size());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) rows[i].assign(parts[i], 1);

    int boxes = 0;
    for (int p : parts) boxes += p;
    std::vector<std::pair<int, int>> coords;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < parts[i]; ++j) coords.push_back({i, j});

    std::vector<int> digits(boxes, 1);
    while (true) {
        for (int k = 0; k < boxes; ++k) rows[coords[k].first][coords[k].second] = digits[k];
        if (is_semistandard(rows)) out.push_back(rows);
        int k = boxes - 1;
        while (k >= 0 && digits[k] == n) digits[k--] = 1;
        if (k < 0) break;
        ++digits[k];
    }
    return out;
}

// Semistandard Young tableaux of a partition shape with entries in 1..letters:
// rows weakly increasing, columns strictly increasing.
inline int count_ssyt(const std::vector<int>& shape, int letters) {
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) rows[i].assign(shape[i], 0);

    std::vector<std::pair<int, int>> coords;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) coords.push_back({static_cast<int>(i), j});

    int count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == coords.size()) {
            ++count;
            return;
        }
        auto [i, j] = coords[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= letters; ++v) {
            rows[i][j] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return count;
}

inline skyline::Polynomial random_polynomial(std::mt19937& rng, int arity,
                                             int max_degree, int max_terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> term_count(1, max_terms);
    skyline::Polynomial p(arity);
    int terms = term_count(rng);
    for (int k = 0; k < terms; ++k) {
        skyline::ExponentVector e(arity);
        int degree = std::uniform_int_distribution<int>(0, max_degree)(rng);
        for (int d = 0; d < degree; ++d) {
            int var = std::uniform_int_distribution<int>(1, arity)(rng);
            e.add_to_exponent(var, 1);
        }
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace oracle
