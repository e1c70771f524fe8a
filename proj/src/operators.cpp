#include "skyline/operators.hpp"

#include <stdexcept>

namespace skyline {

namespace {

// Row of the unique entry equal to `value` in column `col` strictly below
// `row`, or 0 if there is none.
int value_below(const Filling& f, int row, int col, int value) {
    const Composition& shape = f.shape();
    for (int i = row + 1; i <= shape.num_rows(); ++i)
        if (shape.has_cell(i, col) && f.at(i, col) == value) return i;
    return 0;
}

void check_result(const Filling& f, const char* op) {
    if (!validate_filling(f).ok)
        throw std::logic_error(std::string(op) + " produced a non-semistandard filling");
}

// Shared body of lower and raise. The two moves are mirror images: lower
// rewrites the rightmost free t+1 as t and drags the swap run leftward, raise
// rewrites the leftmost free t as t+1. `from` is the value being replaced in
// `row`, `to` the value written there; the run consists of columns left of
// the pivot whose row entry is `from` and whose column holds `to` below
// `row`.
Filling apply_move(const Filling& f, int row, int t, bool lowering) {
    const int from = lowering ? t + 1 : t;
    const int to = lowering ? t : t + 1;

    Classification cls = classify(f, t);  // also rejects invalid fillings
    std::vector<int> free_cols = cls.free_columns_in_row(row, from, f);
    if (free_cols.empty()) return f;

    const int pivot = lowering ? free_cols.back() : free_cols.front();

    std::vector<std::vector<int>> rows = f.rows();
    rows[row - 1][pivot - 1] = to;
    for (int k = pivot - 1; k >= 1; --k) {
        if (f.at(row, k) != from) break;
        int below = value_below(f, row, k, to);
        if (below == 0) break;
        rows[row - 1][k - 1] = to;
        rows[below - 1][k - 1] = from;
    }

    Filling result(f.shape(), std::move(rows));
    check_result(result, lowering ? "lowering" : "raising");
    return result;
}

}  // namespace

Filling lower(const Filling& f, int row, int value) {
    if (value < 1 || row < value || row > f.shape().num_rows())
        throw std::invalid_argument("lower requires 1 <= value <= row <= n");
    return apply_move(f, row, value, /*lowering=*/true);
}

Filling raise(const Filling& f, int row, int value) {
    if (value < 1 || row < value + 1 || row > f.shape().num_rows())
        throw std::invalid_argument("raise requires 1 <= value, value+1 <= row <= n");
    return apply_move(f, row, value, /*lowering=*/false);
}

namespace {

std::pair<int, int> free_counts(const Filling& f, int row, int value) {
    Classification cls = classify(f, value);
    return {cls.count_in_row(row, value + 1, EntryKind::Free, f),
            cls.count_in_row(row, value, EntryKind::Free, f)};
}

}  // namespace

std::vector<Filling> phi_with_trace(const Filling& f, int row, int value) {
    if (value < 1 || row < value + 1 || row > f.shape().num_rows())
        throw std::invalid_argument("phi requires 1 <= value, value+1 <= row <= n");

    auto [n1, n2] = free_counts(f, row, value);
    std::vector<Filling> steps{f};
    const bool lowering = n1 > n2;
    int remaining = lowering ? n1 - n2 : n2 - n1;

    while (remaining-- > 0) {
        const Filling& cur = steps.back();
        auto [c1, c2] = free_counts(cur, row, value);
        Filling next = lowering ? lower(cur, row, value) : raise(cur, row, value);
        auto [d1, d2] = free_counts(next, row, value);
        // Each step must consume exactly one free entry of the moved value
        // and produce one of the other.
        int shift = lowering ? -1 : 1;
        if (d1 != c1 + shift || d2 != c2 - shift)
            throw std::logic_error("operator step did not shift the free counts by one");
        steps.push_back(std::move(next));
    }
    return steps;
}

Filling phi(const Filling& f, int row, int value) {
    return phi_with_trace(f, row, value).back();
}

Filling phi_row(const Filling& f, int row) {
    const int n = f.shape().num_rows();
    if (row < 1 || row >= n)
        throw std::invalid_argument("phi_row requires 1 <= row < n");
    Filling cur = f;
    for (int i = row + 1; i <= n; ++i) cur = phi(cur, i, row);
    return cur;
}

}  // namespace skyline
