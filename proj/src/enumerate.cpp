#include "skyline/filling.hpp"

namespace skyline {

namespace {

// Backtracking over the boxes in row-major order. At box (r,c) a candidate
// value v is constrained by:
//   - the flag bound v <= r and the row bound v <= F(r,c-1),
//   - column-distinctness against the already-filled boxes above,
//   - the triple rule with v as the lower entry: for every b = F(i',c) above
//     with b > v there must be a box to the right of b holding an entry > v.
// Rows above are complete when (r,c) is reached, so all three checks are
// exact; a violation of any condition is always detected at its lowest or
// rightmost cell. Candidates are tried in decreasing order, which makes the
// output descend lexicographically by reading word.
struct Enumerator {
    const Composition& shape;
    std::vector<Cell> boxes;
    std::vector<std::vector<int>> rows;
    std::vector<Filling> out;

    explicit Enumerator(const Composition& a) : shape(a) {
        for (int i = 1; i <= shape.num_rows(); ++i) {
            rows.emplace_back(shape.part(i), 0);
            for (int j = 1; j <= shape.part(i); ++j) boxes.push_back({i, j});
        }
    }

    bool admissible(int r, int c, int v) const {
        for (int i = 1; i < r; ++i) {
            if (!shape.has_cell(i, c)) continue;
            int b = rows[i - 1][c - 1];
            if (b == v) return false;
            if (b > v) {
                if (!shape.has_cell(i, c + 1)) return false;
                if (rows[i - 1][c] <= v) return false;
            }
        }
        return true;
    }

    void run(std::size_t k) {
        if (k == boxes.size()) {
            Filling f(shape, rows);
            // Safety net: the pruning above is meant to be exact, so every
            // leaf must validate.
            if (validate_filling(f).ok) out.push_back(std::move(f));
            return;
        }
        auto [r, c] = boxes[k];
        int hi = c > 1 ? std::min(r, rows[r - 1][c - 2]) : r;
        for (int v = hi; v >= 1; --v) {
            if (!admissible(r, c, v)) continue;
            rows[r - 1][c - 1] = v;
            run(k + 1);
        }
        rows[r - 1][c - 1] = 0;
    }
};

}  // namespace

std::vector<Filling> enumerate_ssf(const Composition& alpha) {
    Enumerator e(alpha);
    e.run(0);
    return std::move(e.out);
}

}  // namespace skyline
