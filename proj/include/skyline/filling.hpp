#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skyline/composition.hpp"
#include "skyline/monomial.hpp"

#include "json.hpp"

namespace skyline {

// A filling of the skyline diagram of its shape: positive integer entries,
// one per box, stored per row. Structural consistency (row count, row sizes,
// positive entries) is enforced at construction; the four semistandard
// conditions are checked separately by validate_filling.
class Filling {
  public:
    Filling(Composition shape, std::vector<std::vector<int>> rows);

    const Composition& shape() const { return shape_; }

    // 1-based coordinates.
    int at(int row, int col) const;
    int entry(Cell c) const { return at(c.row, c.col); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int row) const;

    // Row-major concatenation of the entries; the enumeration order key.
    std::vector<int> reading_word() const;

    friend bool operator==(const Filling&, const Filling&) = default;
    // Orders by shape, then by reading word; used for set membership tests.
    friend bool operator<(const Filling& a, const Filling& b) {
        if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
        return a.rows_ < b.rows_;
    }

  private:
    Composition shape_;
    std::vector<std::vector<int>> rows_;
};

// The filling F(i,j) = i; for a partition shape this is the unique
// semistandard filling.
Filling row_index_filling(const Composition& shape);

// The four semistandard conditions.
enum class SsfCondition {
    RowsWeaklyDecreasing,  // (i)
    FlagBound,             // (ii) entry <= row index
    ColumnDistinct,        // (iii)
    TripleRule,            // (iv)
};

struct Violation {
    SsfCondition condition;
    Cell a;                       // the witnessing cell (lower/right one)
    std::optional<Cell> b;        // second witness, when the condition pairs cells
    std::optional<Cell> c;        // for (iv): the right neighbor of b (absent if missing)
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;  // first violation found per condition
};

ValidationReport validate_filling(const Filling& f);

// Redundant invariant check: equal entries in consecutive columns never occur
// with the left one strictly below the right one. Holds for every valid
// semistandard filling.
bool check_non_attacking(const Filling& f);

// Exponent of x_v = number of boxes holding v. Entries must not exceed the
// number of rows.
ExponentVector weight(const Filling& f);

// All semistandard fillings of the shape, each exactly once, ordered by
// descending lexicographic reading word.
std::vector<Filling> enumerate_ssf(const Composition& alpha);

// Text format: one line per row, entries space-separated, empty rows "-".
std::string to_text(const Filling& f);
Filling filling_from_text(const std::string& text);

// JSON format: { "shape": [...], "rows": [[...], ...] }.
nlohmann::json to_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

}  // namespace skyline
