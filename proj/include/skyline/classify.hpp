#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skyline/filling.hpp"

namespace skyline {

// Classification of the cells holding t or t+1 in a semistandard filling:
//   Paired     — the cell's column contains both t and t+1;
//   PseudoFree — unpaired, but matched with an unpaired partner of the other
//                value: the t+1 sits strictly upper-right of the t and every
//                column strictly between them contains both values;
//   Free       — neither.
enum class EntryKind { Paired, PseudoFree, Free };

struct EntryClass {
    EntryKind kind = EntryKind::Free;
    std::optional<Cell> partner;  // set exactly when kind == PseudoFree
    friend bool operator==(const EntryClass&, const EntryClass&) = default;
};

class Classification {
  public:
    Classification(int low_value, std::map<Cell, EntryClass> cells)
        : low_value_(low_value), cells_(std::move(cells)) {}

    // The parameter t; the classification covers cells holding t or t+1.
    int low_value() const { return low_value_; }

    const std::map<Cell, EntryClass>& cells() const { return cells_; }

    const EntryClass& at(Cell c) const;

    int count_in_row(int row, int value, EntryKind kind, const Filling& f) const;

    // Columns of the free cells holding `value` in `row`, ascending.
    std::vector<int> free_columns_in_row(int row, int value, const Filling& f) const;

    bool has_pseudo_free() const;

    friend bool operator==(const Classification&, const Classification&) = default;

  private:
    int low_value_;
    std::map<Cell, EntryClass> cells_;
};

// Definition-based classification: pseudo-free partners are found by scanning
// candidate pairs and checking every intermediate column. Rejects fillings
// that are not semistandard.
Classification classify(const Filling& f, int t);

// Equivalent fast path: an unpaired t at (i,j) is pseudo-free iff some row
// i' < i has F(i',j+1) = t+1; its partner is reached by walking right in row
// i' while the column below still contains a t. Must agree with classify on
// every semistandard filling.
Classification classify_fast(const Filling& f, int t);

}  // namespace skyline
