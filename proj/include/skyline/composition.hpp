#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace skyline {

// A composition: an ordered list of nonnegative row sizes. Row indices are
// 1-based throughout the library, matching the usual top-to-bottom drawing
// of skyline diagrams.
class Composition {
  public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("composition must have at least one part");
        for (int p : parts_)
            if (p < 0)
                throw std::invalid_argument("composition parts must be nonnegative");
    }

    int num_rows() const { return static_cast<int>(parts_.size()); }

    // 1-based row index.
    int part(int row) const {
        if (row < 1 || row > num_rows())
            throw std::out_of_range("row index out of range");
        return parts_[row - 1];
    }

    const std::vector<int>& parts() const { return parts_; }

    int box_count() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    bool has_cell(int row, int col) const {
        return row >= 1 && row <= num_rows() && col >= 1 && col <= parts_[row - 1];
    }

    bool is_partition() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i]) return false;
        return true;
    }

    // Composition with parts at rows `row` and `row`+1 interchanged.
    Composition with_swapped_parts(int row) const {
        if (row < 1 || row >= num_rows())
            throw std::out_of_range("swap index out of range");
        std::vector<int> p = parts_;
        std::swap(p[row - 1], p[row]);
        return Composition(std::move(p));
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

// A box position in a skyline diagram, 1-based in both coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing rearrangement of the parts.
Composition lambda_of(const Composition& alpha);

}  // namespace skyline
