#include "skyline/classify.hpp"

#include <stdexcept>

namespace skyline {

const EntryClass& Classification::at(Cell c) const {
    auto it = cells_.find(c);
    if (it == cells_.end())
        throw std::out_of_range("cell is not classified (does not hold t or t+1)");
    return it->second;
}

int Classification::count_in_row(int row, int value, EntryKind kind,
                                 const Filling& f) const {
    int count = 0;
    for (const auto& [cell, cls] : cells_)
        if (cell.row == row && cls.kind == kind && f.entry(cell) == value) ++count;
    return count;
}

std::vector<int> Classification::free_columns_in_row(int row, int value,
                                                     const Filling& f) const {
    std::vector<int> cols;
    for (const auto& [cell, cls] : cells_)
        if (cell.row == row && cls.kind == EntryKind::Free && f.entry(cell) == value)
            cols.push_back(cell.col);
    return cols;  // map iteration is (row, col)-sorted, so already ascending
}

bool Classification::has_pseudo_free() const {
    for (const auto& [cell, cls] : cells_)
        if (cls.kind == EntryKind::PseudoFree) return true;
    return false;
}

namespace {

struct ValueCells {
    // col -> cell, for cells holding t (low) and t+1 (high). Column
    // distinctness of a valid filling means at most one of each per column.
    std::map<int, Cell> low, high;
};

ValueCells locate(const Filling& f, int t) {
    ValueCells vc;
    const Composition& shape = f.shape();
    for (int i = 1; i <= shape.num_rows(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) {
            int v = f.at(i, j);
            if (v == t)
                vc.low.emplace(j, Cell{i, j});
            else if (v == t + 1)
                vc.high.emplace(j, Cell{i, j});
        }
    return vc;
}

void require_semistandard(const Filling& f, int t) {
    if (t < 1) throw std::invalid_argument("entry value t must be >= 1");
    if (!validate_filling(f).ok)
        throw std::invalid_argument("filling is not semistandard");
}

}  // namespace

Classification classify(const Filling& f, int t) {
    require_semistandard(f, t);
    ValueCells vc = locate(f, t);
    std::map<Cell, EntryClass> cls;

    std::vector<Cell> unpaired_low, unpaired_high;
    for (const auto& [col, cell] : vc.low) {
        if (vc.high.count(col))
            cls[cell] = {EntryKind::Paired, std::nullopt};
        else
            unpaired_low.push_back(cell);
    }
    for (const auto& [col, cell] : vc.high) {
        if (vc.low.count(col))
            cls[cell] = {EntryKind::Paired, std::nullopt};
        else
            unpaired_high.push_back(cell);
    }

    for (Cell low : unpaired_low) {
        std::optional<Cell> partner;
        for (Cell high : unpaired_high) {
            if (!(high.row < low.row && high.col > low.col)) continue;
            bool between_full = true;
            for (int k = low.col + 1; k < high.col; ++k)
                if (!vc.low.count(k) || !vc.high.count(k)) {
                    between_full = false;
                    break;
                }
            if (!between_full) continue;
            if (partner)
                throw std::logic_error("pseudo-free partner is not unique");
            partner = high;
        }
        if (partner) {
            if (cls.count(*partner))
                throw std::logic_error("pseudo-free partner claimed twice");
            cls[low] = {EntryKind::PseudoFree, partner};
            cls[*partner] = {EntryKind::PseudoFree, low};
        }
    }

    for (Cell c : unpaired_low)
        if (!cls.count(c)) cls[c] = {EntryKind::Free, std::nullopt};
    for (Cell c : unpaired_high)
        if (!cls.count(c)) cls[c] = {EntryKind::Free, std::nullopt};

    return Classification(t, std::move(cls));
}

Classification classify_fast(const Filling& f, int t) {
    require_semistandard(f, t);
    ValueCells vc = locate(f, t);
    std::map<Cell, EntryClass> cls;

    std::vector<Cell> unpaired_low, unpaired_high;
    for (const auto& [col, cell] : vc.low) {
        if (vc.high.count(col))
            cls[cell] = {EntryKind::Paired, std::nullopt};
        else
            unpaired_low.push_back(cell);
    }
    for (const auto& [col, cell] : vc.high) {
        if (vc.low.count(col))
            cls[cell] = {EntryKind::Paired, std::nullopt};
        else
            unpaired_high.push_back(cell);
    }

    for (Cell low : unpaired_low) {
        auto next = vc.high.find(low.col + 1);
        if (next == vc.high.end() || next->second.row >= low.row) continue;
        const int partner_row = next->second.row;
        int k = low.col + 1;
        // Walk right while the column still contains a t; the value t+1 must
        // keep reappearing in the partner row (guaranteed for semistandard
        // fillings).
        while (vc.low.count(k)) {
            ++k;
            auto it = vc.high.find(k);
            if (it == vc.high.end() || it->second.row != partner_row)
                throw std::logic_error("pseudo-free walk left the partner row");
        }
        Cell partner{partner_row, k};
        cls[low] = {EntryKind::PseudoFree, partner};
        cls[partner] = {EntryKind::PseudoFree, low};
    }

    for (Cell c : unpaired_low)
        if (!cls.count(c)) cls[c] = {EntryKind::Free, std::nullopt};
    for (Cell c : unpaired_high)
        if (!cls.count(c)) cls[c] = {EntryKind::Free, std::nullopt};

    return Classification(t, std::move(cls));
}

}  // namespace skyline
