#include "skyline/filling.hpp"

#include <map>
#include <sstream>

namespace skyline {

Filling::Filling(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.num_rows())
        throw std::invalid_argument("filling row count does not match shape");
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        const auto& r = rows_[i - 1];
        if (static_cast<int>(r.size()) != shape_.part(i))
            throw std::invalid_argument("filling row length does not match shape");
        for (int v : r)
            if (v < 1) throw std::invalid_argument("filling entries must be positive");
    }
}

int Filling::at(int row, int col) const {
    if (!shape_.has_cell(row, col))
        throw std::out_of_range("cell outside the skyline diagram");
    return rows_[row - 1][col - 1];
}

const std::vector<int>& Filling::row(int row) const {
    if (row < 1 || row > shape_.num_rows())
        throw std::out_of_range("row index out of range");
    return rows_[row - 1];
}

std::vector<int> Filling::reading_word() const {
    std::vector<int> word;
    word.reserve(shape_.box_count());
    for (const auto& r : rows_) word.insert(word.end(), r.begin(), r.end());
    return word;
}

Filling row_index_filling(const Composition& shape) {
    std::vector<std::vector<int>> rows(shape.num_rows());
    for (int i = 1; i <= shape.num_rows(); ++i)
        rows[i - 1].assign(shape.part(i), i);
    return Filling(shape, std::move(rows));
}

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

ValidationReport validate_filling(const Filling& f) {
    const Composition& shape = f.shape();
    const int n = shape.num_rows();
    ValidationReport report;
    bool seen[4] = {false, false, false, false};

    auto record = [&](SsfCondition cond, Violation v) {
        int idx = static_cast<int>(cond);
        if (seen[idx]) return;
        seen[idx] = true;
        report.ok = false;
        report.violations.push_back(std::move(v));
    };

    // (i) rows weakly decreasing
    for (int i = 1; i <= n && !seen[0]; ++i)
        for (int j = 1; j < shape.part(i); ++j)
            if (f.at(i, j) < f.at(i, j + 1)) {
                record(SsfCondition::RowsWeaklyDecreasing,
                       {SsfCondition::RowsWeaklyDecreasing, Cell{i, j + 1}, Cell{i, j},
                        std::nullopt,
                        "row " + std::to_string(i) + " increases at column " +
                            std::to_string(j)});
                break;
            }

    // (ii) entry <= row index
    for (int i = 1; i <= n && !seen[1]; ++i)
        for (int j = 1; j <= shape.part(i); ++j)
            if (f.at(i, j) > i) {
                record(SsfCondition::FlagBound,
                       {SsfCondition::FlagBound, Cell{i, j}, std::nullopt, std::nullopt,
                        "entry " + std::to_string(f.at(i, j)) + " exceeds row index at " +
                            cell_str({i, j})});
                break;
            }

    // (iii) column-distinct
    int max_cols = 0;
    for (int i = 1; i <= n; ++i) max_cols = std::max(max_cols, shape.part(i));
    for (int j = 1; j <= max_cols && !seen[2]; ++j) {
        std::map<int, int> first_row;  // value -> row where first seen
        for (int i = 1; i <= n; ++i) {
            if (!shape.has_cell(i, j)) continue;
            int v = f.at(i, j);
            auto [it, inserted] = first_row.emplace(v, i);
            if (!inserted) {
                record(SsfCondition::ColumnDistinct,
                       {SsfCondition::ColumnDistinct, Cell{i, j}, Cell{it->second, j},
                        std::nullopt,
                        "entry " + std::to_string(v) + " repeated in column " +
                            std::to_string(j)});
                break;
            }
        }
    }

    // (iv) a below b with a < b requires an entry c to the right of b with a < c
    for (int j = 1; j <= max_cols && !seen[3]; ++j) {
        for (int ia = 1; ia <= n && !seen[3]; ++ia) {
            if (!shape.has_cell(ia, j)) continue;
            int a = f.at(ia, j);
            for (int ib = 1; ib < ia; ++ib) {
                if (!shape.has_cell(ib, j)) continue;
                int b = f.at(ib, j);
                if (a >= b) continue;
                if (!shape.has_cell(ib, j + 1)) {
                    record(SsfCondition::TripleRule,
                           {SsfCondition::TripleRule, Cell{ia, j}, Cell{ib, j}, std::nullopt,
                            "no entry to the right of " + cell_str({ib, j})});
                    break;
                }
                if (f.at(ib, j + 1) <= a) {
                    record(SsfCondition::TripleRule,
                           {SsfCondition::TripleRule, Cell{ia, j}, Cell{ib, j},
                            Cell{ib, j + 1},
                            "entry at " + cell_str({ib, j + 1}) + " not larger than " +
                                std::to_string(a)});
                    break;
                }
            }
        }
    }

    return report;
}

bool check_non_attacking(const Filling& f) {
    const Composition& shape = f.shape();
    const int n = shape.num_rows();
    int max_cols = 0;
    for (int i = 1; i <= n; ++i) max_cols = std::max(max_cols, shape.part(i));
    for (int j = 1; j < max_cols; ++j)
        for (int i = 1; i <= n; ++i) {
            if (!shape.has_cell(i, j)) continue;
            for (int ip = 1; ip <= n; ++ip) {
                if (!shape.has_cell(ip, j + 1)) continue;
                if (f.at(i, j) == f.at(ip, j + 1) && i > ip) return false;
            }
        }
    return true;
}

ExponentVector weight(const Filling& f) {
    const int n = f.shape().num_rows();
    ExponentVector w(n);
    for (const auto& row : f.rows())
        for (int v : row) {
            if (v > n)
                throw std::invalid_argument("entry exceeds the number of variables");
            w.add_to_exponent(v, 1);
        }
    return w;
}

std::string to_text(const Filling& f) {
    std::ostringstream out;
    const auto& rows = f.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << '\n';
        if (rows[i].empty()) {
            out << '-';
        } else {
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) out << ' ';
                out << rows[i][j];
            }
        }
    }
    return out.str();
}

Filling filling_from_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty())
            throw std::invalid_argument("blank line in filling text (use '-' for an empty row)");
        std::vector<int> row;
        if (tokens.size() == 1 && tokens[0] == "-") {
            // empty row
        } else {
            for (const auto& t : tokens) {
                std::size_t pos = 0;
                int v;
                try {
                    v = std::stoi(t, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad filling entry: " + t);
                }
                if (pos != t.size()) throw std::invalid_argument("bad filling entry: " + t);
                row.push_back(v);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty filling text");
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Filling(Composition(std::move(parts)), std::move(rows));
}

nlohmann::json to_json(const Filling& f) {
    return nlohmann::json{{"shape", f.shape().parts()}, {"rows", f.rows()}};
}

Filling filling_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
        throw std::invalid_argument("filling JSON must have \"shape\" and \"rows\"");
    auto parts = j.at("shape").get<std::vector<int>>();
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    return Filling(Composition(std::move(parts)), std::move(rows));
}

}  // namespace skyline
