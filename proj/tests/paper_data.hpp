// Frozen fillings for the worked examples used across the test suites.
#pragma once

#include <vector>

#include "skyline/filling.hpp"

namespace testdata {

using skyline::Composition;
using skyline::Filling;

inline Filling make(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Filling(Composition(std::move(parts)), std::move(rows));
}

// The 13 semistandard fillings of (1,3,0,2), as drawn.
inline std::vector<Filling> figure4_fillings() {
    return {
        make({{1}, {2, 2, 2}, {}, {4, 4}}),
        make({{1}, {2, 2, 1}, {}, {4, 4}}),
        make({{1}, {2, 1, 1}, {}, {4, 4}}),
        make({{1}, {2, 2, 2}, {}, {4, 3}}),
        make({{1}, {2, 2, 2}, {}, {3, 3}}),
        make({{1}, {2, 2, 1}, {}, {4, 3}}),
        make({{1}, {2, 2, 1}, {}, {3, 3}}),
        make({{1}, {2, 1, 1}, {}, {4, 3}}),
        make({{1}, {2, 1, 1}, {}, {4, 2}}),
        make({{1}, {2, 1, 1}, {}, {3, 3}}),
        make({{1}, {2, 1, 1}, {}, {3, 2}}),
        make({{1}, {2, 2, 2}, {}, {4, 1}}),
        make({{1}, {2, 2, 2}, {}, {3, 1}}),
    };
}

// The classification example: shape (4,1,0,11,8,10,3,6), entries t=2, t+1=3.
inline Filling figure5_filling() {
    return make({
        {1, 1, 1, 1},
        {2},
        {},
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3},
        {5, 5, 3, 3, 3, 3, 3, 2},
        {6, 6, 5, 5, 5, 5, 5, 5, 2, 2},
        {7, 2, 2},
        {8, 8, 7, 7, 6, 2},
    });
}

// The involution example with r = 3, t = 1 on shape (0,0,8,7,2,5): the
// starting filling, the image of one lowering step, and the final image.
inline Filling figure7_left() {
    return make({
        {},
        {},
        {3, 2, 2, 2, 2, 2, 2, 2},
        {4, 4, 4, 4, 1, 1, 1},
        {1, 1},
        {6, 6, 5, 5, 5},
    });
}

inline Filling figure7_middle() {
    return make({
        {},
        {},
        {3, 2, 2, 2, 1, 1, 1, 1},
        {4, 4, 4, 4, 2, 2, 2},
        {1, 1},
        {6, 6, 5, 5, 5},
    });
}

inline Filling figure7_right() {
    return make({
        {},
        {},
        {3, 2, 2, 1, 1, 1, 1, 1},
        {4, 4, 4, 4, 2, 2, 2},
        {1, 1},
        {6, 6, 5, 5, 5},
    });
}

// The derived-filling example: alpha = (4,2,6,0,4), first ascent r = 2,
// source in SSF((4,6,2,0,4)) with m = 2, and the members F_0, F_1, F_2.
inline Composition figure8_alpha() { return Composition({4, 2, 6, 0, 4}); }

inline Filling figure8_source() {
    return make({
        {1, 1, 1, 1},
        {2, 2, 2, 2, 2, 1},
        {3, 3},
        {},
        {5, 4, 4, 3},
    });
}

inline std::vector<Filling> figure8_members() {
    return {
        make({{1, 1, 1, 1}, {2, 2}, {3, 3, 2, 2, 2, 1}, {}, {5, 4, 4, 3}}),
        make({{1, 1, 1, 1}, {2, 2}, {3, 3, 3, 2, 2, 1}, {}, {5, 4, 4, 3}}),
        make({{1, 1, 1, 1}, {2, 2}, {3, 3, 3, 3, 3, 1}, {}, {5, 4, 4, 2}}),
    };
}

}  // namespace testdata
