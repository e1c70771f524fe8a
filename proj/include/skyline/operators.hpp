#pragma once

#include <vector>

#include "skyline/classify.hpp"
#include "skyline/filling.hpp"

namespace skyline {

// Lowering operator L_{row,value}: turns the rightmost free entry value+1 in
// `row` into value, after swapping value/value+1 down every column of the
// maximal run of value+1 entries immediately to its left that have a value
// below `row`. Identity when `row` has no free value+1. Requires
// value <= row <= n; the result is again semistandard.
Filling lower(const Filling& f, int row, int value);

// Raising operator R_{row,value}: the mirror move on the leftmost free entry
// value in `row`. Requires value+1 <= row <= n.
Filling raise(const Filling& f, int row, int value);

// The involution: applies lower or raise enough times to exchange the counts
// of free value+1 and free value entries in `row`. Requires value+1 <= row.
Filling phi(const Filling& f, int row, int value);

// Same as phi, but records every filling along the way (the input first, the
// final image last). A phi that acts as the identity yields a single entry.
std::vector<Filling> phi_with_trace(const Filling& f, int row, int value);

// Row involution: the composite of phi(., i, row) over every row i below
// `row` (i = row+1..n, ascending; the factors commute). Requires row < n.
Filling phi_row(const Filling& f, int row);

}  // namespace skyline
