#pragma once

#include <vector>

#include "skyline/composition.hpp"
#include "skyline/report.hpp"

namespace skyline {

// Every composition with 1 <= n <= max_n rows and parts in 0..max_part, in
// canonical order: by length, then lexicographically by parts.
std::vector<Composition> compositions_up_to(int max_n, int max_part);

// Runs the full per-composition battery: enumeration sanity, the key
// polynomial identity, operator closure/round trips, the involution and its
// commutativity, classification agreement, and (for non-partitions) the
// derived-filling partition and pi-compatibility checks. Weakly increasing
// compositions additionally get the classical row-move comparison.
VerificationReport verify_composition(const Composition& alpha);

}  // namespace skyline
