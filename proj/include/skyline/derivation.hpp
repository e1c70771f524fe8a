#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skyline/composition.hpp"
#include "skyline/filling.hpp"
#include "skyline/report.hpp"

namespace skyline {

// The row r with alpha_1 >= ... >= alpha_r < alpha_{r+1}, or nullopt for a
// partition.
std::optional<int> first_ascent(const Composition& alpha);

// The fillings F_0..F_m built from a filling of alpha-with-swapped-ascent:
// F_0 moves the trailing boxes of the ascent row down, F_k raises k times.
struct DerivedFamily {
    Filling source;             // in SSF(alpha'), alpha' = alpha with ascent parts swapped
    int ascent_row = 0;         // r
    std::vector<Filling> members;  // F_0..F_m, all in SSF(alpha)
};

// Requires alpha to have a first ascent r and source to be a semistandard
// filling of alpha with parts r, r+1 interchanged. m is the number of free
// entries r in row r of source.
DerivedFamily derived_fillings(const Filling& source, const Composition& alpha);

// Inverse of the derived-filling construction: recovers (source, k) with
// derived_fillings(source, alpha).members[k] == f. k is the number of free
// entries r+1 in row r+1 of f.
std::pair<Filling, int> inverse_derived(const Filling& f, const Composition& alpha);

// Builds SSF(alpha) from the partition base case by repeatedly expanding
// derived families along first ascents; result in canonical order. No
// deduplication is performed (the families partition the target set).
std::vector<Filling> generate_ssf_inductively(const Composition& alpha);

// Checks, for a composition with first ascent r and alpha' the swap:
//   (a) pi_r maps the weight sum over SSF(alpha') to the one over SSF(alpha);
//   (b) for every F': pi_r(x^F' + x^PhiF') equals the weight sum over the two
//       derived families (fixed points are checked in halved form as well);
//   (c) x^F' + x^PhiF' = x_r^m * f with f symmetric in x_r, x_{r+1}.
VerificationReport verify_pi_identity(const Composition& alpha);

// The classical move on one row: among the entries t, t+1 of the row, those
// whose column does not contain the other value form a contiguous block
// (t+1)^a t^b, which is rewritten as (t+1)^b t^a. Independent of the
// classification/operator machinery.
Filling bender_knuth_row_move(const Filling& f, int row, int value);

// For weakly increasing alpha: every filling has strictly increasing columns,
// no pseudo-free entries for `value`, and phi(., row, value) agrees with the
// classical row move.
VerificationReport bender_knuth_check(const Composition& alpha, int row, int value);

}  // namespace skyline
