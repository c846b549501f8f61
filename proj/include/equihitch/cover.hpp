#ifndef EQUIHITCH_COVER_HPP
#define EQUIHITCH_COVER_HPP

#include <string>
#include <vector>

#include "equihitch/errors.hpp"

namespace equihitch {

// One branch point of the cover, described only by the ramification index e_q
// (the order of the cyclic isotropy group of any point above it). Each branch
// point carries n/e_q points upstairs, each with multiplicity e_q - 1 in the
// ramification divisor.
struct BranchPoint {
    int ram_index = 2;
};

// Combinatorial data of a Galois cover X -> Y with group of order n:
// base genus g_Y, n, and the list of branch points. Positions are irrelevant
// to every invariant computed here, so branch points are anonymous.
struct CoverData {
    int genus_base = 2;              // g_Y, must be >= 2
    int group_order = 1;             // n = |Gamma|
    std::vector<BranchPoint> branch_points;
};

// Returns every invariant violation as a human-readable message; empty means
// the cover is valid and genus_total() is a well-defined integer >= 2.
std::vector<std::string> validate(const CoverData& cover);

// Throws input_error listing all violations when the cover is invalid.
void require_valid(const CoverData& cover);

// deg R = sum over branch points of (n/e_q)(e_q - 1).
long long ramification_degree(const CoverData& cover);

// g_X from the Hurwitz formula 2(g_X - 1) = 2n(g_Y - 1) + deg R.
long long genus_total(const CoverData& cover);

} // namespace equihitch

#endif
