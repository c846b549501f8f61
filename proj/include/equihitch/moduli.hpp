#ifndef EQUIHITCH_MODULI_HPP
#define EQUIHITCH_MODULI_HPP

#include <vector>

#include "equihitch/cover.hpp"
#include "equihitch/rational.hpp"
#include "equihitch/theta.hpp"

namespace equihitch {

// dim U = r^2(g_Y-1) + 1 + sum over branch points of (r^2 - sum_l k_l^2)/2.
// Each correction is a nonnegative integer (r^2 - sum k^2 is even), but it is
// carried as an exact rational and the total is asserted integral rather than
// rounded.
struct DimensionBreakdown {
    long long total = 0;
    long long base_term = 0;                       // r^2(g_Y-1) + 1
    std::vector<Rational> per_branch_corrections;  // one per branch point
};

DimensionBreakdown moduli_dimension(const CoverData& cover, const GlobalType& g);

// Cross-check form on the top curve: r^2/n (g_X-1) + 1 + (1/2n) sum over the
// ramification points p (n/e_q identical terms per branch point) of
// (r^2 - e_q sum_l k_l^2). Always equals moduli_dimension(...).total.
long long moduli_dimension_form_a(const CoverData& cover, const GlobalType& g);

} // namespace equihitch

#endif
