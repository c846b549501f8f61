#ifndef EQUIHITCH_HITCHIN_HPP
#define EQUIHITCH_HITCHIN_HPP

#include <utility>
#include <vector>

#include "equihitch/cover.hpp"
#include "equihitch/moduli.hpp"
#include "equihitch/theta.hpp"

namespace equihitch {

// The twist divisor D_i = sum over ramification points of (i - e_q delta_q(i)) p.
// coefficients[q] is the value at each of the n/e_q points above branch point q;
// all coefficients are <= 0.
struct TwistDivisor {
    int degree_index = 1;
    std::vector<long long> coefficients;
};

TwistDivisor twist_divisor(const CoverData& cover, const GlobalType& g, int i);

// dim of the degree-i component of the invariant Hitchin base, computed by
// Riemann-Roch on the base curve for K_Y^i twisted by sum (i - delta_q(i)) q:
// (2i-1)(g_Y-1) + sum_q (i - delta_q(i)) + (1 if i == 1).
long long hitchin_component_dim(const CoverData& cover, const GlobalType& g, int i);

// Per-degree dims and their total; the total always equals the moduli
// dimension (asserted, a mismatch throws internal_error).
struct HitchinBaseBreakdown {
    std::vector<std::pair<int, long long>> per_degree;  // (i, dim W_i)
    long long total = 0;
};

HitchinBaseBreakdown hitchin_base_dim(const CoverData& cover, const GlobalType& g);

} // namespace equihitch

#endif
