#ifndef EQUIHITCH_SESHADRI_HPP
#define EQUIHITCH_SESHADRI_HPP

#include <string>
#include <vector>

#include "equihitch/cover.hpp"
#include "equihitch/rational.hpp"
#include "equihitch/theta.hpp"

namespace equihitch {

// Parabolic structure at one marked point on the quotient curve: dimension
// jumps of the flag together with strictly increasing weights in [0,1).
struct ParabolicPoint {
    std::vector<Rational> weights;
    std::vector<int> flag_multiplicities;
};

struct ParabolicData {
    int rank = 1;
    long long degree = 0;
    std::vector<ParabolicPoint> points;
};

// Validates the invariants above (throws input_error); used by the operations
// and available to callers constructing data by hand.
void require_valid(const ParabolicData& p);

// Translation of an invariant-bundle type into parabolic data on the quotient
// curve: at each branch point the nonzero multiplicity at eigenvalue exponent
// l becomes a flag jump of weight (l mod e)/e, re-sorted by weight. The
// underlying degree d of the pushforward is supplied by the caller.
ParabolicData to_parabolic(const CoverData& cover, const GlobalType& g, long long d);

// deg_par = deg + sum over points and flag steps of weight * multiplicity.
Rational parabolic_degree(const ParabolicData& p);

// mu_par = deg_par / rank.
Rational parabolic_slope(const ParabolicData& p);

enum class SlopeComparison { StableOk, SemistableOk, Violation };

std::string to_string(SlopeComparison c);

// Compares the slope of a proper subbundle (with caller-supplied induced
// parabolic data) against the ambient bundle.
SlopeComparison semistable_against(const ParabolicData& bundle, const ParabolicData& sub);

} // namespace equihitch

#endif
