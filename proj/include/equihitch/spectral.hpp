#ifndef EQUIHITCH_SPECTRAL_HPP
#define EQUIHITCH_SPECTRAL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equihitch/cover.hpp"
#include "equihitch/theta.hpp"

namespace equihitch {

// The three per-point conditions under which a generic spectral curve is
// smooth: A0: r - e delta(r) = 0; A1: r - e delta(r) = -1;
// B: r - 1 - e delta(r-1) = 0.
enum class SmoothCondition { A0, A1, B };

std::string to_string(SmoothCondition c);

struct SmoothnessVerdict {
    std::vector<std::set<SmoothCondition>> per_point;
    bool smooth = false;  // every point satisfies at least one condition
};

// For r = 1 the spectral curve is the cover itself: smooth by convention,
// with empty condition sets.
SmoothnessVerdict smoothness(const CoverData& cover, const GlobalType& g);

// Structural classification of the Young diagram with e rows:
// RECT_FULL       e x (r/e) rectangle                  <=> condition A0
// RECT_MINUS_ONE  e x ((r+1)/e) rectangle minus a cell <=> condition A1
// RECT_PLUS_ONE   e x ((r-1)/e) rectangle plus a cell  <=> condition B
enum class ShapeClass { RectFull, RectMinusOne, RectPlusOne, NonSmooth };

std::string to_string(ShapeClass s);

// The set of shapes matched (several may overlap); {NonSmooth} when none do.
// Requires r >= 2.
std::set<ShapeClass> shape_class(const LocalType& t);

// Genus of the spectral curve: r^2(g_X - 1) + 1.
long long spectral_genus(const CoverData& cover, int r);

// Degree constant of the spectral line bundles: c = d + r(r-1)(g_X - 1),
// from deg of the pushforward of the spectral structure sheaf.
long long spectral_line_degree(const CoverData& cover, int r, long long d);

// Induced type of invariant line bundles on the spectral curve, per branch
// point. A point in case A0 has no fixed point upstairs; in cases A1/B the
// fixed point carries a rank-1 type. When both A1 and B hold (only possible
// for e = 2), both candidates are reported.
struct InducedCandidate {
    SmoothCondition via = SmoothCondition::A0;
    std::optional<LocalType> type;  // empty exactly in case A0
};

struct InducedType {
    std::vector<std::vector<InducedCandidate>> per_point;
};

// Requires a smooth global type.
InducedType induced_type(const CoverData& cover, const GlobalType& g);

// Genus of the quotient of the spectral curve by the group, which equals the
// dimension of the invariant Picard fiber: r^2(g_Y - 1) + 1 + (1/2) sum c(q),
// with c(q) = r^2(e-1)/e at A0 points and (r^2-1)(e-1)/e at A1/B points.
// Requires a smooth global type; the result is asserted integral.
long long quotient_spectral_genus(const CoverData& cover, const GlobalType& g);

} // namespace equihitch

#endif
