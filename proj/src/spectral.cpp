#include "equihitch/spectral.hpp"

#include <algorithm>

#include "equihitch/rational.hpp"

namespace equihitch {

std::string to_string(SmoothCondition c) {
    switch (c) {
        case SmoothCondition::A0: return "A0";
        case SmoothCondition::A1: return "A1";
        case SmoothCondition::B: return "B";
    }
    return "?";
}

std::string to_string(ShapeClass s) {
    switch (s) {
        case ShapeClass::RectFull: return "RECT_FULL";
        case ShapeClass::RectMinusOne: return "RECT_MINUS_ONE";
        case ShapeClass::RectPlusOne: return "RECT_PLUS_ONE";
        case ShapeClass::NonSmooth: return "NON_SMOOTH";
    }
    return "?";
}

namespace {

std::set<SmoothCondition> point_conditions(const LocalType& t) {
    std::set<SmoothCondition> conds;
    const int r = t.rank();
    const long long e = t.ram_index();
    const long long top = r - e * delta(t, r);
    if (top == 0) conds.insert(SmoothCondition::A0);
    if (top == -1) conds.insert(SmoothCondition::A1);
    if (r >= 2 && r - 1 - e * delta(t, r - 1) == 0) conds.insert(SmoothCondition::B);
    return conds;
}

} // namespace

SmoothnessVerdict smoothness(const CoverData& cover, const GlobalType& g) {
    require_valid(cover);
    require_compatible(cover, g);

    SmoothnessVerdict verdict;
    if (g.rank() == 1) {  // line-bundle case: spectral curve is X itself
        verdict.per_point.assign(g.size(), {});
        verdict.smooth = true;
        return verdict;
    }
    verdict.smooth = true;
    for (const LocalType& t : g.local_types()) {
        std::set<SmoothCondition> conds = point_conditions(t);
        if (conds.empty()) verdict.smooth = false;
        verdict.per_point.push_back(std::move(conds));
    }
    return verdict;
}

std::set<ShapeClass> shape_class(const LocalType& t) {
    const int r = t.rank();
    if (r < 2) throw input_error("shape classification requires r >= 2");
    const int e = t.ram_index();
    const YoungDiagram yd(t);
    const std::vector<int>& parts = yd.parts();
    const int f = yd.rows();

    std::set<ShapeClass> shapes;

    if (f == e && r % e == 0 &&
        std::all_of(parts.begin(), parts.end(), [&](int p) { return p == r / e; }))
        shapes.insert(ShapeClass::RectFull);

    if ((r + 1) % e == 0) {
        const int c = (r + 1) / e;
        if (c == 1) {
            // Degenerate e x 1 rectangle minus a cell: a single column of e-1 ones.
            if (f == e - 1 && std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; }))
                shapes.insert(ShapeClass::RectMinusOne);
        } else if (f == e && parts.back() == c - 1 &&
                   std::all_of(parts.begin(), parts.end() - 1, [&](int p) { return p == c; })) {
            shapes.insert(ShapeClass::RectMinusOne);
        }
    }

    if ((r - 1) % e == 0) {
        const int c = (r - 1) / e;
        if (c >= 1 && f == e && parts.front() == c + 1 &&
            std::all_of(parts.begin() + 1, parts.end(), [&](int p) { return p == c; }))
            shapes.insert(ShapeClass::RectPlusOne);
    }

    if (shapes.empty()) shapes.insert(ShapeClass::NonSmooth);
    return shapes;
}

long long spectral_genus(const CoverData& cover, int r) {
    if (r < 1) throw input_error("spectral genus requires r >= 1");
    const long long gx = genus_total(cover);
    return static_cast<long long>(r) * r * (gx - 1) + 1;
}

long long spectral_line_degree(const CoverData& cover, int r, long long d) {
    if (r < 1) throw input_error("spectral line degree requires r >= 1");
    const long long gx = genus_total(cover);
    return d + static_cast<long long>(r) * (r - 1) * (gx - 1);
}

namespace {

// Rank-1 indicator type at exponent j (1-based) of length e.
LocalType indicator_type(int e, int j) {
    std::vector<int> v(static_cast<std::size_t>(e), 0);
    v[static_cast<std::size_t>(j - 1)] = 1;
    return LocalType(std::move(v));
}

// Exponent of the eigenvalue with the unique largest multiplicity (case B and
// the degenerate r=1 case); positions are taken in the raw, unshifted type.
int heavy_exponent(const LocalType& t) {
    const std::vector<int>& k = t.multiplicities();
    const int j = static_cast<int>(std::max_element(k.begin(), k.end()) - k.begin()) + 1;
    return j;
}

} // namespace

InducedType induced_type(const CoverData& cover, const GlobalType& g) {
    require_valid(cover);
    require_compatible(cover, g);
    const SmoothnessVerdict verdict = smoothness(cover, g);
    if (!verdict.smooth) throw input_error("induced type is only defined for smooth types");

    InducedType induced;
    for (std::size_t q = 0; q < g.size(); ++q) {
        const LocalType& t = g.at(q);
        const int e = t.ram_index();
        std::vector<InducedCandidate> candidates;
        if (g.rank() == 1) {
            // X_s = X and the line bundle is the original one; the single point
            // above q keeps the type itself (the degenerate case-B reading).
            candidates.push_back(InducedCandidate{SmoothCondition::B, t});
        } else {
            const std::set<SmoothCondition>& conds = verdict.per_point[q];
            if (conds.count(SmoothCondition::A0))
                candidates.push_back(InducedCandidate{SmoothCondition::A0, std::nullopt});
            if (conds.count(SmoothCondition::A1))
                candidates.push_back(InducedCandidate{SmoothCondition::A1, indicator_type(e, 1)});
            if (conds.count(SmoothCondition::B))
                candidates.push_back(
                    InducedCandidate{SmoothCondition::B, indicator_type(e, heavy_exponent(t))});
        }
        induced.per_point.push_back(std::move(candidates));
    }
    return induced;
}

long long quotient_spectral_genus(const CoverData& cover, const GlobalType& g) {
    require_valid(cover);
    require_compatible(cover, g);
    const SmoothnessVerdict verdict = smoothness(cover, g);
    if (!verdict.smooth)
        throw input_error("quotient spectral genus is only defined for smooth types");

    const long long r = g.rank();
    Rational total = Rational(r * r * (cover.genus_base - 1) + 1);
    for (std::size_t q = 0; q < g.size(); ++q) {
        const long long e = cover.branch_points[q].ram_index;
        // A0 points contribute r^2(e-1)/e, fixed-point cases (r^2-1)(e-1)/e;
        // for r = 1 the fixed-point formula applies and vanishes.
        const bool free_orbit = r >= 2 && verdict.per_point[q].count(SmoothCondition::A0) > 0;
        const long long numerator = free_orbit ? r * r : r * r - 1;
        total += Rational(numerator * (e - 1), 2 * e);
    }
    return total.to_integer();
}

} // namespace equihitch
