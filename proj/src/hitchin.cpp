#include "equihitch/hitchin.hpp"

#include <string>

namespace equihitch {

TwistDivisor twist_divisor(const CoverData& cover, const GlobalType& g, int i) {
    require_valid(cover);
    require_compatible(cover, g);
    if (i < 1 || i > g.rank())
        throw input_error("twist divisor index i=" + std::to_string(i) + " out of range 1..r");

    TwistDivisor d;
    d.degree_index = i;
    for (std::size_t q = 0; q < g.size(); ++q) {
        const long long e = cover.branch_points[q].ram_index;
        const long long coeff = i - e * delta(g.at(q), i);
        if (coeff > 0)
            throw internal_error("twist coefficient " + std::to_string(coeff) + " positive at i=" +
                                 std::to_string(i));
        d.coefficients.push_back(coeff);
    }
    return d;
}

long long hitchin_component_dim(const CoverData& cover, const GlobalType& g, int i) {
    require_valid(cover);
    require_compatible(cover, g);
    if (i < 1 || i > g.rank())
        throw input_error("Hitchin component index i=" + std::to_string(i) + " out of range 1..r");

    const long long gy = cover.genus_base;
    long long twist = 0;
    for (std::size_t q = 0; q < g.size(); ++q) twist += i - delta(g.at(q), i);

    // h^1 of K_Y^i(twist) vanishes for i >= 2: the degree exceeds 2g_Y - 2.
    // For i = 1 the twist is empty and h^1(K_Y) = 1.
    const long long degree_on_base = 2 * i * (gy - 1) + twist;
    if (i >= 2 && degree_on_base <= 2 * gy - 2)
        throw internal_error("h^1 vanishing fails at i=" + std::to_string(i));

    return (2 * i - 1) * (gy - 1) + twist + (i == 1 ? 1 : 0);
}

HitchinBaseBreakdown hitchin_base_dim(const CoverData& cover, const GlobalType& g) {
    HitchinBaseBreakdown breakdown;
    for (int i = 1; i <= g.rank(); ++i) {
        const long long dim = hitchin_component_dim(cover, g, i);
        breakdown.per_degree.emplace_back(i, dim);
        breakdown.total += dim;
    }
    const long long moduli = moduli_dimension(cover, g).total;
    if (breakdown.total != moduli)
        throw internal_error("Hitchin base dim " + std::to_string(breakdown.total) +
                             " != moduli dim " + std::to_string(moduli));
    return breakdown;
}

} // namespace equihitch
