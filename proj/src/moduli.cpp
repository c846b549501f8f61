#include "equihitch/moduli.hpp"

namespace equihitch {

namespace {

long long sum_of_squares(const LocalType& t) {
    long long s = 0;
    for (int k : t.multiplicities()) s += static_cast<long long>(k) * k;
    return s;
}

} // namespace

DimensionBreakdown moduli_dimension(const CoverData& cover, const GlobalType& g) {
    require_valid(cover);
    require_compatible(cover, g);

    const long long r = g.rank();
    DimensionBreakdown breakdown;
    breakdown.base_term = r * r * (cover.genus_base - 1) + 1;

    Rational total(breakdown.base_term);
    for (const LocalType& t : g.local_types()) {
        Rational correction(r * r - sum_of_squares(t), 2);
        if (correction < Rational(0) || !correction.is_integer())
            throw internal_error("branch correction " + correction.str() +
                                 " is not a nonnegative integer");
        breakdown.per_branch_corrections.push_back(correction);
        total += correction;
    }
    breakdown.total = total.to_integer();
    return breakdown;
}

long long moduli_dimension_form_a(const CoverData& cover, const GlobalType& g) {
    require_valid(cover);
    require_compatible(cover, g);

    const long long r = g.rank();
    const long long n = cover.group_order;
    Rational total = Rational(r * r, n) * Rational(genus_total(cover) - 1) + Rational(1);

    // Expand each branch point into its n/e_q identical ramification points.
    const Rational half_inv_order(1, 2 * n);
    for (std::size_t q = 0; q < g.size(); ++q) {
        const LocalType& t = g.at(q);
        const long long e = cover.branch_points[q].ram_index;
        const Rational point_term = half_inv_order * Rational(r * r - e * sum_of_squares(t));
        for (long long p = 0; p < n / e; ++p) total += point_term;
    }
    return total.to_integer();
}

} // namespace equihitch
