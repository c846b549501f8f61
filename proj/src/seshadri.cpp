#include "equihitch/seshadri.hpp"

#include <algorithm>
#include <string>

namespace equihitch {

void require_valid(const ParabolicData& p) {
    if (p.rank < 1) throw input_error("parabolic rank must be >= 1");
    for (const ParabolicPoint& pt : p.points) {
        if (pt.weights.size() != pt.flag_multiplicities.size())
            throw input_error("weights and flag multiplicities differ in length");
        long long sum = 0;
        for (int k : pt.flag_multiplicities) {
            if (k < 1) throw input_error("flag multiplicities must be positive");
            sum += k;
        }
        if (sum != p.rank)
            throw input_error("flag multiplicities sum to " + std::to_string(sum) +
                              ", expected rank " + std::to_string(p.rank));
        for (std::size_t i = 0; i < pt.weights.size(); ++i) {
            if (pt.weights[i] < Rational(0) || pt.weights[i] >= Rational(1))
                throw input_error("parabolic weight " + pt.weights[i].str() + " outside [0,1)");
            if (i > 0 && !(pt.weights[i - 1] < pt.weights[i]))
                throw input_error("parabolic weights must be strictly increasing");
        }
    }
}

ParabolicData to_parabolic(const CoverData& cover, const GlobalType& g, long long d) {
    require_valid(cover);
    require_compatible(cover, g);

    ParabolicData data;
    data.rank = g.rank();
    data.degree = d;
    for (const LocalType& t : g.local_types()) {
        const int e = t.ram_index();
        std::vector<std::pair<Rational, int>> steps;  // (weight, multiplicity)
        for (int l : t.nonzero_exponents())
            steps.emplace_back(Rational(l % e, e), t.multiplicity(l));
        std::sort(steps.begin(), steps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        ParabolicPoint pt;
        for (auto& [w, k] : steps) {
            pt.weights.push_back(w);
            pt.flag_multiplicities.push_back(k);
        }
        data.points.push_back(std::move(pt));
    }
    require_valid(data);
    return data;
}

Rational parabolic_degree(const ParabolicData& p) {
    require_valid(p);
    Rational deg(p.degree);
    for (const ParabolicPoint& pt : p.points)
        for (std::size_t i = 0; i < pt.weights.size(); ++i)
            deg += pt.weights[i] * Rational(pt.flag_multiplicities[i]);
    return deg;
}

Rational parabolic_slope(const ParabolicData& p) {
    return parabolic_degree(p) / Rational(p.rank);
}

std::string to_string(SlopeComparison c) {
    switch (c) {
        case SlopeComparison::StableOk: return "STABLE_OK";
        case SlopeComparison::SemistableOk: return "SEMISTABLE_OK";
        case SlopeComparison::Violation: return "VIOLATION";
    }
    return "?";
}

SlopeComparison semistable_against(const ParabolicData& bundle, const ParabolicData& sub) {
    if (sub.rank >= bundle.rank)
        throw input_error("subbundle rank " + std::to_string(sub.rank) +
                          " must be smaller than bundle rank " + std::to_string(bundle.rank));
    const Rational mu_bundle = parabolic_slope(bundle);
    const Rational mu_sub = parabolic_slope(sub);
    if (mu_sub > mu_bundle) return SlopeComparison::Violation;
    if (mu_sub == mu_bundle) return SlopeComparison::SemistableOk;
    return SlopeComparison::StableOk;
}

} // namespace equihitch
