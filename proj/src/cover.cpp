#include "equihitch/cover.hpp"

namespace equihitch {

std::vector<std::string> validate(const CoverData& cover) {
    std::vector<std::string> violations;
    if (cover.genus_base < 2)
        violations.push_back("genus_base=" + std::to_string(cover.genus_base) + " must be >= 2");
    if (cover.group_order < 1)
        violations.push_back("group_order=" + std::to_string(cover.group_order) + " must be >= 1");

    bool divisibility_ok = cover.group_order >= 1;
    for (const BranchPoint& bp : cover.branch_points) {
        if (bp.ram_index < 2) {
            violations.push_back("e=" + std::to_string(bp.ram_index) + " must be >= 2");
            divisibility_ok = false;
        } else if (cover.group_order >= 1 && cover.group_order % bp.ram_index != 0) {
            violations.push_back("e=" + std::to_string(bp.ram_index) + " does not divide n=" +
                                 std::to_string(cover.group_order));
            divisibility_ok = false;
        }
    }

    // Hurwitz parity is only meaningful once every n/e_q is an integer.
    if (divisibility_ok) {
        long long m = 0;
        for (const BranchPoint& bp : cover.branch_points)
            m += static_cast<long long>(cover.group_order / bp.ram_index) * (bp.ram_index - 1);
        if (m % 2 != 0) violations.push_back("Hurwitz genus non-integral");
    }
    return violations;
}

void require_valid(const CoverData& cover) {
    std::vector<std::string> violations = validate(cover);
    if (violations.empty()) return;
    std::string msg = "invalid cover:";
    for (const std::string& v : violations) msg += " [" + v + "]";
    throw input_error(msg);
}

long long ramification_degree(const CoverData& cover) {
    require_valid(cover);
    long long m = 0;
    for (const BranchPoint& bp : cover.branch_points)
        m += static_cast<long long>(cover.group_order / bp.ram_index) * (bp.ram_index - 1);
    return m;
}

long long genus_total(const CoverData& cover) {
    long long m = ramification_degree(cover);
    // validate() already rejected odd 2n(g_Y-1)+m, so m is even here.
    return static_cast<long long>(cover.group_order) * (cover.genus_base - 1) + m / 2 + 1;
}

} // namespace equihitch
