#include "equihitch/theta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace equihitch {

LocalType::LocalType(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    if (mult_.empty()) throw input_error("local type must have at least one entry");
    long long sum = 0;
    for (int k : mult_) {
        if (k < 0) throw input_error("local type entries must be nonnegative");
        sum += k;
    }
    if (sum == 0) throw input_error("local type must have positive rank");
    rank_ = static_cast<int>(sum);
}

int LocalType::nonzero_count() const {
    return static_cast<int>(std::count_if(mult_.begin(), mult_.end(), [](int k) { return k > 0; }));
}

int LocalType::multiplicity(int l) const {
    if (l < 1 || l > ram_index())
        throw input_error("eigenvalue exponent " + std::to_string(l) + " out of range 1.." +
                          std::to_string(ram_index()));
    return mult_[static_cast<std::size_t>(l - 1)];
}

std::vector<int> LocalType::nonzero_exponents() const {
    std::vector<int> ls;
    for (int l = 1; l <= ram_index(); ++l)
        if (mult_[static_cast<std::size_t>(l - 1)] > 0) ls.push_back(l);
    return ls;
}

YoungDiagram::YoungDiagram(const LocalType& t) {
    for (int k : t.multiplicities())
        if (k > 0) parts_.push_back(k);
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    cells_ = t.rank();
}

GlobalType::GlobalType(int rank, std::vector<LocalType> local_types)
    : rank_(rank), types_(std::move(local_types)) {
    if (rank_ < 1) throw input_error("global type rank must be >= 1");
    for (const LocalType& t : types_)
        if (t.rank() != rank_)
            throw input_error("local type rank " + std::to_string(t.rank()) +
                              " does not match global rank " + std::to_string(rank_));
}

void require_compatible(const CoverData& cover, const GlobalType& g) {
    if (g.size() != cover.branch_points.size())
        throw input_error("global type has " + std::to_string(g.size()) + " local types for " +
                          std::to_string(cover.branch_points.size()) + " branch points");
    for (std::size_t q = 0; q < g.size(); ++q)
        if (g.at(q).ram_index() != cover.branch_points[q].ram_index)
            throw input_error("local type at branch point " + std::to_string(q) +
                              " has length " + std::to_string(g.at(q).ram_index()) +
                              ", expected e=" + std::to_string(cover.branch_points[q].ram_index));
}

LocalType shift(const LocalType& t, int j) {
    const int e = t.ram_index();
    if (j < 0 || j >= e) throw input_error("shift amount must satisfy 0 <= j < e");
    const std::vector<int>& k = t.multiplicities();
    std::vector<int> out(static_cast<std::size_t>(e));
    // theta^j = (k_{e+1-j},...,k_e,k_1,...,k_{e-j}); 0-based: out[i] = k[(i-j) mod e].
    for (int i = 0; i < e; ++i)
        out[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(((i - j) % e + e) % e)];
    return LocalType(std::move(out));
}

int mu(const LocalType& t, int j) {
    if (j < 1) throw input_error("mu requires j >= 1");
    return static_cast<int>(
        std::count_if(t.multiplicities().begin(), t.multiplicities().end(),
                      [j](int k) { return k >= j; }));
}

int delta(const LocalType& t, int i) {
    if (i < 1 || i > t.rank())
        throw input_error("delta requires 1 <= i <= r, got i=" + std::to_string(i) +
                          " for r=" + std::to_string(t.rank()));
    long long cumulative = 0;
    for (int j = 1;; ++j) {
        cumulative += mu(t, j);
        if (cumulative >= i) return j;
    }
}

namespace {

std::vector<int> flatten(const GlobalType& g) {
    std::vector<int> flat;
    for (const LocalType& t : g.local_types())
        flat.insert(flat.end(), t.multiplicities().begin(), t.multiplicities().end());
    return flat;
}

GlobalType apply_global_shift(const GlobalType& g, long long j) {
    std::vector<LocalType> shifted;
    shifted.reserve(g.size());
    for (const LocalType& t : g.local_types())
        shifted.push_back(shift(t, static_cast<int>(j % t.ram_index())));
    return GlobalType(g.rank(), std::move(shifted));
}

long long shift_period(const GlobalType& g) {
    long long period = 1;
    for (const LocalType& t : g.local_types())
        period = std::lcm(period, static_cast<long long>(t.ram_index()));
    return period;
}

} // namespace

GlobalType canonical_form(const GlobalType& g) {
    const long long period = shift_period(g);
    GlobalType best = g;
    std::vector<int> best_flat = flatten(g);
    for (long long j = 1; j < period; ++j) {
        GlobalType cand = apply_global_shift(g, j);
        std::vector<int> flat = flatten(cand);
        if (flat < best_flat) {
            best = cand;
            best_flat = std::move(flat);
        }
    }
    return best;
}

std::vector<LocalType> enumerate_local_types(int r, int e) {
    if (r < 1) throw input_error("enumerate_local_types requires r >= 1");
    if (e < 2) throw input_error("enumerate_local_types requires e >= 2");
    std::vector<LocalType> out;
    std::vector<int> current(static_cast<std::size_t>(e), 0);
    // Compositions of r into e parts in increasing lexicographic order.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == e - 1) {
            current[static_cast<std::size_t>(pos)] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, r);
    return out;
}

long long count_global_tuples(const CoverData& cover, int r) {
    require_valid(cover);
    if (r < 1) throw input_error("enumeration requires rank >= 1");
    long long total = 1;
    for (const BranchPoint& bp : cover.branch_points) {
        // C(r+e-1, e-1), incrementally (each partial product is a binomial).
        long long c = 1;
        for (int k = 1; k <= bp.ram_index - 1; ++k) {
            if (__builtin_mul_overflow(c, r + k, &c)) throw input_error("tuple count overflow");
            c /= k;
        }
        if (__builtin_mul_overflow(total, c, &total)) throw input_error("tuple count overflow");
    }
    return total;
}

std::vector<GlobalClass> enumerate_global_classes_detailed(const CoverData& cover, int r) {
    require_valid(cover);
    if (r < 1) throw input_error("enumeration requires rank >= 1");

    std::vector<std::vector<LocalType>> per_point;
    per_point.reserve(cover.branch_points.size());
    for (const BranchPoint& bp : cover.branch_points)
        per_point.push_back(enumerate_local_types(r, bp.ram_index));

    std::map<std::vector<int>, std::pair<GlobalType, long long>> classes;
    std::vector<std::size_t> odometer(per_point.size(), 0);
    for (;;) {
        std::vector<LocalType> tuple;
        tuple.reserve(per_point.size());
        for (std::size_t q = 0; q < per_point.size(); ++q)
            tuple.push_back(per_point[q][odometer[q]]);
        GlobalType canon = canonical_form(GlobalType(r, std::move(tuple)));
        auto [it, inserted] = classes.try_emplace(flatten(canon), canon, 0);
        it->second.second += 1;

        // Advance; the empty-product case yields exactly one (empty) tuple.
        std::size_t pos = 0;
        while (pos < odometer.size()) {
            if (++odometer[pos] < per_point[pos].size()) break;
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) break;
    }

    std::vector<GlobalClass> out;
    out.reserve(classes.size());
    for (auto& [flat, rep_count] : classes)
        out.push_back(GlobalClass{rep_count.first, rep_count.second});
    return out;
}

std::vector<GlobalType> enumerate_global_classes(const CoverData& cover, int r) {
    std::vector<GlobalType> out;
    for (GlobalClass& c : enumerate_global_classes_detailed(cover, r))
        out.push_back(std::move(c.representative));
    return out;
}

} // namespace equihitch
