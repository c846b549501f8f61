#include "equihitch/higgs_local.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace equihitch {

TruncatedPoly::TruncatedPoly(int truncation_order) {
    if (truncation_order < 1) throw input_error("truncation order must be >= 1");
    coeff_.assign(static_cast<std::size_t>(truncation_order), Rational(0));
}

const Rational& TruncatedPoly::coefficient(int exponent) const {
    if (exponent < 0 || exponent >= truncation_order())
        throw input_error("exponent " + std::to_string(exponent) + " outside truncation window");
    return coeff_[static_cast<std::size_t>(exponent)];
}

void TruncatedPoly::set_coefficient(int exponent, const Rational& value) {
    if (exponent < 0 || exponent >= truncation_order())
        throw input_error("exponent " + std::to_string(exponent) + " outside truncation window");
    coeff_[static_cast<std::size_t>(exponent)] = value;
}

std::optional<int> TruncatedPoly::valuation() const {
    for (int k = 0; k < truncation_order(); ++k)
        if (!coeff_[static_cast<std::size_t>(k)].is_zero()) return k;
    return std::nullopt;
}

namespace {

int common_order(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.truncation_order() != b.truncation_order())
        throw input_error("truncation orders differ: " + std::to_string(a.truncation_order()) +
                          " vs " + std::to_string(b.truncation_order()));
    return a.truncation_order();
}

} // namespace

TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
    const int n = common_order(a, b);
    TruncatedPoly out(n);
    for (int k = 0; k < n; ++k) out.set_coefficient(k, a.coefficient(k) + b.coefficient(k));
    return out;
}

TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) {
    const int n = common_order(a, b);
    TruncatedPoly out(n);
    for (int k = 0; k < n; ++k) out.set_coefficient(k, a.coefficient(k) - b.coefficient(k));
    return out;
}

TruncatedPoly TruncatedPoly::operator-() const {
    TruncatedPoly out(truncation_order());
    for (int k = 0; k < truncation_order(); ++k) out.set_coefficient(k, -coefficient(k));
    return out;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    const int n = common_order(a, b);
    TruncatedPoly out(n);
    for (int i = 0; i < n; ++i) {
        if (a.coefficient(i).is_zero()) continue;
        for (int j = 0; j + i < n; ++j) {
            if (b.coefficient(j).is_zero()) continue;
            out.set_coefficient(i + j, out.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
    }
    return out;
}

std::vector<std::vector<int>> block_valuation_pattern(const LocalType& t) {
    const int e = t.ram_index();
    const std::vector<int> ls = t.nonzero_exponents();
    const int f = static_cast<int>(ls.size());
    std::vector<std::vector<int>> pattern(static_cast<std::size_t>(f),
                                          std::vector<int>(static_cast<std::size_t>(f), 0));
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j)
            pattern[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((ls[static_cast<std::size_t>(j)] - ls[static_cast<std::size_t>(i)] - 1) % e + e) % e;
    return pattern;
}

EquivariantMatrix::EquivariantMatrix(LocalType type, int truncation_order,
                                     std::vector<std::vector<TruncatedPoly>> entries)
    : type_(std::move(type)), truncation_(truncation_order), entries_(std::move(entries)) {
    const int r = type_.rank();
    if (truncation_ < 1) throw input_error("truncation order must be >= 1");
    if (static_cast<int>(entries_.size()) != r)
        throw input_error("matrix must be " + std::to_string(r) + "x" + std::to_string(r));
    for (const auto& row : entries_) {
        if (static_cast<int>(row.size()) != r)
            throw input_error("matrix must be " + std::to_string(r) + "x" + std::to_string(r));
        for (const TruncatedPoly& p : row)
            if (p.truncation_order() != truncation_)
                throw input_error("entry truncation order mismatch");
    }

    const std::vector<int> ls = type_.nonzero_exponents();
    for (std::size_t b = 0; b < ls.size(); ++b)
        for (int c = 0; c < type_.multiplicity(ls[b]); ++c)
            row_block_.push_back(static_cast<int>(b));

    if (!satisfies_support_condition(*this))
        throw input_error("matrix entries violate the equivariant support condition");
}

const TruncatedPoly& EquivariantMatrix::entry(int row, int col) const {
    if (row < 0 || row >= size() || col < 0 || col >= size())
        throw input_error("matrix index out of range");
    return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

int EquivariantMatrix::block_of(int index) const {
    if (index < 0 || index >= size()) throw input_error("matrix index out of range");
    return row_block_[static_cast<std::size_t>(index)];
}

bool satisfies_support_condition(const EquivariantMatrix& m) {
    const auto pattern = block_valuation_pattern(m.local_type());
    const int e = m.local_type().ram_index();
    for (int row = 0; row < m.size(); ++row) {
        for (int col = 0; col < m.size(); ++col) {
            const int allowed = pattern[static_cast<std::size_t>(m.block_of(row))]
                                       [static_cast<std::size_t>(m.block_of(col))];
            const TruncatedPoly& p = m.entry(row, col);
            for (int k = 0; k < p.truncation_order(); ++k)
                if (!p.coefficient(k).is_zero() && k % e != allowed) return false;
        }
    }
    return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Nonzero integer in [-9,9]; avoids std::uniform_int_distribution, whose
// output is implementation-defined.
long long draw_coefficient(std::uint64_t& state) {
    state = splitmix64(state);
    const long long v = static_cast<long long>(state % 18);  // 0..17
    return v < 9 ? v - 9 : v - 8;                            // -9..-1, 1..9
}

} // namespace

std::uint64_t derive_trial_seed(std::uint64_t seed, int trial_index) {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial_index + 1)));
}

EquivariantMatrix random_equivariant(const LocalType& t, int truncation_order, std::uint64_t seed) {
    if (truncation_order < 1) throw input_error("truncation order must be >= 1");
    const int r = t.rank();
    const int e = t.ram_index();
    const auto pattern = block_valuation_pattern(t);

    std::vector<int> row_block;
    const std::vector<int> ls = t.nonzero_exponents();
    for (std::size_t b = 0; b < ls.size(); ++b)
        for (int c = 0; c < t.multiplicity(ls[b]); ++c) row_block.push_back(static_cast<int>(b));

    std::uint64_t state = splitmix64(seed);
    std::vector<std::vector<TruncatedPoly>> entries(
        static_cast<std::size_t>(r),
        std::vector<TruncatedPoly>(static_cast<std::size_t>(r), TruncatedPoly(truncation_order)));
    for (int row = 0; row < r; ++row) {
        for (int col = 0; col < r; ++col) {
            const int allowed = pattern[static_cast<std::size_t>(row_block[static_cast<std::size_t>(row)])]
                                       [static_cast<std::size_t>(row_block[static_cast<std::size_t>(col)])];
            TruncatedPoly& p = entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            for (int k = allowed; k < truncation_order; k += e)
                p.set_coefficient(k, Rational(draw_coefficient(state)));
        }
    }
    return EquivariantMatrix(t, truncation_order, std::move(entries));
}

namespace {

// Determinant of the submatrix on rows `rows` and columns `cols` by cofactor
// expansion along the first row.
TruncatedPoly submatrix_det(const EquivariantMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.entry(rows[0], cols[0]);

    TruncatedPoly acc(m.truncation_order());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
        const TruncatedPoly& pivot = m.entry(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        sub_cols.clear();
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        TruncatedPoly term = pivot * submatrix_det(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

TruncatedPoly wedge_trace(const EquivariantMatrix& m, int i) {
    const int r = m.size();
    if (i < 1 || i > r)
        throw input_error("wedge index i=" + std::to_string(i) + " out of range 1..r");

    TruncatedPoly acc(m.truncation_order());
    // All subsets of {0..r-1} of size i, in increasing order.
    std::vector<int> subset(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) subset[static_cast<std::size_t>(k)] = k;
    for (;;) {
        acc = acc + submatrix_det(m, subset, subset);
        int pos = i - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == r - i + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int k = pos + 1; k < i; ++k)
            subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
    }
    return acc;
}

std::vector<CharPolyValuation> char_poly_valuations(const EquivariantMatrix& m) {
    std::vector<CharPolyValuation> out;
    out.reserve(static_cast<std::size_t>(m.size()));
    for (int i = 1; i <= m.size(); ++i)
        out.push_back(CharPolyValuation{i, wedge_trace(m, i).valuation()});
    return out;
}

int default_truncation(const LocalType& t) { return t.ram_index() * (t.rank() + 2); }

ValuationBoundReport verify_valuation_bound(const LocalType& t, int trials, int truncation_order,
                                            std::uint64_t seed, int threads) {
    if (trials < 1) throw input_error("verification requires trials >= 1");
    if (truncation_order < 1) throw input_error("truncation order must be >= 1");

    const int r = t.rank();
    const long long e = t.ram_index();

    ValuationBoundReport report;
    report.trials = trials;
    report.truncation_order = truncation_order;
    report.seed = seed;
    for (int i = 1; i <= r; ++i) {
        ValuationBoundReport::PerDegree pd;
        pd.degree_index = i;
        pd.bound = e * delta(t, i) - i;
        pd.min_slack = 0;
        pd.min_slack_is_lower_bound = true;  // refined below from observations
        report.per_degree.push_back(pd);
    }

    struct TrialResult {
        std::uint64_t trial_seed = 0;
        std::vector<std::optional<int>> valuations;  // index i-1
    };
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));

    auto run_range = [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            TrialResult& res = results[static_cast<std::size_t>(k)];
            res.trial_seed = derive_trial_seed(seed, k);
            const EquivariantMatrix m = random_equivariant(t, truncation_order, res.trial_seed);
            for (const CharPolyValuation& cv : char_poly_valuations(m))
                res.valuations.push_back(cv.valuation);
        }
    };

    const int workers = std::max(1, std::min(threads, trials));
    if (workers == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(trials, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    // Aggregate in trial order so the report is independent of scheduling.
    std::vector<bool> slack_seen(static_cast<std::size_t>(r), false);
    for (const TrialResult& res : results) {
        bool all_ok = true;
        for (int i = 1; i <= r; ++i) {
            ValuationBoundReport::PerDegree& pd = report.per_degree[static_cast<std::size_t>(i - 1)];
            const std::optional<int> val = res.valuations[static_cast<std::size_t>(i - 1)];
            const long long observed = val.has_value() ? *val : truncation_order;
            const bool pass = observed >= pd.bound;
            if (!pass) {
                all_ok = false;
                report.violations.push_back(
                    ValuationBoundReport::Violation{res.trial_seed, i, pd.bound, val});
            }
            const long long slack = observed - pd.bound;
            const bool exact = val.has_value();
            if (!slack_seen[static_cast<std::size_t>(i - 1)]) {
                pd.min_slack = slack;
                pd.min_slack_is_lower_bound = !exact;
                slack_seen[static_cast<std::size_t>(i - 1)] = true;
            } else if (slack < pd.min_slack) {
                pd.min_slack = slack;
                pd.min_slack_is_lower_bound = !exact;
            } else if (slack == pd.min_slack && exact) {
                pd.min_slack_is_lower_bound = false;
            }
        }
        if (all_ok)
            ++report.passes;
        else
            ++report.failures;
    }
    return report;
}

} // namespace equihitch
