// Acceptance suite: runs every exit criterion at its stated envelope and
// prints one pass/fail line per criterion. Exits nonzero if any fail.
// Usage: acceptance [path-to-equihitch-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "equihitch/hitchin.hpp"
#include "equihitch/higgs_local.hpp"
#include "equihitch/moduli.hpp"
#include "equihitch/spectral.hpp"

using namespace equihitch;

namespace {

int g_failures = 0;

void report_line(int index, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << index << " " << name << ": " << (pass ? "PASS" : "FAIL") << " ("
              << detail << ")\n";
    if (!pass) ++g_failures;
}

std::string seconds_since(std::chrono::steady_clock::time_point start) {
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2fs", s);
    return buffer;
}

// The shared exhaustive envelope: all valid covers with g_Y in {2,3},
// n in {2,3,4,6}, at most 3 branch points with e | n, and every global type
// (raw tuple, not just class representatives) of rank 1..4.
void for_each_envelope_type(
    const std::function<void(const CoverData&, const GlobalType&)>& visit) {
    for (int gy : {2, 3}) {
        for (int n : {2, 3, 4, 6}) {
            std::vector<int> divisors;
            for (int e = 2; e <= n; ++e)
                if (n % e == 0) divisors.push_back(e);

            std::vector<std::vector<int>> branch_sets = {{}};
            for (std::size_t a = 0; a < divisors.size(); ++a) {
                branch_sets.push_back({divisors[a]});
                for (std::size_t b = a; b < divisors.size(); ++b) {
                    branch_sets.push_back({divisors[a], divisors[b]});
                    for (std::size_t c = b; c < divisors.size(); ++c)
                        branch_sets.push_back({divisors[a], divisors[b], divisors[c]});
                }
            }

            for (const std::vector<int>& es : branch_sets) {
                CoverData cover;
                cover.genus_base = gy;
                cover.group_order = n;
                for (int e : es) cover.branch_points.push_back(BranchPoint{e});
                if (!validate(cover).empty()) continue;

                for (int r = 1; r <= 4; ++r) {
                    std::vector<std::vector<LocalType>> per_point;
                    for (int e : es) per_point.push_back(enumerate_local_types(r, e));
                    std::vector<std::size_t> odo(per_point.size(), 0);
                    for (;;) {
                        std::vector<LocalType> tuple;
                        tuple.reserve(per_point.size());
                        for (std::size_t q = 0; q < per_point.size(); ++q)
                            tuple.push_back(per_point[q][odo[q]]);
                        visit(cover, GlobalType(r, std::move(tuple)));

                        std::size_t pos = 0;
                        while (pos < odo.size()) {
                            if (++odo[pos] < per_point[pos].size()) break;
                            odo[pos] = 0;
                            ++pos;
                        }
                        if (pos == odo.size()) break;
                    }
                }
            }
        }
    }
}

void criterion_1_and_2_and_6() {
    const auto start = std::chrono::steady_clock::now();
    long long checked = 0, smooth_checked = 0;
    long long form_mismatches = 0, hitchin_mismatches = 0, fiber_mismatches = 0;
    std::string first_failure;

    for_each_envelope_type([&](const CoverData& cover, const GlobalType& g) {
        ++checked;
        const long long total = moduli_dimension(cover, g).total;
        if (moduli_dimension_form_a(cover, g) != total) ++form_mismatches;
        if (hitchin_base_dim(cover, g).total != total) ++hitchin_mismatches;
        if (smoothness(cover, g).smooth) {
            ++smooth_checked;
            if (quotient_spectral_genus(cover, g) != total) ++fiber_mismatches;
        }
    });

    const std::string elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << checked << " cover/type pairs, " << form_mismatches << " mismatches, " << elapsed;
    report_line(1, "dimension-form-agreement", form_mismatches == 0, detail.str());

    std::ostringstream detail2;
    detail2 << checked << " cover/type pairs, " << hitchin_mismatches << " mismatches";
    report_line(2, "hitchin-identity", hitchin_mismatches == 0, detail2.str());

    std::ostringstream detail6;
    detail6 << smooth_checked << " smooth types, " << fiber_mismatches << " mismatches";
    report_line(6, "fiber-dimension-identity", fiber_mismatches == 0, detail6.str());
}

void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    long long checked = 0, violations = 0;
    for (int e = 2; e <= 8; ++e) {
        for (int r = 1; r <= 8; ++r) {
            for (const LocalType& t : enumerate_local_types(r, e)) {
                ++checked;
                for (int i = 1; i <= r; ++i)
                    if (i - static_cast<long long>(e) * delta(t, i) > 0) ++violations;
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " local types, " << violations << " positive twists, "
           << seconds_since(start);
    report_line(3, "lemma-negative-sweep", violations == 0, detail.str());
}

void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    long long checked = 0, mismatches = 0;
    for (int e = 2; e <= 8; ++e) {
        for (int r = 2; r <= 8; ++r) {
            for (const LocalType& t : enumerate_local_types(r, e)) {
                ++checked;
                const long long top = r - static_cast<long long>(e) * delta(t, r);
                const bool a0 = top == 0;
                const bool a1 = top == -1;
                const bool b = r - 1 - static_cast<long long>(e) * delta(t, r - 1) == 0;
                const std::set<ShapeClass> shapes = shape_class(t);
                if (a0 != (shapes.count(ShapeClass::RectFull) > 0)) ++mismatches;
                if (a1 != (shapes.count(ShapeClass::RectMinusOne) > 0)) ++mismatches;
                if (b != (shapes.count(ShapeClass::RectPlusOne) > 0)) ++mismatches;
                if ((a0 || a1 || b) != (shapes.count(ShapeClass::NonSmooth) == 0)) ++mismatches;
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " local types, " << mismatches << " correspondence mismatches, "
           << seconds_since(start);
    report_line(4, "smoothness-equivalence", mismatches == 0, detail.str());
}

void criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    const int trials_per_type = 2;
    const std::uint64_t base_seed = 2026;
    long long matrices = 0, violations = 0;
    // min slack per i across every type and trial
    std::vector<long long> min_slack(5, 0);
    std::vector<bool> slack_seen(5, false);

    std::uint64_t type_counter = 0;
    for (int e = 2; e <= 6; ++e) {
        for (int r = 1; r <= 5; ++r) {
            for (const LocalType& t : enumerate_local_types(r, e)) {
                ++type_counter;
                const ValuationBoundReport rep = verify_valuation_bound(
                    t, trials_per_type, default_truncation(t), base_seed + type_counter);
                matrices += rep.trials;
                violations += rep.failures;
                for (const auto& pd : rep.per_degree) {
                    const std::size_t idx = static_cast<std::size_t>(pd.degree_index - 1);
                    if (!slack_seen[idx] || pd.min_slack < min_slack[idx]) {
                        min_slack[idx] = pd.min_slack;
                        slack_seen[idx] = true;
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << matrices << " matrices, " << violations << " violations, min slack per i = [";
    for (std::size_t i = 0; i < min_slack.size(); ++i)
        detail << (i ? "," : "") << (slack_seen[i] ? std::to_string(min_slack[i]) : "-");
    detail << "], " << seconds_since(start);
    report_line(5, "valuation-theorem", matrices >= 1000 && violations == 0, detail.str());
}

void criterion_7() {
    CoverData cover;
    cover.genus_base = 2;
    cover.group_order = 2;
    cover.branch_points = {BranchPoint{2}, BranchPoint{2}};

    const GlobalType g2(2, {LocalType({1, 1}), LocalType({1, 1})});
    const GlobalType g3(3, {LocalType({2, 1}), LocalType({2, 1})});

    bool pass = true;
    std::ostringstream detail;

    const long long dim2 = moduli_dimension(cover, g2).total;
    pass &= dim2 == 7;
    const HitchinBaseBreakdown w2 = hitchin_base_dim(cover, g2);
    pass &= w2.per_degree == std::vector<std::pair<int, long long>>{{1, 2}, {2, 5}};
    const long long sg = spectral_genus(cover, 2);
    pass &= sg == 13;
    const long long qg2 = quotient_spectral_genus(cover, g2);
    pass &= qg2 == 7;
    const long long dim3 = moduli_dimension(cover, g3).total;
    const long long qg3 = quotient_spectral_genus(cover, g3);
    pass &= dim3 == 14 && qg3 == 14;

    detail << "r=2: dim=" << dim2 << " W=[(1," << w2.per_degree[0].second << "),(2,"
           << w2.per_degree[1].second << ")] spectral_genus=" << sg << " quotient=" << qg2
           << "; r=3: dim=" << dim3 << " quotient=" << qg3;
    report_line(7, "worked-example-anchors", pass, detail.str());
}

std::string run_cli(const std::string& cli, const std::string& env_prefix,
                    const std::string& args, const std::filesystem::path& capture) {
    const std::string command =
        env_prefix + "\"" + cli + "\" " + args + " > \"" + capture.string() + "\" 2>&1";
    const int rc = std::system(command.c_str());
    std::ifstream in(capture, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (rc != 0) return "EXIT" + std::to_string(rc) + ":" + buffer.str();
    return buffer.str();
}

void criterion_8(const std::string& cli) {
    if (cli.empty()) {
        report_line(8, "cli-determinism", false, "no CLI path supplied");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "equihitch_acceptance";
    fs::create_directories(dir);
    const fs::path spec_path = dir / "job.json";
    {
        std::ofstream spec(spec_path);
        spec << R"({
  "genus_base": 2,
  "group_order": 2,
  "branch": [{"e": 2, "type": [1, 1]}, {"e": 2, "type": [1, 1]}],
  "degree": 0,
  "verify": {"trials": 25, "seed": 7}
})";
    }

    const std::string args = "report --json \"" + spec_path.string() + "\"";
    const std::string a = run_cli(cli, "EQUIHITCH_THREADS=1 ", args, dir / "a.out");
    const std::string b = run_cli(cli, "EQUIHITCH_THREADS=1 ", args, dir / "b.out");
    const std::string c = run_cli(cli, "EQUIHITCH_THREADS=4 ", args, dir / "c.out");
    const std::string d = run_cli(cli, "EQUIHITCH_THREADS=3 ", args, dir / "d.out");

    const bool pass = !a.empty() && a == b && a == c && a == d && a.rfind("EXIT", 0) != 0;
    std::ostringstream detail;
    detail << "4 runs over threads {1,1,4,3}, " << (pass ? "identical" : "DIFFER") << ", "
           << a.size() << " bytes";
    report_line(8, "cli-determinism", pass, detail.str());
    fs::remove_all(dir);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion_1_and_2_and_6();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_7();
    criterion_8(cli);

    if (g_failures == 0) {
        std::cout << "ACCEPTANCE: all criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << g_failures << " criteria FAILED\n";
    return 1;
}
