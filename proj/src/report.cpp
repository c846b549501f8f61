#include "equihitch/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "equihitch/hitchin.hpp"
#include "equihitch/higgs_local.hpp"
#include "equihitch/jobspec.hpp"
#include "equihitch/moduli.hpp"
#include "equihitch/seshadri.hpp"
#include "equihitch/spectral.hpp"

namespace equihitch {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_local_type(const LocalType& t) { return ordered_json(t.multiplicities()); }

ordered_json json_global_type(const GlobalType& g) {
    ordered_json arr = ordered_json::array();
    for (const LocalType& t : g.local_types()) arr.push_back(json_local_type(t));
    return arr;
}

// Targets of the type-dependent commands: the explicit type, or every
// enumerated class of the requested rank.
std::vector<GlobalClass> resolve_targets(const JobSpec& job, int max_rank) {
    if (job.explicit_type) return {GlobalClass{*job.explicit_type, 1}};
    const int r = resolve_rank(job);
    if (r > max_rank)
        throw input_error("rank " + std::to_string(r) + " exceeds the enumeration cap " +
                          std::to_string(max_rank) + " (raise with --max-r)");
    const long long tuples = count_global_tuples(job.cover, r);
    if (tuples > 5000000LL)
        throw input_error("enumeration would visit " + std::to_string(tuples) +
                          " tuples; choose a smaller rank");
    return enumerate_global_classes_detailed(job.cover, r);
}

ordered_json make_cover_section(const CoverData& cover) {
    ordered_json section;
    section["genus_base"] = cover.genus_base;
    section["group_order"] = cover.group_order;
    ordered_json branch = ordered_json::array();
    for (const BranchPoint& bp : cover.branch_points) branch.push_back(bp.ram_index);
    section["branch_ram_indices"] = branch;
    const std::vector<std::string> violations = validate(cover);
    section["valid"] = violations.empty();
    if (!violations.empty()) {
        section["violations"] = violations;
    } else {
        section["ramification_degree"] = ramification_degree(cover);
        section["genus_total"] = genus_total(cover);
    }
    return section;
}

ordered_json make_dim_entry(const CoverData& cover, const GlobalType& g) {
    const DimensionBreakdown breakdown = moduli_dimension(cover, g);
    const long long form_a = moduli_dimension_form_a(cover, g);
    ordered_json entry;
    entry["type"] = json_global_type(g);
    entry["rank"] = g.rank();
    entry["total"] = breakdown.total;
    entry["base_term"] = breakdown.base_term;
    ordered_json corrections = ordered_json::array();
    for (const Rational& c : breakdown.per_branch_corrections) corrections.push_back(c.to_integer());
    entry["per_branch_corrections"] = corrections;
    entry["form_a"] = form_a;
    entry["forms_agree"] = form_a == breakdown.total;
    if (form_a != breakdown.total)
        throw internal_error("dimension forms disagree: " + std::to_string(form_a) + " vs " +
                             std::to_string(breakdown.total));
    return entry;
}

ordered_json make_hitchin_entry(const CoverData& cover, const GlobalType& g) {
    const HitchinBaseBreakdown breakdown = hitchin_base_dim(cover, g);
    const long long moduli = moduli_dimension(cover, g).total;
    ordered_json entry;
    entry["type"] = json_global_type(g);
    ordered_json table = ordered_json::array();
    for (const auto& [i, dim] : breakdown.per_degree) {
        ordered_json row;
        row["i"] = i;
        ordered_json coeffs = ordered_json::array();
        for (long long c : twist_divisor(cover, g, i).coefficients) coeffs.push_back(c);
        row["twist_coefficients"] = coeffs;
        row["dim"] = dim;
        table.push_back(row);
    }
    entry["per_degree"] = table;
    entry["total"] = breakdown.total;
    entry["moduli_total"] = moduli;
    entry["matches_moduli"] = breakdown.total == moduli;
    return entry;
}

ordered_json make_classify_entry(const CoverData& cover, const GlobalType& g, long long degree) {
    const SmoothnessVerdict verdict = smoothness(cover, g);
    ordered_json entry;
    entry["type"] = json_global_type(g);
    entry["smooth"] = verdict.smooth;
    ordered_json points = ordered_json::array();
    for (std::size_t q = 0; q < g.size(); ++q) {
        ordered_json pt;
        ordered_json conds = ordered_json::array();
        for (SmoothCondition c : verdict.per_point[q]) conds.push_back(to_string(c));
        pt["conditions"] = conds;
        if (g.rank() >= 2) {
            ordered_json shapes = ordered_json::array();
            for (ShapeClass s : shape_class(g.at(q))) shapes.push_back(to_string(s));
            pt["shapes"] = shapes;
        }
        points.push_back(pt);
    }
    entry["per_point"] = points;
    entry["spectral_genus"] = spectral_genus(cover, g.rank());
    entry["spectral_line_degree"] = spectral_line_degree(cover, g.rank(), degree);
    if (verdict.smooth) {
        const InducedType induced = induced_type(cover, g);
        ordered_json induced_points = ordered_json::array();
        for (const auto& candidates : induced.per_point) {
            ordered_json cands = ordered_json::array();
            for (const InducedCandidate& cand : candidates) {
                ordered_json c;
                c["case"] = to_string(cand.via);
                if (cand.type)
                    c["type"] = json_local_type(*cand.type);
                else
                    c["no_fixed_point"] = true;
                cands.push_back(c);
            }
            induced_points.push_back(cands);
        }
        entry["induced_types"] = induced_points;
        const long long quotient = quotient_spectral_genus(cover, g);
        const long long moduli = moduli_dimension(cover, g).total;
        entry["quotient_spectral_genus"] = quotient;
        entry["moduli_total"] = moduli;
        entry["fiber_dim_matches"] = quotient == moduli;
        if (quotient != moduli)
            throw internal_error("quotient genus " + std::to_string(quotient) +
                                 " != moduli dim " + std::to_string(moduli));
    }
    return entry;
}

ordered_json make_parabolic_entry(const CoverData& cover, const GlobalType& g, long long degree) {
    const ParabolicData data = to_parabolic(cover, g, degree);
    ordered_json entry;
    entry["type"] = json_global_type(g);
    entry["rank"] = data.rank;
    entry["degree"] = data.degree;
    ordered_json points = ordered_json::array();
    for (const ParabolicPoint& pt : data.points) {
        ordered_json p;
        ordered_json weights = ordered_json::array();
        for (const Rational& w : pt.weights) weights.push_back(w.str());
        p["weights"] = weights;
        p["flag_multiplicities"] = pt.flag_multiplicities;
        points.push_back(p);
    }
    entry["points"] = points;
    entry["parabolic_degree"] = parabolic_degree(data).str();
    entry["parabolic_slope"] = parabolic_slope(data).str();
    return entry;
}

ordered_json make_enumerate_section(const JobSpec& job, int max_rank) {
    if (job.explicit_type && !job.explicit_type->local_types().empty())
        throw input_error(
            "enumerate needs an enumeration request: 'rank' without per-branch types");
    const int r = resolve_rank(job);
    if (r > max_rank)
        throw input_error("rank " + std::to_string(r) + " exceeds the enumeration cap " +
                          std::to_string(max_rank) + " (raise with --max-r)");
    const long long tuples = count_global_tuples(job.cover, r);
    if (tuples > 5000000LL)
        throw input_error("enumeration would visit " + std::to_string(tuples) +
                          " tuples; choose a smaller rank");
    const std::vector<GlobalClass> classes = enumerate_global_classes_detailed(job.cover, r);
    ordered_json section;
    section["rank"] = r;
    section["tuple_count"] = count_global_tuples(job.cover, r);
    section["class_count"] = classes.size();
    ordered_json rows = ordered_json::array();
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
        const GlobalClass& cls = classes[idx];
        ordered_json row;
        row["class"] = idx;
        row["type"] = json_global_type(cls.representative);
        row["orbit_size"] = cls.orbit_size;
        row["dim"] = moduli_dimension(job.cover, cls.representative).total;
        row["smooth"] = smoothness(job.cover, cls.representative).smooth;
        rows.push_back(row);
    }
    section["classes"] = rows;
    return section;
}

// Local verification targets: the distinct local types of the explicit global
// type; under an enumeration request, every local type of the requested rank
// at each distinct ramification index.
std::vector<LocalType> resolve_verify_targets(const JobSpec& job, int max_rank) {
    std::vector<LocalType> targets;
    auto add_unique = [&targets](const LocalType& t) {
        if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    };
    if (job.explicit_type) {
        for (const LocalType& t : job.explicit_type->local_types()) add_unique(t);
    } else {
        const int r = resolve_rank(job);
        if (r > max_rank)
            throw input_error("rank " + std::to_string(r) + " exceeds the enumeration cap " +
                              std::to_string(max_rank) + " (raise with --max-r)");
        std::vector<int> seen_e;
        for (const BranchPoint& bp : job.cover.branch_points) {
            if (std::find(seen_e.begin(), seen_e.end(), bp.ram_index) != seen_e.end()) continue;
            seen_e.push_back(bp.ram_index);
            for (const LocalType& t : enumerate_local_types(r, bp.ram_index)) add_unique(t);
        }
    }
    return targets;
}

ordered_json make_verify_section(const JobSpec& job, const RunOptions& options) {
    VerifySettings settings = job.verify.value_or(VerifySettings{});
    if (options.trials_override) settings.trials = *options.trials_override;
    if (options.truncation_override) settings.truncation = *options.truncation_override;
    if (options.seed_override) settings.seed = *options.seed_override;
    if (settings.trials < 1) throw input_error("verification requires trials >= 1");

    const std::vector<LocalType> targets = resolve_verify_targets(job, options.max_rank);
    if (targets.empty())
        throw input_error("no local types to verify (unramified cover has no branch points)");

    ordered_json section;
    section["trials"] = settings.trials;
    section["seed"] = settings.seed;
    ordered_json rows = ordered_json::array();
    bool any_violation = false;
    for (const LocalType& t : targets) {
        const int truncation = settings.truncation.value_or(default_truncation(t));
        const ValuationBoundReport report = verify_valuation_bound(
            t, settings.trials, truncation, settings.seed, options.threads);
        ordered_json row;
        row["e"] = t.ram_index();
        row["type"] = json_local_type(t);
        row["truncation"] = truncation;
        ordered_json per_i = ordered_json::array();
        for (const auto& pd : report.per_degree) {
            ordered_json entry;
            entry["i"] = pd.degree_index;
            entry["bound"] = pd.bound;
            entry["min_slack"] = pd.min_slack;
            entry["min_slack_exact"] = !pd.min_slack_is_lower_bound;
            per_i.push_back(entry);
        }
        row["per_i"] = per_i;
        row["passes"] = report.passes;
        row["failures"] = report.failures;
        if (report.failures > 0) {
            any_violation = true;
            ordered_json fails = ordered_json::array();
            for (const auto& v : report.violations) {
                ordered_json f;
                f["trial_seed"] = v.trial_seed;
                f["i"] = v.degree_index;
                f["bound"] = v.bound;
                if (v.valuation)
                    f["valuation"] = *v.valuation;
                else
                    f["valuation"] = ">=" + std::to_string(truncation);
                fails.push_back(f);
            }
            row["violations"] = fails;
        }
        rows.push_back(row);
    }
    section["targets"] = rows;
    section["all_passed"] = !any_violation;
    if (any_violation) throw internal_error("valuation bound violated (see verify section)");
    return section;
}

// ---------------------------------------------------------------- rendering

void render_cover_text(std::ostringstream& out, const ordered_json& cover) {
    out << "cover: g_Y=" << cover["genus_base"] << " n=" << cover["group_order"] << " branch e=[";
    const auto& branch = cover["branch_ram_indices"];
    for (std::size_t i = 0; i < branch.size(); ++i) out << (i ? "," : "") << branch[i];
    out << "]\n";
    if (cover["valid"].get<bool>()) {
        out << "  valid; deg R=" << cover["ramification_degree"] << ", g_X=" << cover["genus_total"]
            << "\n";
    } else {
        out << "  invalid:\n";
        for (const auto& v : cover["violations"]) out << "    - " << v.get<std::string>() << "\n";
    }
}

std::string type_string_from_json(const ordered_json& type_json) {
    std::string out = "[";
    for (std::size_t q = 0; q < type_json.size(); ++q) {
        if (q) out += ",";
        out += "(";
        for (std::size_t i = 0; i < type_json[q].size(); ++i) {
            if (i) out += ",";
            out += type_json[q][i].dump();
        }
        out += ")";
    }
    return out + "]";
}

void render_dim_text(std::ostringstream& out, const ordered_json& entries) {
    for (const auto& e : entries) {
        out << "type " << type_string_from_json(e["type"]) << " (r=" << e["rank"] << ")\n";
        out << "  moduli dim = " << e["total"] << " = " << e["base_term"];
        for (const auto& c : e["per_branch_corrections"]) out << " + " << c;
        out << "\n  form A = " << e["form_a"]
            << (e["forms_agree"].get<bool>() ? " (forms agree)" : " (FORMS DISAGREE)") << "\n";
    }
}

void render_hitchin_text(std::ostringstream& out, const ordered_json& entries) {
    for (const auto& e : entries) {
        out << "type " << type_string_from_json(e["type"]) << "\n";
        out << "  i | twist coefficients | dim W_i\n";
        for (const auto& row : e["per_degree"]) {
            out << "  " << row["i"] << " | [";
            const auto& coeffs = row["twist_coefficients"];
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
            out << "] | " << row["dim"] << "\n";
        }
        out << "  total = " << e["total"] << ", moduli dim = " << e["moduli_total"]
            << (e["matches_moduli"].get<bool>() ? " (equal)" : " (MISMATCH)") << "\n";
    }
}

void render_classify_text(std::ostringstream& out, const ordered_json& entries) {
    for (const auto& e : entries) {
        out << "type " << type_string_from_json(e["type"])
            << (e["smooth"].get<bool>() ? ": smooth\n" : ": non-smooth\n");
        const auto& points = e["per_point"];
        for (std::size_t q = 0; q < points.size(); ++q) {
            out << "  point " << q << ": conditions {";
            const auto& conds = points[q]["conditions"];
            for (std::size_t i = 0; i < conds.size(); ++i)
                out << (i ? "," : "") << conds[i].get<std::string>();
            out << "}";
            if (points[q].contains("shapes")) {
                out << ", shapes {";
                const auto& shapes = points[q]["shapes"];
                for (std::size_t i = 0; i < shapes.size(); ++i)
                    out << (i ? "," : "") << shapes[i].get<std::string>();
                out << "}";
            }
            out << "\n";
        }
        out << "  spectral genus = " << e["spectral_genus"]
            << ", line degree c = " << e["spectral_line_degree"] << "\n";
        if (e.contains("quotient_spectral_genus")) {
            out << "  quotient genus = " << e["quotient_spectral_genus"]
                << ", moduli dim = " << e["moduli_total"]
                << (e["fiber_dim_matches"].get<bool>() ? " (equal)" : " (MISMATCH)") << "\n";
            out << "  induced types:";
            const auto& induced = e["induced_types"];
            for (std::size_t q = 0; q < induced.size(); ++q) {
                out << " point" << q << "{";
                for (std::size_t c = 0; c < induced[q].size(); ++c) {
                    if (c) out << ";";
                    out << induced[q][c]["case"].get<std::string>();
                    if (induced[q][c].contains("type")) {
                        out << ":(";
                        const auto& tv = induced[q][c]["type"];
                        for (std::size_t i = 0; i < tv.size(); ++i) out << (i ? "," : "") << tv[i];
                        out << ")";
                    } else {
                        out << ":none";
                    }
                }
                out << "}";
            }
            out << "\n";
        }
    }
}

void render_parabolic_text(std::ostringstream& out, const ordered_json& entries) {
    for (const auto& e : entries) {
        out << "type " << type_string_from_json(e["type"]) << " (r=" << e["rank"]
            << ", d=" << e["degree"] << ")\n";
        const auto& points = e["points"];
        for (std::size_t q = 0; q < points.size(); ++q) {
            out << "  point " << q << ": weights [";
            const auto& ws = points[q]["weights"];
            for (std::size_t i = 0; i < ws.size(); ++i)
                out << (i ? "," : "") << ws[i].get<std::string>();
            out << "], multiplicities [";
            const auto& ks = points[q]["flag_multiplicities"];
            for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "," : "") << ks[i];
            out << "]\n";
        }
        out << "  parabolic degree = " << e["parabolic_degree"].get<std::string>()
            << ", slope = " << e["parabolic_slope"].get<std::string>() << "\n";
    }
}

void render_enumerate_text(std::ostringstream& out, const ordered_json& section) {
    out << "rank " << section["rank"] << ": " << section["class_count"] << " classes from "
        << section["tuple_count"] << " tuples\n";
    out << "  class | type | orbit | dim | smooth\n";
    for (const auto& row : section["classes"]) {
        out << "  " << row["class"] << " | " << type_string_from_json(row["type"]) << " | "
            << row["orbit_size"] << " | " << row["dim"] << " | "
            << (row["smooth"].get<bool>() ? "yes" : "no") << "\n";
    }
}

void render_verify_text(std::ostringstream& out, const ordered_json& section) {
    out << "verify-local: trials=" << section["trials"] << " seed=" << section["seed"] << "\n";
    for (const auto& row : section["targets"]) {
        out << "  e=" << row["e"] << " type (";
        const auto& tv = row["type"];
        for (std::size_t i = 0; i < tv.size(); ++i) out << (i ? "," : "") << tv[i];
        out << ") N=" << row["truncation"] << ": " << row["passes"] << " pass, " << row["failures"]
            << " fail;";
        for (const auto& pd : row["per_i"]) {
            out << " i=" << pd["i"] << " bound=" << pd["bound"] << " slack"
                << (pd["min_slack_exact"].get<bool>() ? "=" : ">=") << pd["min_slack"] << ";";
        }
        out << "\n";
    }
    out << "  all bounds hold: " << (section["all_passed"].get<bool>() ? "yes" : "NO") << "\n";
}

std::string render_text(const std::string& command, const ordered_json& report) {
    std::ostringstream out;
    out << "equihitch " << command << "\n";
    out << "input: " << report["input_digest"].get<std::string>() << "\n";
    render_cover_text(out, report["cover"]);
    const ordered_json& results = report["results"];
    if (results.contains("dim")) render_dim_text(out, results["dim"]);
    if (results.contains("hitchin")) render_hitchin_text(out, results["hitchin"]);
    if (results.contains("classify")) render_classify_text(out, results["classify"]);
    if (results.contains("parabolic")) render_parabolic_text(out, results["parabolic"]);
    if (results.contains("enumerate")) render_enumerate_text(out, results["enumerate"]);
    if (results.contains("verify")) render_verify_text(out, results["verify"]);
    out << "status: ok\n";
    return out.str();
}

std::string render_csv(const std::string& command, const ordered_json& report) {
    std::ostringstream out;
    const ordered_json& results = report["results"];
    if (command == "hitchin") {
        out << "type,i,twist_coefficients,dim\n";
        for (const auto& e : results["hitchin"]) {
            for (const auto& row : e["per_degree"]) {
                out << "\"" << type_string_from_json(e["type"]) << "\"," << row["i"] << ",\"[";
                const auto& coeffs = row["twist_coefficients"];
                for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
                out << "]\"," << row["dim"] << "\n";
            }
        }
        return out.str();
    }
    if (command == "enumerate") {
        out << "class,type,orbit_size,dim,smooth\n";
        for (const auto& row : results["enumerate"]["classes"]) {
            out << row["class"] << ",\"" << type_string_from_json(row["type"]) << "\","
                << row["orbit_size"] << "," << row["dim"] << ","
                << (row["smooth"].get<bool>() ? "yes" : "no") << "\n";
        }
        return out.str();
    }
    throw input_error("--csv is only available for the hitchin and enumerate commands");
}

} // namespace

RunResult run_command(const RunOptions& options) {
    RunResult result;
    try {
        const JobSpec job = parse_jobspec(options.input_text);

        ordered_json report;
        report["tool"] = "equihitch";
        report["command"] = options.command;
        report["input_digest"] = input_digest(options.input_text);
        report["cover"] = make_cover_section(job.cover);
        ordered_json results = ordered_json::object();

        const std::string& cmd = options.command;
        const bool needs_valid_cover = cmd != "validate";
        if (needs_valid_cover) require_valid(job.cover);

        auto targets = [&]() { return resolve_targets(job, options.max_rank); };

        if (cmd == "validate") {
            // cover section already carries everything
        } else if (cmd == "dim" || cmd == "hitchin" || cmd == "classify" || cmd == "parabolic") {
            ordered_json entries = ordered_json::array();
            for (const GlobalClass& cls : targets()) {
                if (cmd == "dim")
                    entries.push_back(make_dim_entry(job.cover, cls.representative));
                else if (cmd == "hitchin")
                    entries.push_back(make_hitchin_entry(job.cover, cls.representative));
                else if (cmd == "classify")
                    entries.push_back(make_classify_entry(job.cover, cls.representative, job.degree));
                else
                    entries.push_back(make_parabolic_entry(job.cover, cls.representative, job.degree));
            }
            results[cmd] = entries;
        } else if (cmd == "enumerate") {
            results["enumerate"] = make_enumerate_section(job, options.max_rank);
        } else if (cmd == "verify-local") {
            results["verify"] = make_verify_section(job, options);
        } else if (cmd == "report") {
            if (job.explicit_type) {
                ordered_json dim_entries = ordered_json::array();
                ordered_json hit_entries = ordered_json::array();
                ordered_json cls_entries = ordered_json::array();
                ordered_json par_entries = ordered_json::array();
                dim_entries.push_back(make_dim_entry(job.cover, *job.explicit_type));
                hit_entries.push_back(make_hitchin_entry(job.cover, *job.explicit_type));
                cls_entries.push_back(make_classify_entry(job.cover, *job.explicit_type, job.degree));
                par_entries.push_back(make_parabolic_entry(job.cover, *job.explicit_type, job.degree));
                results["dim"] = dim_entries;
                results["hitchin"] = hit_entries;
                results["classify"] = cls_entries;
                results["parabolic"] = par_entries;
            } else {
                results["enumerate"] = make_enumerate_section(job, options.max_rank);
            }
            if (job.verify || options.trials_override)
                results["verify"] = make_verify_section(job, options);
        } else {
            throw input_error("unknown command '" + cmd + "'");
        }

        report["results"] = results;
        report["status"] = "ok";

        switch (options.format) {
            case OutputFormat::Json: result.output = report.dump(2) + "\n"; break;
            case OutputFormat::Csv: result.output = render_csv(cmd, report); break;
            case OutputFormat::Text: result.output = render_text(cmd, report); break;
        }
        result.exit_code = 0;
    } catch (const input_error& err) {
        result.error = std::string("error: ") + err.what() + "\n";
        result.exit_code = 1;
    } catch (const internal_error& err) {
        result.error = std::string("internal-consistency failure: ") + err.what() + "\n";
        result.exit_code = 2;
    }
    return result;
}

} // namespace equihitch
