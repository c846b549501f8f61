#include "equihitch/jobspec.hpp"

#include <json.hpp>

namespace equihitch {

namespace {

using nlohmann::json;

// Line/column of a byte offset in the document, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

long long require_int(const json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw input_error("field '" + field + "' must be an integer");
    return j.get<long long>();
}

int require_small_int(const json& j, const std::string& field) {
    const long long v = require_int(j, field);
    if (v < -1000000000LL || v > 1000000000LL)
        throw input_error("field '" + field + "' out of range");
    return static_cast<int>(v);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw input_error("unknown field '" + it.key() + "' in " + where);
    }
}

} // namespace

JobSpec parse_jobspec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        auto [line, col] = line_of_offset(text, err.byte > 0 ? err.byte - 1 : 0);
        throw input_error("jobspec parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + err.what());
    }
    if (!doc.is_object()) throw input_error("jobspec must be a JSON object");
    reject_unknown_keys(doc, {"genus_base", "group_order", "branch", "rank", "degree", "verify"},
                        "jobspec");

    JobSpec job;
    if (!doc.contains("genus_base")) throw input_error("missing field 'genus_base'");
    job.cover.genus_base = require_small_int(doc["genus_base"], "genus_base");
    if (!doc.contains("group_order")) throw input_error("missing field 'group_order'");
    job.cover.group_order = require_small_int(doc["group_order"], "group_order");

    if (!doc.contains("branch") || !doc["branch"].is_array())
        throw input_error("field 'branch' must be an array");

    std::vector<LocalType> types;
    std::size_t typed_entries = 0;
    for (const json& entry : doc["branch"]) {
        if (!entry.is_object()) throw input_error("branch entries must be objects");
        reject_unknown_keys(entry, {"e", "type"}, "branch entry");
        if (!entry.contains("e")) throw input_error("branch entry missing field 'e'");
        BranchPoint bp;
        bp.ram_index = require_small_int(entry["e"], "branch.e");
        job.cover.branch_points.push_back(bp);
        if (entry.contains("type")) {
            if (!entry["type"].is_array())
                throw input_error("field 'branch.type' must be an array of integers");
            std::vector<int> mult;
            for (const json& k : entry["type"]) mult.push_back(require_small_int(k, "branch.type"));
            types.emplace_back(std::move(mult));
            ++typed_entries;
        }
    }
    if (typed_entries != 0 && typed_entries != job.cover.branch_points.size())
        throw input_error("either every branch entry carries 'type' or none does");

    if (doc.contains("rank")) {
        const int r = require_small_int(doc["rank"], "rank");
        if (r < 1) throw input_error("field 'rank' must be >= 1");
        job.rank = r;
    }
    if (doc.contains("degree")) {
        job.degree = require_int(doc["degree"], "degree");
        job.degree_given = true;
    }

    if (typed_entries > 0) {
        int r = job.rank.value_or(types.front().rank());
        job.explicit_type = GlobalType(r, std::move(types));
    } else if (job.rank && job.cover.branch_points.empty()) {
        // Unramified cover: the explicit type is the empty tuple.
        job.explicit_type = GlobalType(*job.rank, {});
    }

    if (doc.contains("verify")) {
        const json& v = doc["verify"];
        if (!v.is_object()) throw input_error("field 'verify' must be an object");
        reject_unknown_keys(v, {"trials", "truncation", "seed"}, "verify");
        VerifySettings settings;
        if (v.contains("trials")) settings.trials = require_small_int(v["trials"], "verify.trials");
        if (v.contains("truncation"))
            settings.truncation = require_small_int(v["truncation"], "verify.truncation");
        if (v.contains("seed"))
            settings.seed = static_cast<std::uint64_t>(require_int(v["seed"], "verify.seed"));
        job.verify = settings;
    }
    return job;
}

int resolve_rank(const JobSpec& job) {
    if (job.explicit_type) {
        if (job.rank && *job.rank != job.explicit_type->rank())
            throw input_error("field 'rank' conflicts with the rank of the explicit types");
        return job.explicit_type->rank();
    }
    if (job.rank) return *job.rank;
    throw input_error("this command needs either explicit branch types or a 'rank' field");
}

std::string input_digest(const std::string& text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xF]);
    return out;
}

} // namespace equihitch
