#ifndef EQUIHITCH_JOBSPEC_HPP
#define EQUIHITCH_JOBSPEC_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "equihitch/cover.hpp"
#include "equihitch/theta.hpp"

namespace equihitch {

// Parameters of a randomized local verification run.
struct VerifySettings {
    int trials = 100;
    std::optional<int> truncation;  // default e(r+2) per local type when unset
    std::uint64_t seed = 0;
};

// One parsed input document: the cover plus either an explicit global type
// (every branch entry carries "type") or an enumeration request ("rank").
struct JobSpec {
    CoverData cover;
    std::optional<GlobalType> explicit_type;
    std::optional<int> rank;
    long long degree = 0;
    bool degree_given = false;
    std::optional<VerifySettings> verify;
};

// Parses a jobspec JSON document. Malformed JSON raises input_error with the
// line and column; schema violations raise input_error naming the field.
JobSpec parse_jobspec(const std::string& text);

// Rank for type-dependent commands: the explicit type's rank or the requested
// one; throws input_error when neither (or both, inconsistently) is present.
int resolve_rank(const JobSpec& job);

// FNV-1a 64 digest of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& text);

} // namespace equihitch

#endif
