#ifndef GORLINK_CORPUS_HPP
#define GORLINK_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gorlink/generators.hpp"

namespace gorlink {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

/// Deterministic run record. The canonical JSON form excludes wall
/// times, so reruns with the same seed and field are bit-for-bit
/// identical.
struct RunReport {
    std::string command;
    std::string field;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> outputs;
    double seconds = 0.0;

    bool all_pass() const;
    std::string text(bool with_timings = true) const;
    std::string canonical_json() const;
};

/// All corpus constructions and certificate checks; one CheckResult
/// per acceptance item. `jobs` > 1 runs independent example groups
/// concurrently with a deterministic, name-ordered merge.
RunReport run_corpus_verification(const Field& field, std::uint64_t seed, int jobs = 1);

} // namespace gorlink

#endif
