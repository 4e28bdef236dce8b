#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcvx {

/// Outcome of one property suite run. Failure indices are sorted by instance,
/// so reports are identical regardless of worker count.
struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    int passed = 0;
    std::vector<int> failed_indices;
    std::vector<std::string> failure_messages;  // aligned with failed_indices
    std::vector<std::string> notes;             // suite-level coverage failures
    double seconds = 0.0;

    bool ok() const { return failed_indices.empty() && notes.empty(); }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int suite_default_count(const std::string& name);

/// Run `count` seeded instances of a named suite. Instances are independent
/// and sharded across OpenMP workers; `jobs` <= 0 uses every core.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count, int jobs);

}  // namespace pcvx
