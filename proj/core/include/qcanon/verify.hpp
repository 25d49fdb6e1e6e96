#pragma once

#include "qcanon/canonical.hpp"

#include <string>
#include <vector>

namespace qcanon {

/// Outcome of one named check suite. detail is a one-line summary of what
/// was swept; randomized suites embed their seed in it.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Suite names accepted by run_verify_suite, in the order run_all uses.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite against a shared block cache. Unknown names throw
/// std::invalid_argument("unknown verify suite").
CheckResult run_verify_suite(BlockCache& cache, const std::string& name, unsigned seed);

/// Same, with a private cache (QCANON_CACHE_DIR still applies).
CheckResult run_verify_suite(const std::string& name, unsigned seed);

/// Every suite in order, sharing one cache.
std::vector<CheckResult> run_all_verify_suites(unsigned seed);

}  // namespace qcanon
