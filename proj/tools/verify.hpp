#ifndef Z2COH_TOOLS_VERIFY_HPP
#define Z2COH_TOOLS_VERIFY_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cache.hpp"

namespace z2coh::cli {

struct CheckResult
{
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> suite_names();

/// Runs a suite (paper-tables, theorem-3-3, exactness, cache, all). Throws
/// Error for an unknown suite. The cache suite recomputes every readable
/// catalog entry and fails on unreadable or disagreeing entries.
std::vector<CheckResult> run_suite(const std::string& suite, const ResultCache& cache);

}   // namespace z2coh::cli

#endif
