#pragma once

// Named verification suites that pit the puzzle side against the
// localization side and check the recurrence identities in between.

#include "schubert/bitstring.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

struct SuiteFailure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    int k = 0;
    std::size_t cases = 0;
    /// Whether the cases were a random sample rather than everything.
    bool sampled = false;
    std::vector<SuiteFailure> failures;
    double seconds = 0;

    /// No failures, and at least one case unless the suite has nothing to
    /// check at this (n, k) (e.g. divisor identities with k = 0).
    bool passed() const { return failures.empty() && (cases > 0 || vacuous); }
    bool vacuous = false;

    nlohmann::json to_json() const;
    std::string summary() const;
};

struct SuiteOptions {
    /// Above this n, triples and pairs are sampled instead of exhausted.
    int exhaustive_max_n = 6;
    std::size_t sample_size = 500;
    std::uint64_t seed = 20061019;
    /// 0 means one worker per hardware thread.
    unsigned threads = 0;
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, int n, int k, const SuiteOptions& options = {});

/// Pinned worked examples: small products, puzzle counts, weights and MS tables.
SuiteReport regression_fixtures();

}  // namespace schubert
