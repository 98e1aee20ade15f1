// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dedesum/rational.hpp"

namespace dedesum {
namespace verify {

/// Deterministic bounded sampling on top of the (standardized) mt19937_64
/// stream, so seeded runs agree across platforms. std::uniform_int_distribution
/// is implementation-defined and deliberately avoided.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Uniform integer in [lo, hi].
std::int64_t uniform_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Random integer with exactly `bits` bits (top bit set).
Integer random_bits(std::mt19937_64& rng, unsigned bits);

/// All nondecreasing pairwise-coprime tuples with min_len..max_len entries
/// drawn from 1..max_part (repeated 1s included).
std::vector<std::vector<std::int64_t>> enumerate_coprime_tuples(
    std::int64_t max_part, std::size_t min_len, std::size_t max_len);

/// Deterministic sample of at least `count` distinct pairwise-coprime tuples
/// with 1..max_len entries in 1..max_part, cycling through the lengths.
std::vector<std::vector<std::int64_t>> sample_coprime_tuples(
    std::mt19937_64& rng, std::int64_t max_part, std::size_t max_len,
    std::size_t count);

struct SuiteOptions {
    std::int64_t max = 0;     // 0: per-suite default
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // human-readable, capped

    bool pass() const { return failures.empty(); }
};

// Each suite sweeps one law (or one formula/oracle agreement) over its
// acceptance-scale grid and records any nonzero residual / mismatch.
SuiteResult verify_dedekind(const SuiteOptions& opts = {});    // pairs up to 200
SuiteResult verify_rademacher(const SuiteOptions& opts = {});  // 1000 seeded instances
SuiteResult verify_gessel(const SuiteOptions& opts = {});      // p,q up to 40, full window
SuiteResult verify_general(const SuiteOptions& opts = {});     // tuples up to 15, d<=3
SuiteResult verify_zagier(const SuiteOptions& opts = {});      // tuples up to 15, d<=4
SuiteResult verify_raddedsum(const SuiteOptions& opts = {});   // pairs up to 60
SuiteResult verify_main(const SuiteOptions& opts = {});        // counting formula vs DP
SuiteResult verify_ehrhart(const SuiteOptions& opts = {});     // interior formula vs DP
SuiteResult verify_cone2d(const SuiteOptions& opts = {});      // 200 random cones

std::vector<SuiteResult> verify_all(const SuiteOptions& opts = {});

/// Runs the suite with the given name ("dedekind", ..., "all" expands).
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const SuiteOptions& opts = {});

}  // namespace verify
}  // namespace dedesum
