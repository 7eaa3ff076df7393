#pragma once

#include <cstdint>
#include <string>

namespace uag {

/// Resource bounds and run parameters shared by all operations.
///
/// Exceeding a bound raises CapacityError; results are never truncated
/// silently. All fields must be positive.
struct RunConfig {
    std::int64_t max_carrier = 1'000'000;      // largest admissible carrier (products, powers)
    std::int64_t max_enumeration = 10'000'000; // largest point/tuple sweep (|A|^n and friends)
    std::int64_t max_closure = 1'000'000;      // largest generated-closure element count
    int witness_depth = 4;                     // term depth bound for inconsistency witnesses
    int threads = 1;                           // cap on internal parallelism
    std::uint64_t seed = 0;                    // seed for randomized commands

    void validate() const;
};

/// Reads a RunConfig from a JSON file; unknown keys are rejected.
RunConfig load_config(const std::string& path);

} // namespace uag
