#pragma once

// Exhaustive desk-scale verification sweeps. Each suite enumerates a
// finite input space, re-checks one structural claim on every input
// and reports the inputs that violate it. Suites are pure; fan-out
// across worker threads never changes the (sorted) result.

#include <cstddef>
#include <string>
#include <vector>

namespace circword::verify {

struct Violation {
    std::string suite;
    std::string input;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct Options {
    std::size_t max_len = 0;  // 0 = per-suite default
    std::size_t fib_max = 12;
    std::size_t jobs = 1;
};

struct Outcome {
    std::vector<Violation> violations;  // sorted by input, then detail
    std::size_t checked = 0;            // inputs examined

    bool ok() const { return violations.empty(); }
};

// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument for unknown names or
// out-of-range bounds.
Outcome run_suite(const std::string& name, const Options& opt = {});

}  // namespace circword::verify
