#pragma once

#include <string>
#include <vector>

#include "forge/groebner.hpp"

namespace forge {

// One checked instance of a claim. `params` is a compact JSON string;
// `status` is one of verified / refuted / hypothesis-failed / skipped-slow.
struct VerifyInstance {
    std::string params;
    std::string status;
    std::string details;
};

struct VerifyClaim {
    std::string id;
    std::vector<VerifyInstance> instances;
};

struct VerifyOptions {
    bool slow = false;
    std::size_t cap = kDefaultCompletionCap;
    std::size_t apery_cap = 1000000;
    // Restrict to a single claim id; empty = all.
    std::string only;
};

// Runs the whole claim grid in a fixed order. Failures become instance
// statuses, never exceptions (caps and internal errors are reported as
// details on a refuted/hypothesis-failed instance).
std::vector<VerifyClaim> verify_suite(const VerifyOptions& options);

// True when no instance is refuted (skipped-slow and hypothesis-failed
// do not count against verification).
bool all_verified(const std::vector<VerifyClaim>& claims);

}  // namespace forge
