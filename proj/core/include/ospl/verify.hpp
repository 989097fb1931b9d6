#pragma once

#include <string>
#include <vector>

namespace ospl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, first mismatch on failure
    double seconds = 0;
};

struct VerifyOptions {
    long sl2_k_max = 1500;
    long spo_l_max = 1500;
    long hom_k_max = 300;
    long psi_k_max = 300;
    bool parallel = true;
};

inline constexpr int kCriterionCount = 11;

CriterionResult verify_criterion(int id, const VerifyOptions& opts = {});

// All criteria in order; independent sweeps run concurrently when opts.parallel is set.
std::vector<CriterionResult> verify_all(const VerifyOptions& opts = {});

}  // namespace ospl
