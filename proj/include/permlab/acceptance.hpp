#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permlab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // counts and the first failure, if any
    double seconds = 0;
};

// The ten end-to-end criteria, run concurrently and returned in id order. The seed only
// changes which random instances are drawn. A filter keeps criteria whose title contains it.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1, const std::string& filter = "");

}  // namespace permlab
