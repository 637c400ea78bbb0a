#pragma once

// Self-contained reproduction checks of the published Pigou-network results,
// run through the public library API only.

#include <string>
#include <vector>

namespace qpigou {

struct VerifyItem
{
    std::string name;
    bool passed = false;
    std::string detail; // first mismatch, empty on success
};

std::vector<VerifyItem> run_verification();

} // namespace qpigou
