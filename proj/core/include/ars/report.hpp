#pragma once

#include <string>
#include <vector>

namespace ars {

/// Outcome record of one verification, consumed by the report emitters.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;                // entries / samples checked
    std::vector<std::string> notes;       // per-axiom or per-finding lines
    std::string counterexample;           // first failure, canonical text
    double millis = 0.0;

    void fail(std::string why) {
        passed = false;
        if (counterexample.empty()) counterexample = std::move(why);
    }
};

}  // namespace ars
