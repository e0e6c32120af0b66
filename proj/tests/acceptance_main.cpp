// Acceptance suite: runs every check of the selftest library at its pinned
// defaults (order 8, 100 cases, seed 42) and prints one pass/fail line per
// criterion. Exits nonzero if anything fails.

#include <iostream>

#include <motivic/selftest.hpp>

int main() {
    const auto results = motivic::selftest::run_all();
    int failures = 0;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << index << ": " << r.name
                  << " (" << r.detail << ")" << std::endl;
        if (!r.passed) {
            ++failures;
        }
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << index << " criteria passed" << std::endl;
    } else {
        std::cout << "acceptance: " << failures << " of " << index << " criteria FAILED"
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
