// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "heckedim/acceptance.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240817ull;
    bool all_pass = true;
    for (const heckedim::CheckResult& c : heckedim::run_acceptance(seed)) {
        std::printf("%s  %s  (%s)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all_pass = all_pass && c.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
