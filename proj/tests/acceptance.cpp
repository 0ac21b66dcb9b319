// Runs the acceptance battery and prints one line per criterion; nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "permlab/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    bool all = true;
    for (const auto& c : permlab::run_acceptance(seed)) {
        std::printf("%s criterion %d: %s [%.2f s] %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds,
                    c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
