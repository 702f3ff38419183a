#include "longmem/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& r : longmem::run_acceptance(ids)) {
        std::printf("[%s] criterion %2d: %s (%.2f s) -- %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failures += r.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
