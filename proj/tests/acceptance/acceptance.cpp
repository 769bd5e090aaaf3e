// One PASS/FAIL line per acceptance criterion.
// Usage: acceptance [--skip-slow] [--only N]

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "kazhdan/suite.hpp"

int main(int argc, char** argv) {
    kz::suite::SuiteOptions opt;
    opt.data_dir = KZ_TEST_DATA;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--skip-slow")) opt.skip_slow = true;
        else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) opt.only = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: acceptance [--skip-slow] [--only N]\n");
            return 4;
        }
    }
    int failures = 0;
    opt.on_result = [&](const kz::suite::CriterionResult& r) {
        if (r.skipped)
            std::printf("SKIP %2d %s (slow suite, run with --only %d)\n", r.id, r.title.c_str(), r.id);
        else
            std::printf("%s %2d %s [%.2f s] %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                        r.detail.c_str());
        std::fflush(stdout);
        if (!r.skipped && !r.pass) ++failures;
    };
    kz::suite::run(opt);
    return failures ? 1 : 0;
}
