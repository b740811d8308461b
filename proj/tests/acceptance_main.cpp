// Acceptance gate: runs the numbered verification criteria at the full
// level and prints one line per check plus a summary line per criterion.
// Exit status is the number of failing (non-info) checks.
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "factoromata/verify.hpp"

using namespace factoromata;

namespace {

int run_one(int criterion, const VerifyOptions& opt) {
    std::vector<CheckResult> results = run_criterion(criterion, opt);
    int fails = 0;
    for (const CheckResult& r : results) {
        std::puts(format_result(r).c_str());
        fails += r.status == CheckStatus::Fail;
    }
    std::printf("criterion %d: %s\n", criterion, fails == 0 ? "PASS" : "FAIL");
    return fails;
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;  // 0 = all
    VerifyOptions opt = full_options();
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--quick") == 0) {
            opt = quick_options();
        } else {
            std::fprintf(stderr,
                         "usage: acceptance [--criterion N] [--quick]\n");
            return 2;
        }
    }
    if (criterion < 0 || criterion > 13) {
        std::fprintf(stderr, "criterion must be in 1..13\n");
        return 2;
    }

    int fails = 0;
    if (criterion == 0) {
        for (int c = 1; c <= 13; ++c) fails += run_one(c, opt);
    } else {
        fails = run_one(criterion, opt);
    }
    return fails;
}
