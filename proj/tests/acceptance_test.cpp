// Runs every verification suite once with a fixed seed and prints one
// pass/fail line per criterion. Exit status 0 iff all pass.

#include <qcanon/verify.hpp>

#include <cstdio>

int main() {
    constexpr unsigned seed = 42;
    const auto results = qcanon::run_all_verify_suites(seed);
    int failures = 0;
    int criterion = 0;
    for (const auto& r : results) {
        ++criterion;
        std::printf("%s criterion %2d [%s]: %s\n", r.passed ? "PASS" : "FAIL", criterion,
                    r.name.c_str(), r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%d criteria passed\n", criterion - failures, criterion);
    return failures == 0 ? 0 : 1;
}
