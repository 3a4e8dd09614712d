#include <cstdio>

#include "ql/acceptance.hpp"

int main() {
    int failures = 0;
    for (const auto& r : ql::run_all_criteria(QL_FIXTURES)) {
        std::printf("%s %-12s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.title.c_str());
        for (const auto& d : r.details) std::printf("     %s\n", d.c_str());
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
