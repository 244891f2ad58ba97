// Acceptance harness: runs every acceptance criterion at full scale and
// prints one PASS/FAIL line per criterion.  Exits 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "layerbeta/verify.hpp"

int main() {
    using namespace layerbeta;
    const VerifyReport report = run_verification(VerifyLevel::full);

    // Group the checks by criterion, keeping first-appearance order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const VerifyCheck*>> grouped;
    for (const VerifyCheck& check : report.checks) {
        if (grouped.find(check.criterion) == grouped.end())
            order.push_back(check.criterion);
        grouped[check.criterion].push_back(&check);
    }

    int failed = 0;
    for (const std::string& criterion : order) {
        const std::vector<const VerifyCheck*>& checks = grouped[criterion];
        bool pass = true;
        const VerifyCheck* worst = checks.front();
        double worst_margin = -1.0;
        for (const VerifyCheck* check : checks) {
            pass = pass && check->pass;
            const double margin =
                std::abs(check->actual - check->expected) /
                (check->tolerance > 0 ? check->tolerance : 1.0);
            if (margin > worst_margin) {
                worst_margin = margin;
                worst = check;
            }
        }
        if (!pass) ++failed;
        std::printf(
            "%-6s %s  %-42s |actual-expected| = %.3e  (tolerance %.3e)\n",
            criterion.c_str(), pass ? "PASS" : "FAIL", worst->name.c_str(),
            std::abs(worst->actual - worst->expected), worst->tolerance);
    }
    std::printf("%zu/%zu criteria passed\n", order.size() - failed,
                order.size());
    return failed == 0 ? 0 : 1;
}
