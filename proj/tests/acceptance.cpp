// Acceptance suite: runs the full certification battery, one line per criterion.
// Exit status 0 iff every criterion holds. All comparisons are exact; the time
// budgets are generous sanity bounds, not tolerances.

#include <chrono>
#include <cstdio>
#include <string>

#include "wkac/verify.hpp"

using namespace wkac;

namespace {

int failures = 0;

void report(int index, const std::string& name, const CheckReport& rep, double budget_s,
            double elapsed_s) {
    bool pass = rep.all_pass() && elapsed_s < budget_s;
    std::printf("[%s] %d. %s (%zu checks, %.2fs)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), rep.lines.size(), elapsed_s);
    if (!rep.all_pass()) {
        ++failures;
        for (const auto& line : rep.lines)
            if (!line.pass)
                std::printf("       failed: %s%s%s\n", line.name.c_str(),
                            line.detail.empty() ? "" : " -- ", line.detail.c_str());
    } else if (elapsed_s >= budget_s) {
        ++failures;
        std::printf("       over budget: %.2fs >= %.2fs\n", elapsed_s, budget_s);
    }
}

template <typename F>
void criterion(int index, const std::string& name, double budget_s, F&& f) {
    auto start = std::chrono::steady_clock::now();
    CheckReport rep = f();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    report(index, name, rep, budget_s, elapsed);
}

}  // namespace

int main() {
    criterion(1, "catalog identities (dual Coxeter, sdim, R = 0)", 1.0, check_catalog);
    criterion(2, "central charges as rational-function identities", 1.0,
              check_central_charges);
    criterion(3, "twisted Weyl-vector property (both sectors + parameter grid)", 1.0, [] {
        CheckReport rep = check_twisted_rho_closed_forms();
        for (auto& line : check_rho_conjecture().lines) rep.lines.push_back(line);
        return rep;
    });
    criterion(4, "partition engine: series vs enumeration to level 4", 10.0,
              [] { return check_partitions(Rat(4)); });
    criterion(5, "closed-form factor displays, indices up to 3", 30.0,
              [] { return check_closed_forms(3); });
    criterion(6, "determinant formula vs Gram determinants", 300.0,
              [] { return check_oracle(); });
    criterion(7, "vanishing locus at 20 random rational points", 120.0,
              [] { return check_vanishing_locus(20); });
    criterion(8, "general-twist factors specialize to the sector forms", 10.0,
              [] { return check_specialization(2); });
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
