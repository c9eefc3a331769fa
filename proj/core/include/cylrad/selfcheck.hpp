#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cylrad::selfcheck {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
    int samples = 0;
};

struct SelfcheckOptions {
    int samples = 200;
    std::uint64_t seed = 20240601;
    // Added to both permittivities of the closed-form block only; a nonzero
    // value must make the oracle comparison fail.
    std::complex<double> eps_offset{0.0, 0.0};
};

CheckResult oracle_equivalence(const SelfcheckOptions& options = {});
CheckResult wronskian_sample(const SelfcheckOptions& options = {});
CheckResult dual_formula(const SelfcheckOptions& options = {});
CheckResult isotropic_reduction(const SelfcheckOptions& options = {});

std::vector<CheckResult> run_all(const SelfcheckOptions& options = {});

// One line per check: "PASS name residual=... tolerance=... samples=...".
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace cylrad::selfcheck
