// Library walkthrough: cup-length bounds and immersion conclusions for the
// two-point configuration spaces of RP^2 .. RP^16.

#include <z2coh/charclass.hpp>
#include <z2coh/wring.hpp>
#include <z2coh/zcl.hpp>

#include <cstdio>

int main() {
    std::printf("%4s %6s %6s %6s %4s  %s\n", "n", "zcl", "TC<=", "gap", "ok", "conclusion");
    for (int n = 2; n <= 16; ++n) {
        const z2coh::WRing ring(n);
        const z2coh::TensorAlgebra alg(ring);
        const auto bounds = z2coh::tc_bounds(n);
        const auto witness = z2coh::zcl_witness(alg);
        const auto report = z2coh::immersion_report(ring);
        char conclusion[128];
        if (report.two_power)
            std::snprintf(conclusion, sizeof conclusion,
                          "no immersion in R^%d, no closed embedding in R^%d",
                          report.nonimmersion_dim, report.nonembedding_dim);
        else
            std::snprintf(conclusion, sizeof conclusion, "immerses in R^%d", report.immersion_dim);
        std::printf("%4d %6d %6d %6d %4s  %s\n", n, bounds.lower, bounds.upper, bounds.gap,
                    witness.ok() ? "yes" : "NO", conclusion);
    }
    return 0;
}
