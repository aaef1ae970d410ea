#include <cstdio>

#include <omp.h>

#include "idealtop/labs.hpp"

using namespace idealtop;

// Compares the analytic residue-class kernel against the symbolic reference
// engine, serial against OpenMP-sharded, on the exhaustive labs.
int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-34s %10s %9s %9s\n", "lab", "instances", "failures", "seconds");

    auto row = [](const char* tag, const LabResult& r) {
        std::printf("%-34s %10llu %9llu %9.3f\n", tag,
                    static_cast<unsigned long long>(r.instances),
                    static_cast<unsigned long long>(r.failures), r.seconds);
        return r;
    };

    auto k3s = row("closure n=3 kernel serial", lab_closure_collapse(3, false, false));
    auto k3p = row("closure n=3 kernel parallel", lab_closure_collapse(3, true, false));
    auto r3s = row("closure n=3 reference serial", lab_closure_collapse(3, false, true));
    auto r3p = row("closure n=3 reference parallel", lab_closure_collapse(3, true, true));
    auto k4p = row("closure n=4 kernel parallel", lab_closure_collapse(4, true, false));

    std::printf("\n");
    auto u3k = row("us-t1 n=3 kernel serial", lab_us_t1(3, false, false));
    auto u3r = row("us-t1 n=3 reference serial", lab_us_t1(3, false, true));
    auto u4k = row("us-t1 n=4 kernel parallel", lab_us_t1(4, true, false));

    bool ok = true;
    auto agree = [&ok](const LabResult& a, const LabResult& b) {
        if (a.instances != b.instances || a.failures != b.failures) ok = false;
    };
    agree(k3s, k3p);
    agree(k3s, r3s);
    agree(k3s, r3p);
    agree(u3k, u3r);
    ok = ok && k3s.failures == 0 && k4p.failures == 0 && u4k.failures == 0;

    std::printf("\nkernel/reference agreement: %s\n", ok ? "ok" : "MISMATCH");
    if (r3s.seconds > 0 && k3s.seconds > 0)
        std::printf("kernel speedup over reference (n=3, serial): %.1fx\n",
                    r3s.seconds / k3s.seconds);
    if (k3p.seconds > 0)
        std::printf("parallel speedup (n=3, kernel): %.2fx\n", k3s.seconds / k3p.seconds);
    return ok ? 0 : 1;
}
