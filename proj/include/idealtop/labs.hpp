#pragma once

#include "idealtop/topolab.hpp"

namespace idealtop {

struct LabResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    double seconds = 0;
};

// Exhaustive checks over every topology on up to max_n points and every
// catalog ideal. `parallel` shards topologies across OpenMP threads with a
// deterministic merge. `reference` routes limit computations through the
// symbolic membership engine instead of the analytic residue-class kernel;
// it is much slower and exists to validate the kernel.

// I-closure equals classical closure on every subset
LabResult lab_closure_collapse(std::size_t max_n, bool parallel, bool reference);
// unique I-limits exactly on T1 spaces
LabResult lab_us_t1(std::size_t max_n, bool parallel, bool reference);
// every I-closed set is closed
LabResult lab_sequential(std::size_t max_n, bool parallel);
// every finite space is I-compact
LabResult lab_compact(std::size_t max_n, bool parallel);
// the two continuity characterizations agree on every map (Fin and the
// even-cofinite ideal)
LabResult lab_continuity(std::size_t max_n, bool parallel);
// one-point extension: valid topology, open dense base, I-compact result
LabResult lab_onepoint(std::size_t max_n, bool parallel);

std::vector<LabResult> run_all_labs(std::size_t max_n, bool parallel);

} // namespace idealtop
