#include "idealtop/labs.hpp"

#include <chrono>

#include "idealtop/onepoint.hpp"

namespace idealtop {

namespace {

std::vector<FinSpace> all_spaces(std::size_t max_n) {
    std::vector<FinSpace> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto t = enumerate_topologies(n);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

bool fibers_inside(const ResSeq& s, Mask A) {
    for (auto p : s.pt)
        if (!(A & (Mask{1} << p))) return false;
    return true;
}

// closure through the symbolic membership engine instead of the residue kernel
Mask closure_ref(const FinSpace& S, Mask A, const IdealPtr& ideal) {
    if (!A) return 0;
    Mask out = 0;
    for (const auto& s : res_corpus(S.size()))
        if (fibers_inside(s, A)) out |= seq_limits(to_finseq(S, s), ideal);
    return out;
}

bool us_ref(const FinSpace& S, const IdealPtr& ideal) {
    for (const auto& s : res_corpus(S.size())) {
        Mask lim = seq_limits(to_finseq(S, s), ideal);
        if (lim && (lim & (lim - 1))) return false;
    }
    return true;
}

// Shards spaces across threads; the merge walks shard results in input order,
// so failure reporting is deterministic regardless of scheduling.
template <typename PerSpace>
LabResult run_lab(std::string name, const std::vector<FinSpace>& spaces, bool parallel,
                  PerSpace per_space) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> instances(spaces.size(), 0), failures(spaces.size(), 0);
    std::vector<std::string> first(spaces.size());

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(spaces.size()); ++i)
        per_space(spaces[i], instances[i], failures[i], first[i]);

    LabResult r;
    r.name = std::move(name);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        r.instances += instances[i];
        r.failures += failures[i];
        if (r.first_failure.empty() && !first[i].empty()) r.first_failure = first[i];
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void note_failure(std::uint64_t& failures, std::string& first, std::string msg) {
    ++failures;
    if (first.empty()) first = std::move(msg);
}

} // namespace

LabResult lab_closure_collapse(std::size_t max_n, bool parallel, bool reference) {
    return run_lab(reference ? "closure-collapse/reference" : "closure-collapse",
                   all_spaces(max_n), parallel,
                   [reference](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails,
                               std::string& first) {
                       for (const auto& ideal : catalog_ideals())
                           for (Mask A = 0; A <= S.full(); ++A) {
                               ++inst;
                               Mask got = reference ? closure_ref(S, A, ideal)
                                                    : i_closure(S, A, ideal);
                               if (got != closure_mask(S, A))
                                   note_failure(fails, first,
                                                S.str() + " " + ideal->name() + " A=" +
                                                    S.mask_str(A));
                           }
                   });
}

LabResult lab_us_t1(std::size_t max_n, bool parallel, bool reference) {
    return run_lab(reference ? "us-iff-t1/reference" : "us-iff-t1", all_spaces(max_n), parallel,
                   [reference](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails,
                               std::string& first) {
                       bool t1 = is_t1(S);
                       for (const auto& ideal : catalog_ideals()) {
                           ++inst;
                           bool us = reference ? us_ref(S, ideal) : is_i_us(S, ideal);
                           if (us != t1)
                               note_failure(fails, first, S.str() + " " + ideal->name());
                       }
                   });
}

LabResult lab_sequential(std::size_t max_n, bool parallel) {
    return run_lab("sequential", all_spaces(max_n), parallel,
                   [](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails,
                      std::string& first) {
                       for (const auto& ideal : catalog_ideals()) {
                           ++inst;
                           if (!is_i_sequential(S, ideal))
                               note_failure(fails, first, S.str() + " " + ideal->name());
                       }
                   });
}

LabResult lab_compact(std::size_t max_n, bool parallel) {
    return run_lab("compact", all_spaces(max_n), parallel,
                   [](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails,
                      std::string& first) {
                       for (const auto& ideal : catalog_ideals()) {
                           ++inst;
                           auto rep = is_i_compact(S, ideal);
                           if (!rep.compact)
                               note_failure(fails, first,
                                            S.str() + " " + ideal->name() + ": " + rep.witness);
                       }
                   });
}

LabResult lab_continuity(std::size_t max_n, bool parallel) {
    auto spaces = all_spaces(std::min<std::size_t>(max_n, 3));
    std::vector<IdealPtr> ideals = {ideal_fin(), ideal_i1()};
    return run_lab(
        "continuity-agreement", spaces, parallel,
        [&spaces, &ideals](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails,
                           std::string& first) {
            for (const auto& T : spaces) {
                std::vector<std::size_t> assign(S.size(), 0);
                for (;;) {
                    FinMap f;
                    f.source = S;
                    f.target = T;
                    f.assign = assign;
                    for (const auto& ideal : ideals) {
                        ++inst;
                        try {
                            is_i_continuous(f, ideal);
                        } catch (const std::logic_error& e) {
                            note_failure(fails, first, e.what());
                        }
                    }
                    std::size_t i = 0;
                    while (i < assign.size() && ++assign[i] == T.size()) assign[i++] = 0;
                    if (i == assign.size()) break;
                }
            }
        });
}

LabResult lab_onepoint(std::size_t max_n, bool parallel) {
    return run_lab(
        "onepoint-extension", all_spaces(max_n), parallel,
        [](const FinSpace& S, std::uint64_t& inst, std::uint64_t& fails, std::string& first) {
            for (const auto& ideal : catalog_ideals()) {
                ++inst;
                try {
                    auto T = build_onepoint(S, ideal);
                    Mask basefull = S.full();
                    if (!T.space.is_open(basefull))
                        throw std::logic_error("base not open in the extension");
                    // base dense exactly when alpha is not isolated; at finite
                    // scale every base is I-compact so alpha is always isolated
                    if (T.base_dense == T.alpha_isolated)
                        throw std::logic_error("density bookkeeping inconsistent");
                    for (Mask o : T.space.opens)
                        if (!S.is_open(o & basefull))
                            throw std::logic_error("extension trace is not a base open");
                    if (!is_i_compact(T.space, ideal).compact)
                        throw std::logic_error("extension not I-compact");
                } catch (const std::exception& e) {
                    note_failure(fails, first, S.str() + " " + ideal->name() + ": " + e.what());
                }
            }
        });
}

std::vector<LabResult> run_all_labs(std::size_t max_n, bool parallel) {
    return {lab_closure_collapse(max_n, parallel, false),
            lab_us_t1(max_n, parallel, false),
            lab_sequential(max_n, parallel),
            lab_compact(max_n, parallel),
            lab_continuity(max_n, parallel),
            lab_onepoint(max_n, parallel)};
}

} // namespace idealtop
