#include "idealtop/shrink.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idealtop {

namespace {

using V = MembershipVerdict::V;

void require_out(const IdealPtr& ideal, const SetPtr& A, const char* role) {
    auto v = contains(ideal, A);
    if (v.verdict != V::Out)
        throw std::invalid_argument(std::string(role) + " " + A->str() + " is not certified outside " +
                                    ideal->name() + ": " + v.certificate);
}

// smallest block index whose trace in A is certifiably infinite
std::uint64_t infinite_trace_block(const SetPtr& A) {
    // Δj has period 2^j, so keep the scan shallow
    for (std::uint64_t j = 1; j <= 16; ++j)
        if (classify_finiteness(set_inter(A, block(j))) == Finiteness::Infinite) return j;
    throw std::runtime_error("no block with certifiably infinite trace in " + A->str());
}

// smallest `want` elements of A not yet in `used`, growing the scan window
std::vector<std::uint64_t> fresh_elements(const SetPtr& A, std::size_t want,
                                          std::set<std::uint64_t>& used) {
    for (std::uint64_t w = 1024; w <= (std::uint64_t{1} << 24); w *= 4) {
        std::vector<std::uint64_t> out;
        for (auto n : members(A, w)) {
            if (used.count(n)) continue;
            out.push_back(n);
            if (out.size() == want) break;
        }
        if (out.size() == want) {
            used.insert(out.begin(), out.end());
            return out;
        }
    }
    throw std::runtime_error("could not draw " + std::to_string(want) + " fresh elements from " +
                             A->str());
}

// least element of each of the first `want` blocks A meets
std::vector<std::uint64_t> block_representatives(const SetPtr& A, std::size_t want) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 1; j <= 32 && out.size() < want; ++j) {
        auto trace = members(set_inter(A, block(j)), std::uint64_t{1} << 20);
        if (!trace.empty()) out.push_back(trace.front());
    }
    if (out.size() < want)
        throw std::runtime_error("found only " + std::to_string(out.size()) +
                                 " populated blocks in " + A->str());
    std::sort(out.begin(), out.end());
    return out;
}

SetPtr fold_union(const std::vector<SetPtr>& parts) {
    SetPtr u = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) u = set_union(u, parts[i]);
    return u;
}

} // namespace

CWitness condC_witness(const IdealPtr& ideal, const SetPtr& A) {
    require_out(ideal, A, "condition (C) base set");

    CWitness w;
    w.ideal = ideal;
    w.A = A;
    switch (ideal->kind) {
        case IdealSpec::Kind::EvenFin:
            w.B = set_inter(A, arith(1, 2));
            w.strategy = CWitness::Strategy::OddPart;
            break;
        case IdealSpec::Kind::MeetsFinBlocks:
            // A outside the ideal means A meets infinitely many blocks, which
            // is exactly the declared hint of the least-per-block selection
            w.B = least_per_block(A, Tri::Yes);
            w.strategy = CWitness::Strategy::OnePerBlock;
            break;
        case IdealSpec::Kind::FinPerBlock:
            w.block_index = infinite_trace_block(A);
            w.B = set_inter(A, block(w.block_index));
            w.strategy = CWitness::Strategy::WithinBlock;
            break;
        default:
            throw std::runtime_error("no condition (C) strategy for " + ideal->name());
    }

    auto v = contains(ideal, w.B);
    if (v.verdict != V::Out)
        throw std::runtime_error("strategy produced a subset not certified outside " +
                                 ideal->name() + ": " + v.certificate);
    return w;
}

CWitness custom_c_witness(IdealPtr ideal, SetPtr A, SetPtr B) {
    CWitness w;
    w.ideal = std::move(ideal);
    w.A = std::move(A);
    w.B = std::move(B);
    w.strategy = CWitness::Strategy::Custom;
    return w;
}

std::vector<SetPtr> default_subset_corpus(const SetPtr& B) {
    std::vector<SetPtr> out{B};
    for (std::uint64_t m = 2; m <= 8; ++m)
        for (std::uint64_t b = 0; b < m; ++b) out.push_back(set_inter(B, arith(b, m)));
    for (std::uint64_t i = 1; i <= 8; ++i) out.push_back(set_inter(B, block(i)));
    out.push_back(every_other(B));
    out.push_back(thin_at_squares(B));
    return out;
}

CVerifyResult condC_verify(const CWitness& w, std::uint64_t window,
                           const std::vector<SetPtr>& subsets) {
    CVerifyResult r;
    for (auto n : members(w.B, window))
        if (!member(w.A, n)) {
            r.consistent = false;
            r.counterexample = w.B;
            r.detail = "B is not a subset of A: " + std::to_string(n) + " missing from A";
            return r;
        }

    auto vb = contains(w.ideal, w.B);
    if (vb.verdict != V::Out) {
        r.consistent = false;
        r.counterexample = w.B;
        r.detail = "B itself is not certified outside the ideal: " + vb.certificate;
        return r;
    }

    for (const auto& S : subsets) {
        if (classify_finiteness(S) != Finiteness::Infinite) continue;
        ++r.subsets_checked;
        auto v = contains(w.ideal, S);
        if (v.verdict == V::In) {
            r.consistent = false;
            r.counterexample = S;
            r.detail = "infinite subset inside the ideal: " + v.certificate;
            return r;
        }
    }
    r.detail = "no refuting subset among " + std::to_string(r.subsets_checked) +
               " infinite candidates (window " + std::to_string(window) + ")";
    return r;
}

CVerifyResult condC_verify(const CWitness& w, std::uint64_t window) {
    return condC_verify(w, window, default_subset_corpus(w.B));
}

BWitness condB_witness(const IdealPtr& ideal, const std::vector<SetPtr>& family) {
    if (family.empty()) throw std::invalid_argument("condition (B) needs a nonempty family");
    for (const auto& A : family) require_out(ideal, A, "condition (B) family member");

    BWitness w;
    w.ideal = ideal;
    w.family = family;
    const std::size_t k = family.size();
    std::set<std::uint64_t> used;

    switch (ideal->kind) {
        case IdealSpec::Kind::Fin: {
            for (std::size_t i = 0; i < k; ++i)
                w.picks.push_back(finite(fresh_elements(family[i], i + 1, used)));
            w.union_b = fold_union(family);
            w.note = "stage i takes i fresh elements of A_i, cycling the family forever; "
                     "every element of the family union is eventually taken";
            break;
        }
        case IdealSpec::Kind::EvenFin: {
            for (std::size_t i = 0; i < k; ++i)
                w.picks.push_back(
                    finite(fresh_elements(set_inter(family[i], arith(1, 2)), i + 1, used)));
            w.union_b = set_inter(fold_union(family), arith(1, 2));
            w.note = "stage i takes i fresh odd elements of A_i, cycling the family forever; "
                     "the limit union is the odd part of the family union";
            break;
        }
        case IdealSpec::Kind::MeetsFinBlocks: {
            for (std::size_t i = 0; i < k; ++i)
                w.picks.push_back(finite(block_representatives(family[i], i + 1)));
            std::vector<SetPtr> limits;
            for (const auto& A : family) limits.push_back(least_per_block(A, Tri::Yes));
            w.union_b = fold_union(limits);
            w.note = "stage i takes the least element of the first i blocks A_i meets; the "
                     "limit union collects the least per-block element of every A_i";
            break;
        }
        case IdealSpec::Kind::FinPerBlock: {
            std::uint64_t j = 0;
            for (std::uint64_t cand = 1; cand <= 16 && j == 0; ++cand) {
                bool all = true;
                for (const auto& A : family)
                    if (classify_finiteness(set_inter(A, block(cand))) != Finiteness::Infinite) {
                        all = false;
                        break;
                    }
                if (all) j = cand;
            }
            if (j == 0)
                throw std::runtime_error(
                    "no block with certifiably infinite trace across the whole family");
            for (std::size_t i = 0; i < k; ++i)
                w.picks.push_back(
                    finite(fresh_elements(set_inter(family[i], block(j)), i + 1, used)));
            w.union_b = set_inter(fold_union(family), block(j));
            w.note = "stage i takes i fresh elements of A_i inside the shared block " +
                     std::to_string(j) + "; the limit union has infinite trace there";
            break;
        }
        default:
            throw std::runtime_error("no condition (B) strategy for " + ideal->name());
    }

    for (const auto& B : w.picks) {
        auto v = contains(ideal, B);
        if (v.verdict != V::In)
            throw std::runtime_error("stage pick not certified inside the ideal: " + v.certificate);
    }
    auto u = contains(ideal, w.union_b);
    if (u.verdict != V::Out)
        throw std::runtime_error("limit union not certified outside the ideal: " + u.certificate);
    return w;
}

} // namespace idealtop
