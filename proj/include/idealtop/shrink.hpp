#pragma once

#include "idealtop/ideals.hpp"

namespace idealtop {

// Condition (C) witness: B ⊆ A with B outside the ideal such that no infinite
// subset of B falls back into the ideal. The strategies cover the catalog:
//   OddPart     — EvenFin: B = A ∩ odds
//   OnePerBlock — MeetsFinBlocks: least element of A in each block A meets
//   WithinBlock — FinPerBlock: B = A ∩ Δj for a block with infinite trace
struct CWitness {
    enum class Strategy { OddPart, OnePerBlock, WithinBlock, Custom };
    IdealPtr ideal;
    SetPtr A, B;
    Strategy strategy = Strategy::Custom;
    std::uint64_t block_index = 0; // WithinBlock only
};

// throws std::invalid_argument when A is not certified outside the ideal,
// std::runtime_error when no strategy applies or its output cannot be certified
CWitness condC_witness(const IdealPtr& ideal, const SetPtr& A);

// wrap a hand-picked candidate B for verification
CWitness custom_c_witness(IdealPtr ideal, SetPtr A, SetPtr B);

struct CVerifyResult {
    bool consistent = true;
    SetPtr counterexample; // infinite subset of B certified inside the ideal
    std::string detail;
    std::uint64_t subsets_checked = 0;
};

// B itself, B ∩ residue classes mod 2..8, B ∩ Δ1..Δ8, every-other-element of B
// and the square-thinned subsequence of B
std::vector<SetPtr> default_subset_corpus(const SetPtr& B);

// Checks B ⊆ A on the window, that B is certified outside the ideal, and that
// no infinite-classified corpus subset of B is certified inside it. This is
// evidence against refutation, not a proof of condition (C).
CVerifyResult condC_verify(const CWitness& w, std::uint64_t window,
                           const std::vector<SetPtr>& subsets);
CVerifyResult condC_verify(const CWitness& w, std::uint64_t window = std::uint64_t{1} << 12);

// Condition (B) witness: ideal-small picks B_i ⊆ A_i whose union leaves the
// ideal. The family is the first k stages of a uniform construction; union_b
// describes the full limit set symbolically and `note` says how the stages
// continue.
struct BWitness {
    IdealPtr ideal;
    std::vector<SetPtr> family;
    std::vector<SetPtr> picks;
    SetPtr union_b;
    std::string note;
};

// ideal ∈ {Fin, EvenFin, MeetsFinBlocks, FinPerBlock}; every family member
// must be certified outside the ideal
BWitness condB_witness(const IdealPtr& ideal, const std::vector<SetPtr>& family);

} // namespace idealtop
