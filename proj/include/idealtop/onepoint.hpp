#pragma once

#include <optional>

#include "idealtop/topolab.hpp"

namespace idealtop {

// One-point extension X̂: the base space plus a fresh point α, with opens
//   τ ∪ { U ∪ {α} : X−U is closed and I-compact in X }.
// The complement condition forces U open, so on finite bases (which are all
// I-compact) every open U qualifies; in particular {α} itself is open and the
// base is dense only in the degenerate sense recorded below.
struct OnePointSpace {
    FinSpace base;
    FinSpace space;         // base points followed by α
    std::size_t alpha = 0;  // index of α in space
    bool base_dense = false;
    bool alpha_isolated = false;
    std::string str() const;
};

// validates the resulting family as a topology (throws std::logic_error if the
// rule ever produced a non-topology)
OnePointSpace build_onepoint(const FinSpace& S, const IdealPtr& ideal,
                             const std::string& alpha_label = "*");

// brute-force disjoint-neighbourhood check
bool is_hausdorff(const FinSpace& S);
bool is_hausdorff(const OnePointSpace& T);

struct ExtendReport {
    FinMap fhat;              // between the two extended spaces, α ↦ α
    bool fhat_continuous = false; // classical continuity of f̂
    bool fhat_open = false;       // images of opens open (homeomorphism when bijective)
    Thm212Report base_report;     // I-compact preimage behaviour of f itself
};
ExtendReport extend_map(const FinMap& f, const IdealPtr& ideal);

// bijection A.space -> B.space matching α with α and carrying opens to opens;
// the identity-on-base candidate is tried first
std::optional<std::vector<std::size_t>> homeo_search(const OnePointSpace& A,
                                                     const OnePointSpace& B);

} // namespace idealtop
