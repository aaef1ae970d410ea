#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealtop/setexpr.hpp"

namespace idealtop {

// Catalog of ideals on ℕ:
//   Fin            — all finite sets
//   EvenFin        — sets whose odd part is finite (the ideal generated by
//                    P(2ℕ) together with the finite sets)
//   MeetsFinBlocks — sets meeting only finitely many blocks Δi
//   FinPerBlock    — sets with finite trace in every block Δi
//   DensityZero    — sets of natural density zero
//   LocalBlocks    — sets with infinite trace in at most finitely many blocks
//   Restrict       — trace ideal {A ⊆ M : A ∈ base}
class IdealSpec;
using IdealPtr = std::shared_ptr<const IdealSpec>;

class IdealSpec {
public:
    enum class Kind { Fin, EvenFin, MeetsFinBlocks, FinPerBlock, DensityZero, LocalBlocks, Restrict };

    Kind kind;
    IdealPtr base; // Restrict
    SetPtr domain; // Restrict

    std::string name() const;
};

IdealPtr ideal_fin();
IdealPtr ideal_i1();           // EvenFin
IdealPtr ideal_i2();           // MeetsFinBlocks
IdealPtr ideal_i3();           // FinPerBlock
IdealPtr ideal_id();           // DensityZero
IdealPtr ideal_local_blocks();

struct RestrictResult {
    IdealPtr ideal;
    std::optional<std::string> warning; // set when M is provably finite
};
RestrictResult restrict_ideal(const IdealPtr& base, const SetPtr& M);

struct MembershipVerdict {
    enum class V { In, Out, Unknown };
    V verdict = V::Unknown;
    std::string certificate;

    bool in() const { return verdict == V::In; }
    bool out() const { return verdict == V::Out; }
    std::string str() const;
};

MembershipVerdict contains(const IdealPtr& ideal, const SetPtr& set);

struct AdmissibilityReport {
    bool admissible = false;
    std::string report;
};
AdmissibilityReport is_admissible(const IdealPtr& ideal);

// Analytic membership decision for a union of residue classes {n ≡ r (mod m)},
// r drawn from `residues`. Decides every catalog ideal exactly; returns Unknown
// for restriction ideals. Used as the fast kernel of the topology labs; the
// generic contains() above is the reference it is tested against.
Tri class_union_in_ideal(const IdealPtr& ideal, std::uint64_t m,
                         const std::vector<std::uint64_t>& residues);

} // namespace idealtop
