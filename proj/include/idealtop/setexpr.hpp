#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealtop/rational.hpp"

namespace idealtop {

enum class Tri { Yes, No, Unknown };
enum class Finiteness { Finite, Infinite, Unknown };

// A counted set carries its own enumeration and counting function, so exact
// density claims are self-certifying: members() cross-checks the two and a
// mismatch is a hard error. Hints feed the ideal membership rules; sets whose
// hints were certified only on a window (evaluation-backed exceedance sets)
// say so via windowed_hints, and certificates mention it.
struct CountedDef {
    std::string name;
    std::function<std::vector<std::uint64_t>(std::uint64_t)> enumerate; // sorted, all <= N
    std::function<std::uint64_t(std::uint64_t)> count;                  // |set ∩ [1..N]|
    std::optional<Rational> density_limit;

    Tri infinite = Tri::Unknown;
    Tri odd_trace_infinite = Tri::Unknown;              // |set ∩ odds| infinite?
    Tri meets_infinitely_many_blocks = Tri::Unknown;    // blocks Δi with nonempty trace
    Tri some_block_trace_infinite = Tri::Unknown;       // ∃i with set∩Δi infinite
    Tri infinitely_many_infinite_traces = Tri::Unknown; // infinitely many such i
    bool windowed_hints = false;
};

class SetExpr;
using SetPtr = std::shared_ptr<const SetExpr>;

// Symbolic subset of ℕ = {1,2,3,...}.
//   Finite  — explicit sorted list
//   Arith   — {n : n ≡ b (mod m)}
//   Block   — Δi = {n : 2-adic valuation of n is i-1}, i.e. odd multiples of 2^(i-1)
//   Tail    — {n : n >= n0}
//   Counted — enumeration-backed set with counting function
//   Union / Inter / Diff / Compl — boolean combinations
class SetExpr {
public:
    enum class Kind { Finite, Arith, Block, Counted, Tail, Union, Inter, Diff, Compl };

    Kind kind;
    std::vector<std::uint64_t> elems; // Finite
    std::uint64_t b = 0, m = 1;       // Arith
    std::uint64_t blk = 1;            // Block
    std::uint64_t n0 = 1;             // Tail
    std::shared_ptr<const CountedDef> counted;
    SetPtr l, r;

    std::string str() const;
};

SetPtr finite(std::vector<std::uint64_t> elems);
SetPtr arith(std::uint64_t b, std::uint64_t m);
SetPtr block(std::uint64_t i);
SetPtr tail(std::uint64_t n0);
SetPtr naturals(); // tail(1)
SetPtr empty_set();
SetPtr counted(std::shared_ptr<CountedDef> def);
SetPtr set_union(SetPtr l, SetPtr r);
SetPtr set_inter(SetPtr l, SetPtr r);
SetPtr set_diff(SetPtr l, SetPtr r);
SetPtr set_compl(SetPtr e);

std::vector<std::uint64_t> members(const SetPtr& e, std::uint64_t N);
std::uint64_t count_prefix(const SetPtr& e, std::uint64_t N);
bool member(const SetPtr& e, std::uint64_t n);
bool has_counted(const SetPtr& e);

Finiteness classify_finiteness(const SetPtr& e);

// Membership of n in a Counted-free expression is periodic in n for n > offset.
// This gives exact finiteness, density and block-profile decisions on the
// whole Counted-free fragment.
struct EventualPeriod {
    std::uint64_t offset;
    std::uint64_t period;
};
std::optional<EventualPeriod> eventual_period(const SetPtr& e);

struct DensityResult {
    enum class Kind { Exact, Bounds, Unknown };
    Kind kind = Kind::Unknown;
    Rational exact;          // Exact
    Rational lower, upper;   // Bounds
    std::uint64_t window = 0;

    static DensityResult exact_value(Rational v);
    static DensityResult bounds(Rational lo, Rational hi, std::uint64_t window);
    static DensityResult unknown();
    std::string str() const;
};

DensityResult density(const SetPtr& e, std::uint64_t window);

// two-adic valuation; v2(n) = i-1 <=> n ∈ Δi
std::uint64_t val2(std::uint64_t n);

// Named counted sets.
SetPtr counted_squares();
SetPtr every_other(const SetPtr& base);              // 2nd, 4th, ... element of base
SetPtr thin_at_squares(const SetPtr& base);          // k²-th element of base; density 0
SetPtr least_per_block(const SetPtr& base, Tri meets_infinitely_many_blocks);

std::uint64_t default_window(); // IDEALTOP_WINDOW env var, default 4096

} // namespace idealtop
