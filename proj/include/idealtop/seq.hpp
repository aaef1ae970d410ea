#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "idealtop/expr.hpp"
#include "idealtop/ideals.hpp"
#include "idealtop/value.hpp"

namespace idealtop {

enum class Codomain { Real, Plane, FinitePoints };

// Finitely presented sequence indexed by a SetExpr domain M:
//   ClosedForm   — x_n given by an expression in n
//   FiberMap     — finitely many values, each with its index fiber
//   BlockFormula — x_n for n = 2^k + r (1 <= r <= 2^k) by a formula in k and r,
//                  with explicit initial values covering the leading indices
class Seq {
public:
    enum class Body { ClosedForm, FiberMap, BlockFormula };

    Body body = Body::ClosedForm;
    SetPtr domain;
    Codomain codomain = Codomain::Real;

    ExprPtr closed;
    std::string closed_src;

    std::vector<std::pair<Value, SetPtr>> fibers;

    ExprPtr blockform;
    std::string blockform_src;
    std::vector<double> initial;

    Value eval(std::uint64_t n) const; // n must lie in the domain
    std::string str() const;
};

Seq closed_form(const std::string& expr_in_n, SetPtr domain = naturals());
// fibers must partition the domain; checked on a window at construction
Seq fiber_map(std::vector<std::pair<Value, SetPtr>> fibers, SetPtr domain = naturals(),
              Codomain codomain = Codomain::Real);
Seq block_formula(const std::string& expr_in_k_r, std::vector<double> initial);

// A(ε) = {n ∈ M : d(x_n, ξ) >= ε}; exact fiber union for FiberMap,
// evaluation-backed counted set otherwise
SetPtr a_eps(const Seq& s, const Value& xi, double eps);
// {n ∈ M : d(x_n, ξ) < ε}
SetPtr near_eps(const Seq& s, const Value& xi, double eps);

struct ConvergenceVerdict {
    enum class V { Converges, Diverges, Unknown };
    V verdict = V::Unknown;
    std::vector<std::pair<double, MembershipVerdict>> per_epsilon;
    std::string str() const;
};

std::vector<double> default_eps_grid(); // 2^-1 .. 2^-8

ConvergenceVerdict i_converges(const Seq& s, const Value& xi, const IdealPtr& ideal,
                               const std::vector<double>& eps_grid);

struct NonthinVerdict {
    Tri nonthin = Tri::Unknown;
    std::string certificate;
};
NonthinVerdict is_nonthin(const Seq& s, const IdealPtr& ideal);

// FiberMap only: the unique point whose off-fiber index set lies in the trace
// ideal on the domain
std::optional<Value> i_eventually_constant(const Seq& s, const IdealPtr& ideal);

struct Region {
    enum class Kind { Points, Interval };
    Kind kind = Kind::Points;
    std::vector<Value> points;
    double lo = 0, hi = 0; // open interval, Real codomain
    bool contains(const Value& v, double tol = 1e-9) const;
};

struct EventuallyInVerdict {
    Tri in = Tri::Unknown;
    SetPtr outside; // {n ∈ M : x_n ∉ S}
    std::string certificate;
};
EventuallyInVerdict i_eventually_in(const Seq& s, const Region& S, const IdealPtr& ideal);

std::vector<Value> i_cluster_points(const Seq& s, const IdealPtr& ideal,
                                    const std::vector<Value>& candidates,
                                    const std::vector<double>& eps_grid);

// The dyadic sequence x_1=2, x_2=1, x_{2^k+r} = 2^(k+1) - (r-1): within each
// block the values strictly decrease, so a strictly increasing subsequence
// takes at most one index per block.
Seq prop26_sequence(std::uint64_t k_max);

struct Prop26Analysis {
    bool per_block_decreasing = false;
    std::uint64_t lis_length = 0;     // longest strictly increasing subsequence (oracle)
    std::uint64_t pigeonhole_bound = 0; // k_max + 2
    Rational range_density_bound;     // lis_length / 2^(k_max+1)
    std::uint64_t window = 0;
};
Prop26Analysis prop26_counterexample(std::uint64_t k_max); // k_max >= 3

struct ExtractResult {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> picks; // (index, value)
    bool realized_every_witness_value = false;
    MembershipVerdict range_verdict;
};
// Greedy increasing-subsequence extraction guided by a condition-(C) witness
// set B. Throws if B is not inside the attained value range on the window or
// if B is not certified outside the ideal.
ExtractResult prop26_extract(const std::function<std::uint64_t(std::uint64_t)>& x,
                             std::uint64_t index_window, const IdealPtr& ideal,
                             const SetPtr& witness_b);

} // namespace idealtop
