#pragma once

#include "idealtop/seq.hpp"

namespace idealtop {

// Circle model of the one-point extension of ℝ: points of S¹ with opens given
// by two rules, the usual subspace opens of S¹∖{α} and the cofinite sets
// containing α = (0,−1).
//
// The embedding uses (2x/(x²+1), −(x²−1)/(x²+1)) on |x|>1. With a positive
// second coordinate that branch would retrace the upper semicircle already
// covered by (x, √(1−x²)) and the map could not be injective; the sign flip
// sends |x|>1 to the open lower semicircle and makes e a bijection onto
// S¹∖{α}. circle_e_printed keeps the uncorrected branch so the collision is
// itself testable.
Value circle_alpha(); // (0,−1)
Value circle_e(double x);
Value circle_e_printed(double x);
// requires |p| = 1 within 1e-9 and p ≠ α
double circle_e_inverse(const Value& p);

struct AlphaConvergence {
    Tri converges = Tri::Unknown;
    std::string certificate;
};

// FiberMap sequence with plane values on the circle: it converges to α exactly
// when every fiber of a value other than α lies in the trace ideal, since
// neighbourhoods of α are the cofinite sets containing it
AlphaConvergence circle_converges_to_alpha(const Seq& s, const IdealPtr& ideal);

struct SeparationReport {
    bool separable = false;
    std::vector<std::string> steps; // symbolic argument, plus a sampled instance
};

// disjoint-neighbourhood analysis for two distinct points of the model; shows
// in particular that α cannot be separated from any other point
SeparationReport circle_separation(const Value& p, const Value& q);

} // namespace idealtop
