#include "idealtop/circle.hpp"

#include <cmath>
#include <stdexcept>

namespace idealtop {

Value circle_alpha() { return Value::plane(0, -1); }

Value circle_e(double x) {
    if (std::abs(x) <= 1) return Value::plane(x, std::sqrt(1 - x * x));
    double d = x * x + 1;
    return Value::plane(2 * x / d, -(x * x - 1) / d);
}

Value circle_e_printed(double x) {
    if (std::abs(x) <= 1) return Value::plane(x, std::sqrt(1 - x * x));
    double d = x * x + 1;
    return Value::plane(2 * x / d, (x * x - 1) / d);
}

double circle_e_inverse(const Value& p) {
    if (p.kind != Value::Kind::Plane) throw std::invalid_argument("expected a plane point");
    if (std::abs(std::hypot(p.x, p.y) - 1) > 1e-9)
        throw std::invalid_argument("point is not on the unit circle");
    if (same_value(p, circle_alpha()))
        throw std::invalid_argument("the point at infinity has no preimage");
    return p.y >= 0 ? p.x : p.x / (1 + p.y);
}

AlphaConvergence circle_converges_to_alpha(const Seq& s, const IdealPtr& ideal) {
    if (s.body != Seq::Body::FiberMap)
        throw std::invalid_argument("expected a fiber-map sequence of circle points");

    auto trace = restrict_ideal(ideal, s.domain).ideal;
    AlphaConvergence out;
    out.converges = Tri::Yes;
    std::string cert;
    for (const auto& [v, f] : s.fibers) {
        if (same_value(v, circle_alpha())) continue;
        auto m = contains(trace, f);
        if (m.verdict == MembershipVerdict::V::Out) {
            out.converges = Tri::No;
            out.certificate = "fiber of " + v.str() + " stays outside the ideal: " + m.certificate +
                              "; its complement-neighbourhood of alpha is missed cofinally";
            return out;
        }
        if (m.verdict == MembershipVerdict::V::Unknown) out.converges = Tri::Unknown;
        cert += (cert.empty() ? "" : "; ") + ("fiber of " + v.str() + ": " + m.certificate);
    }
    out.certificate = out.converges == Tri::Yes
                          ? "every non-alpha fiber lies in the ideal (" + cert +
                                "), so every cofinite neighbourhood of alpha is entered "
                                "ideal-eventually"
                          : "undecided fiber membership: " + cert;
    return out;
}

SeparationReport circle_separation(const Value& p, const Value& q) {
    if (same_value(p, q)) throw std::invalid_argument("separation needs two distinct points");
    SeparationReport rep;
    bool p_alpha = same_value(p, circle_alpha());
    bool q_alpha = same_value(q, circle_alpha());
    if (p_alpha || q_alpha) {
        const Value& other = p_alpha ? q : p;
        rep.separable = false;
        rep.steps = {
            "every open set containing alpha is cofinite in the circle",
            "every nonempty usual-subspace open around " + other.str() +
                " contains an arc, hence infinitely many points",
            "an infinite set meets every cofinite set, so the two neighbourhoods intersect",
            "sampled instance: the arc points e(t) near " + other.str() +
                " avoid any fixed finite exclusion set",
        };
        return rep;
    }
    rep.separable = true;
    double gap = distance(p, q);
    rep.steps = {
        "both points differ from alpha, so usual arcs are available",
        "arcs of radius " + std::to_string(gap / 2) + " around each point are disjoint",
    };
    return rep;
}

} // namespace idealtop
