#pragma once

#include <cmath>
#include <string>

namespace idealtop {

// A sequence value: a real number, a point in the plane, or a labelled point
// of a finite space (discrete metric).
struct Value {
    enum class Kind { Real, Plane, Label };
    Kind kind = Kind::Real;
    double x = 0, y = 0;
    std::string label;

    static Value real(double v) { Value w; w.kind = Kind::Real; w.x = v; return w; }
    static Value plane(double px, double py) {
        Value w; w.kind = Kind::Plane; w.x = px; w.y = py; return w;
    }
    static Value point(std::string l) {
        Value w; w.kind = Kind::Label; w.label = std::move(l); return w;
    }

    std::string str() const;
};

inline double distance(const Value& a, const Value& b) {
    if (a.kind != b.kind) return 1.0;
    switch (a.kind) {
        case Value::Kind::Real: return std::abs(a.x - b.x);
        case Value::Kind::Plane: return std::hypot(a.x - b.x, a.y - b.y);
        case Value::Kind::Label: return a.label == b.label ? 0.0 : 1.0;
    }
    return 1.0;
}

inline bool same_value(const Value& a, const Value& b, double tol = 1e-9) {
    return a.kind == b.kind && distance(a, b) <= tol;
}

inline std::string Value::str() const {
    switch (kind) {
        case Kind::Real: return std::to_string(x);
        case Kind::Plane: return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        case Kind::Label: return label;
    }
    return "?";
}

} // namespace idealtop
