#include "idealtop/seq.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace idealtop {

namespace {

using V = MembershipVerdict::V;

// Evaluation-backed index set {n ∈ domain : pred(n)}. Enumeration is exact on
// any window; the finite/infinite hints are only window-certified (stability
// of the hit count across the top octaves up to 2^16) and say so.
SetPtr predicate_counted(const std::string& name, const SetPtr& domain,
                         std::function<bool(std::uint64_t)> pred) {
    struct Cache {
        std::vector<std::uint64_t> hits;
        std::uint64_t scanned = 0;
    };
    auto cache = std::make_shared<Cache>();
    auto scan_to = [domain, pred, cache](std::uint64_t N) -> const std::vector<std::uint64_t>& {
        if (N > cache->scanned) {
            for (std::uint64_t n = cache->scanned + 1; n <= N; ++n)
                if (member(domain, n) && pred(n)) cache->hits.push_back(n);
            cache->scanned = N;
        }
        return cache->hits;
    };

    auto def = std::make_shared<CountedDef>();
    def->name = name;
    def->enumerate = [scan_to](std::uint64_t N) {
        const auto& h = scan_to(N);
        auto it = std::upper_bound(h.begin(), h.end(), N);
        return std::vector<std::uint64_t>(h.begin(), it);
    };
    def->count = [scan_to](std::uint64_t N) {
        const auto& h = scan_to(N);
        return static_cast<std::uint64_t>(std::upper_bound(h.begin(), h.end(), N) - h.begin());
    };

    const std::uint64_t probe = std::uint64_t{1} << 16;
    const auto& h = scan_to(probe);
    auto in_range = [&h](std::uint64_t lo, std::uint64_t hi) {
        auto it = std::upper_bound(h.begin(), h.end(), lo);
        return it != h.end() && *it <= hi;
    };
    bool top = in_range(std::uint64_t{1} << 14, probe);
    bool mid = in_range(std::uint64_t{1} << 12, std::uint64_t{1} << 14);
    if (!top)
        def->infinite = Tri::No;
    else if (mid)
        def->infinite = Tri::Yes;
    def->windowed_hints = true;
    return counted(def);
}

void check_fiber_partition(const std::vector<std::pair<Value, SetPtr>>& fibers,
                           const SetPtr& domain, std::uint64_t window) {
    for (std::uint64_t n = 1; n <= window; ++n) {
        int covered = 0;
        for (const auto& [v, f] : fibers)
            if (member(f, n)) ++covered;
        bool dom = member(domain, n);
        if (dom && covered != 1)
            throw std::invalid_argument("fiber map: index " + std::to_string(n) +
                                        " covered " + std::to_string(covered) + " times");
        if (!dom && covered != 0)
            throw std::invalid_argument("fiber map: index " + std::to_string(n) +
                                        " outside domain but covered");
    }
}

SetPtr union_of(const std::vector<SetPtr>& parts) {
    SetPtr u = empty_set();
    for (const auto& p : parts) u = set_union(u, p);
    return u;
}

} // namespace

Value Seq::eval(std::uint64_t n) const {
    switch (body) {
        case Body::ClosedForm:
            return Value::real(eval_expr(closed, {{"n", static_cast<double>(n)}}));
        case Body::FiberMap: {
            for (const auto& [v, f] : fibers)
                if (member(f, n)) return v;
            throw std::invalid_argument("fiber map: index " + std::to_string(n) +
                                        " not covered by any fiber");
        }
        case Body::BlockFormula: {
            if (n <= initial.size()) return Value::real(initial[n - 1]);
            std::uint64_t k = 63 - static_cast<std::uint64_t>(__builtin_clzll(n - 1));
            std::uint64_t r = n - (std::uint64_t{1} << k);
            return Value::real(eval_expr(blockform, {{"k", static_cast<double>(k)},
                                                     {"r", static_cast<double>(r)}}));
        }
    }
    throw std::logic_error("unreachable");
}

std::string Seq::str() const {
    switch (body) {
        case Body::ClosedForm: return "closed(" + closed_src + ")";
        case Body::FiberMap: {
            std::string s = "fibers{";
            for (std::size_t i = 0; i < fibers.size(); ++i) {
                if (i) s += "; ";
                s += fibers[i].first.str() + ": " + fibers[i].second->str();
            }
            return s + "}";
        }
        case Body::BlockFormula: {
            std::string s = "blockform(" + blockform_src + "; init ";
            for (std::size_t i = 0; i < initial.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(initial[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

Seq closed_form(const std::string& expr_in_n, SetPtr domain) {
    Seq s;
    s.body = Seq::Body::ClosedForm;
    s.domain = std::move(domain);
    s.codomain = Codomain::Real;
    s.closed = parse_expr(expr_in_n);
    s.closed_src = expr_in_n;
    return s;
}

Seq fiber_map(std::vector<std::pair<Value, SetPtr>> fibers, SetPtr domain, Codomain codomain) {
    check_fiber_partition(fibers, domain, 512);
    Seq s;
    s.body = Seq::Body::FiberMap;
    s.domain = std::move(domain);
    s.codomain = codomain;
    s.fibers = std::move(fibers);
    return s;
}

Seq block_formula(const std::string& expr_in_k_r, std::vector<double> initial) {
    Seq s;
    s.body = Seq::Body::BlockFormula;
    s.domain = naturals();
    s.codomain = Codomain::Real;
    s.blockform = parse_expr(expr_in_k_r);
    s.blockform_src = expr_in_k_r;
    s.initial = std::move(initial);
    return s;
}

SetPtr a_eps(const Seq& s, const Value& xi, double eps) {
    if (eps <= 0) throw std::invalid_argument("a_eps: epsilon must be positive");
    if (s.body == Seq::Body::FiberMap) {
        std::vector<SetPtr> far;
        for (const auto& [v, f] : s.fibers)
            if (distance(v, xi) >= eps) far.push_back(f);
        return union_of(far);
    }
    return predicate_counted("aeps(" + s.str() + ")", s.domain,
                             [s, xi, eps](std::uint64_t n) { return distance(s.eval(n), xi) >= eps; });
}

SetPtr near_eps(const Seq& s, const Value& xi, double eps) {
    if (eps <= 0) throw std::invalid_argument("near_eps: epsilon must be positive");
    if (s.body == Seq::Body::FiberMap) {
        std::vector<SetPtr> near;
        for (const auto& [v, f] : s.fibers)
            if (distance(v, xi) < eps) near.push_back(f);
        return union_of(near);
    }
    return predicate_counted("near(" + s.str() + ")", s.domain,
                             [s, xi, eps](std::uint64_t n) { return distance(s.eval(n), xi) < eps; });
}

std::vector<double> default_eps_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 8; ++i) g.push_back(std::ldexp(1.0, -i));
    return g;
}

std::string ConvergenceVerdict::str() const {
    switch (verdict) {
        case V::Converges: return "converges";
        case V::Diverges: return "diverges";
        case V::Unknown: return "unknown";
    }
    return "?";
}

ConvergenceVerdict i_converges(const Seq& s, const Value& xi, const IdealPtr& ideal,
                               const std::vector<double>& eps_grid) {
    if (eps_grid.empty()) throw std::invalid_argument("i_converges: empty epsilon grid");
    ConvergenceVerdict out;
    bool all_in = true, any_out = false;
    for (double eps : eps_grid) {
        auto v = contains(ideal, a_eps(s, xi, eps));
        all_in = all_in && v.verdict == V::In;
        any_out = any_out || v.verdict == V::Out;
        out.per_epsilon.emplace_back(eps, std::move(v));
    }
    out.verdict = any_out ? ConvergenceVerdict::V::Diverges
                : all_in  ? ConvergenceVerdict::V::Converges
                          : ConvergenceVerdict::V::Unknown;
    return out;
}

NonthinVerdict is_nonthin(const Seq& s, const IdealPtr& ideal) {
    auto v = contains(ideal, s.domain);
    NonthinVerdict out;
    switch (v.verdict) {
        case V::In: out.nonthin = Tri::No; break;
        case V::Out: out.nonthin = Tri::Yes; break;
        case V::Unknown: out.nonthin = Tri::Unknown; break;
    }
    out.certificate = "domain membership: " + v.certificate;
    return out;
}

std::optional<Value> i_eventually_constant(const Seq& s, const IdealPtr& ideal) {
    if (s.body != Seq::Body::FiberMap)
        throw std::invalid_argument("i_eventually_constant: FiberMap presentation required");
    auto trace = restrict_ideal(ideal, s.domain).ideal;
    std::optional<Value> found;
    for (const auto& [v, f] : s.fibers) {
        std::vector<SetPtr> others;
        for (const auto& [w, g] : s.fibers)
            if (&g != &f) others.push_back(g);
        if (contains(trace, union_of(others)).verdict == V::In) {
            if (found)
                throw std::logic_error("i_eventually_constant: two witnesses would place the "
                                       "whole domain inside the ideal");
            found = v;
        }
    }
    return found;
}

bool Region::contains(const Value& v, double tol) const {
    if (kind == Kind::Interval)
        return v.kind == Value::Kind::Real && v.x > lo && v.x < hi;
    for (const auto& p : points)
        if (same_value(p, v, tol)) return true;
    return false;
}

EventuallyInVerdict i_eventually_in(const Seq& s, const Region& S, const IdealPtr& ideal) {
    EventuallyInVerdict out;
    if (s.body == Seq::Body::FiberMap) {
        std::vector<SetPtr> outside;
        for (const auto& [v, f] : s.fibers)
            if (!S.contains(v)) outside.push_back(f);
        out.outside = union_of(outside);
    } else {
        out.outside = predicate_counted("outside(" + s.str() + ")", s.domain,
                                        [s, S](std::uint64_t n) { return !S.contains(s.eval(n)); });
    }
    auto trace = restrict_ideal(ideal, s.domain).ideal;
    auto v = contains(trace, out.outside);
    out.in = v.verdict == V::In ? Tri::Yes : v.verdict == V::Out ? Tri::No : Tri::Unknown;
    out.certificate = "off-region index set " + out.outside->str() + ": " + v.certificate;
    return out;
}

std::vector<Value> i_cluster_points(const Seq& s, const IdealPtr& ideal,
                                    const std::vector<Value>& candidates,
                                    const std::vector<double>& eps_grid) {
    if (candidates.empty()) throw std::invalid_argument("i_cluster_points: no candidates");
    std::vector<Value> out;
    for (const auto& xi : candidates) {
        bool all_out = true;
        for (double eps : eps_grid)
            if (contains(ideal, near_eps(s, xi, eps)).verdict != V::Out) { all_out = false; break; }
        if (all_out) out.push_back(xi);
    }
    return out;
}

Seq prop26_sequence(std::uint64_t) {
    return block_formula("2^(k+1)-(r-1)", {2, 1});
}

Prop26Analysis prop26_counterexample(std::uint64_t k_max) {
    if (k_max < 3) throw std::invalid_argument("prop26_counterexample: k_max must be >= 3");
    if (k_max > 24) throw std::invalid_argument("prop26_counterexample: k_max too large");
    auto s = prop26_sequence(k_max);
    const std::uint64_t N = std::uint64_t{1} << (k_max + 1);

    Prop26Analysis a;
    a.window = N;
    a.pigeonhole_bound = k_max + 2;

    a.per_block_decreasing = true;
    for (std::uint64_t k = 1; k <= k_max && a.per_block_decreasing; ++k) {
        std::uint64_t lo = (std::uint64_t{1} << k) + 1, hi = std::uint64_t{1} << (k + 1);
        for (std::uint64_t n = lo + 1; n <= hi; ++n)
            if (!(s.eval(n).x < s.eval(n - 1).x)) { a.per_block_decreasing = false; break; }
    }

    // longest strictly increasing subsequence via patience sorting
    std::vector<double> tails;
    for (std::uint64_t n = 1; n <= N; ++n) {
        double v = s.eval(n).x;
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    a.lis_length = tails.size();
    a.range_density_bound = Rational(static_cast<std::int64_t>(a.lis_length),
                                     static_cast<std::int64_t>(N));
    return a;
}

ExtractResult prop26_extract(const std::function<std::uint64_t(std::uint64_t)>& x,
                             std::uint64_t index_window, const IdealPtr& ideal,
                             const SetPtr& witness_b) {
    if (index_window < 1) throw std::invalid_argument("prop26_extract: empty index window");

    std::map<std::uint64_t, std::vector<std::uint64_t>> by_value;
    std::uint64_t max_value = 0;
    for (std::uint64_t i = 1; i <= index_window; ++i) {
        std::uint64_t v = x(i);
        by_value[v].push_back(i);
        max_value = std::max(max_value, v);
    }

    auto b_values = members(witness_b, max_value);
    for (auto v : b_values)
        if (!by_value.count(v))
            throw std::invalid_argument("prop26_extract: witness value " + std::to_string(v) +
                                        " not attained by the sequence on the window");
    if (contains(ideal, witness_b).verdict != V::Out)
        throw std::invalid_argument("prop26_extract: witness set not certified outside the ideal");

    ExtractResult out;
    std::uint64_t last_idx = 0, last_val = 0;
    std::size_t realized = 0;
    for (auto v : b_values) {
        if (v <= last_val && !out.picks.empty()) continue;
        const auto& idxs = by_value[v];
        auto it = std::upper_bound(idxs.begin(), idxs.end(), last_idx);
        if (it == idxs.end()) continue;
        out.picks.emplace_back(*it, v);
        last_idx = *it;
        last_val = v;
        ++realized;
    }
    out.realized_every_witness_value = realized == b_values.size();

    if (out.realized_every_witness_value && classify_finiteness(witness_b) == Finiteness::Infinite) {
        auto v = contains(ideal, witness_b);
        out.range_verdict = {v.verdict,
                             "greedy realized every witness value; achieved range is the witness "
                             "set: " + v.certificate};
    } else {
        std::vector<std::uint64_t> vals;
        for (const auto& [i, v] : out.picks) vals.push_back(v);
        std::sort(vals.begin(), vals.end());
        auto v = contains(ideal, finite(vals));
        out.range_verdict = {v.verdict, "windowed achieved range: " + v.certificate};
    }
    return out;
}

} // namespace idealtop
