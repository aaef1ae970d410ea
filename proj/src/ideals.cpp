#include "idealtop/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealtop {

namespace {

IdealPtr make_catalog(IdealSpec::Kind k) {
    auto p = std::make_shared<IdealSpec>();
    p->kind = k;
    return p;
}

using V = MembershipVerdict::V;

MembershipVerdict verdict(V v, std::string cert) { return {v, std::move(cert)}; }

// Facts about a Counted-free set read off its eventually periodic structure.
// Residue classes {n + tL} with v2(n) < v2(L) stay inside the single block
// Δ(v2(n)+1); classes with v2(n) >= v2(L) have unbounded 2-adic valuation and
// leave an infinite trace in every block Δj, j > v2(L).
struct PeriodicProfile {
    bool infinite = false;
    bool odd_trace_infinite = false;
    bool meets_infinitely_many_blocks = false;
    bool infinitely_many_infinite_traces = false;
};

std::optional<PeriodicProfile> periodic_profile(const SetPtr& e) {
    if (has_counted(e)) return std::nullopt;
    auto ep = eventual_period(e);
    if (!ep) return std::nullopt;
    PeriodicProfile p;
    std::uint64_t v2L = val2(ep->period);
    for (std::uint64_t n = ep->offset + 1; n <= ep->offset + ep->period; ++n) {
        if (!member(e, n)) continue;
        p.infinite = true;
        if (ep->period % 2 == 1 || n % 2 == 1) p.odd_trace_infinite = true;
        if (val2(n) >= v2L) {
            p.meets_infinitely_many_blocks = true;
            p.infinitely_many_infinite_traces = true;
        }
    }
    return p;
}

std::string sample_str(const SetPtr& e, std::uint64_t N, std::size_t k) {
    auto mem = members(e, N);
    std::string s = "{";
    for (std::size_t i = 0; i < mem.size() && i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(mem[i]);
    }
    if (mem.size() > k) s += ",...";
    return s + "}";
}

MembershipVerdict density_zero_verdict(const SetPtr& A) {
    std::uint64_t w = std::max<std::uint64_t>(default_window(), 1 << 12);
    auto d = density(A, w);
    if (d.kind == DensityResult::Kind::Exact) {
        if (d.exact == Rational(0)) return verdict(V::In, "exact density 0");
        return verdict(V::Out, "exact density " + d.exact.str() + " > 0");
    }
    if (d.kind == DensityResult::Kind::Bounds && d.lower >= Rational(1, 256) &&
        count_prefix(A, w) > count_prefix(A, w / 2)) // still growing, not a stabilized finite set
        return verdict(V::Out, "prefix-ratio lower bound " + d.lower.str() +
                                   " >= 1/256 at window " + std::to_string(d.window) +
                                   " (windowed certificate)");
    return verdict(V::Unknown, "density " + d.str());
}

MembershipVerdict contains_catalog(IdealSpec::Kind kind, const SetPtr& A);

MembershipVerdict counted_hint_verdict(IdealSpec::Kind kind, const CountedDef& c) {
    auto tag = c.windowed_hints ? std::string(" (windowed hint)") : std::string(" (declared)");
    if (c.infinite == Tri::No) // finite sets belong to every catalog ideal
        return verdict(V::In, "finitely many elements" + tag);
    auto tri = [&](Tri t, const char* yes_means) -> MembershipVerdict {
        // Tri::No of the "bad" property certifies In, Tri::Yes certifies Out
        if (t == Tri::No) return verdict(V::In, std::string("no ") + yes_means + tag);
        if (t == Tri::Yes) return verdict(V::Out, std::string(yes_means) + tag);
        return verdict(V::Unknown, std::string("no rule for ") + yes_means);
    };
    switch (kind) {
        case IdealSpec::Kind::Fin: return tri(c.infinite, "infinitely many elements");
        case IdealSpec::Kind::EvenFin: return tri(c.odd_trace_infinite, "infinite odd part");
        case IdealSpec::Kind::MeetsFinBlocks:
            return tri(c.meets_infinitely_many_blocks, "infinitely many blocks met");
        case IdealSpec::Kind::FinPerBlock:
            return tri(c.some_block_trace_infinite, "block with infinite trace");
        case IdealSpec::Kind::LocalBlocks:
            return tri(c.infinitely_many_infinite_traces, "infinitely many infinite traces");
        default: break;
    }
    return verdict(V::Unknown, "no counted-set rule");
}

MembershipVerdict contains_catalog(IdealSpec::Kind kind, const SetPtr& A) {
    if (kind == IdealSpec::Kind::DensityZero) {
        auto dv = density_zero_verdict(A);
        if (dv.verdict != V::Unknown) return dv;
    }

    if (auto p = periodic_profile(A)) {
        switch (kind) {
            case IdealSpec::Kind::Fin:
                return p->infinite ? verdict(V::Out, "infinite (periodic structure)")
                                   : verdict(V::In, "finite (periodic structure)");
            case IdealSpec::Kind::EvenFin:
                return p->odd_trace_infinite
                           ? verdict(V::Out, "infinite odd part, e.g. " +
                                                 sample_str(set_inter(A, arith(1, 2)), 64, 3))
                           : verdict(V::In, "odd part finite (periodic structure)");
            case IdealSpec::Kind::MeetsFinBlocks:
                return p->meets_infinitely_many_blocks
                           ? verdict(V::Out, "meets infinitely many blocks (residue with v2 >= v2(period))")
                           : verdict(V::In, "meets finitely many blocks (all residues have v2 < v2(period))");
            case IdealSpec::Kind::FinPerBlock:
                // an infinite eventually periodic set always has an infinite block trace
                return p->infinite ? verdict(V::Out, "infinite periodic set has a block with infinite trace")
                                   : verdict(V::In, "finite");
            case IdealSpec::Kind::LocalBlocks:
                return p->infinitely_many_infinite_traces
                           ? verdict(V::Out, "infinite trace in infinitely many blocks")
                           : verdict(V::In, "infinite traces confined to finitely many blocks");
            case IdealSpec::Kind::DensityZero:
                break; // handled above
            default: break;
        }
    }

    switch (A->kind) {
        case SetExpr::Kind::Counted: {
            auto cv = counted_hint_verdict(kind, *A->counted);
            if (cv.verdict != V::Unknown) return cv;
            if (kind != IdealSpec::Kind::DensityZero && A->counted->density_limit &&
                !(*A->counted->density_limit == Rational(0)) &&
                kind == IdealSpec::Kind::Fin) {
                return verdict(V::Out, "positive density limit, hence infinite");
            }
            return cv;
        }
        case SetExpr::Kind::Union: {
            auto a = contains_catalog(kind, A->l);
            if (a.verdict == V::Out) return verdict(V::Out, "left part: " + a.certificate);
            auto b = contains_catalog(kind, A->r);
            if (b.verdict == V::Out) return verdict(V::Out, "right part: " + b.certificate);
            if (a.verdict == V::In && b.verdict == V::In)
                return verdict(V::In, "finite union of members");
            return verdict(V::Unknown, "union sides undecided");
        }
        case SetExpr::Kind::Inter: {
            auto a = contains_catalog(kind, A->l);
            if (a.verdict == V::In) return verdict(V::In, "subset of member (left): " + a.certificate);
            auto b = contains_catalog(kind, A->r);
            if (b.verdict == V::In) return verdict(V::In, "subset of member (right): " + b.certificate);
            return verdict(V::Unknown, "intersection sides undecided");
        }
        case SetExpr::Kind::Diff: {
            auto a = contains_catalog(kind, A->l);
            if (a.verdict == V::In) return verdict(V::In, "subset of member: " + a.certificate);
            if (a.verdict == V::Out) {
                auto b = contains_catalog(kind, A->r);
                if (b.verdict == V::In)
                    return verdict(V::Out, "non-member minus member stays out");
            }
            return verdict(V::Unknown, "difference undecided");
        }
        case SetExpr::Kind::Compl: {
            auto a = contains_catalog(kind, A->l);
            if (a.verdict == V::In)
                return verdict(V::Out, "complement of a member (ideal is nontrivial)");
            return verdict(V::Unknown, "complement undecided");
        }
        default:
            return verdict(V::Unknown, "no rule applies");
    }
}

// Exact emptiness of a Counted-free set when the periodic structure is small
// enough to scan; otherwise a windowed check.
enum class SubsetProof { Exact, Windowed, RefutedAt };

std::pair<SubsetProof, std::uint64_t> subset_check(const SetPtr& A, const SetPtr& M,
                                                   std::uint64_t window) {
    auto diff = set_diff(A, M);
    if (!has_counted(diff)) {
        auto ep = eventual_period(diff);
        if (ep && ep->offset + ep->period <= (std::uint64_t{1} << 18)) {
            for (std::uint64_t n = 1; n <= ep->offset + ep->period; ++n)
                if (member(diff, n)) return {SubsetProof::RefutedAt, n};
            return {SubsetProof::Exact, 0};
        }
    }
    auto mem = members(diff, window);
    if (!mem.empty()) return {SubsetProof::RefutedAt, mem.front()};
    return {SubsetProof::Windowed, 0};
}

} // namespace

std::string IdealSpec::name() const {
    switch (kind) {
        case Kind::Fin: return "fin";
        case Kind::EvenFin: return "i1";
        case Kind::MeetsFinBlocks: return "i2";
        case Kind::FinPerBlock: return "i3";
        case Kind::DensityZero: return "id";
        case Kind::LocalBlocks: return "local-blocks";
        case Kind::Restrict: return "restrict(" + base->name() + "," + domain->str() + ")";
    }
    return "?";
}

IdealPtr ideal_fin() { return make_catalog(IdealSpec::Kind::Fin); }
IdealPtr ideal_i1() { return make_catalog(IdealSpec::Kind::EvenFin); }
IdealPtr ideal_i2() { return make_catalog(IdealSpec::Kind::MeetsFinBlocks); }
IdealPtr ideal_i3() { return make_catalog(IdealSpec::Kind::FinPerBlock); }
IdealPtr ideal_id() { return make_catalog(IdealSpec::Kind::DensityZero); }
IdealPtr ideal_local_blocks() { return make_catalog(IdealSpec::Kind::LocalBlocks); }

RestrictResult restrict_ideal(const IdealPtr& base, const SetPtr& M) {
    auto p = std::make_shared<IdealSpec>();
    p->kind = IdealSpec::Kind::Restrict;
    p->base = base;
    p->domain = M;
    RestrictResult r;
    r.ideal = p;
    if (classify_finiteness(M) == Finiteness::Finite)
        r.warning = "restriction domain " + M->str() +
                    " is finite; the trace ideal is trivial unless M itself is a member";
    return r;
}

std::string MembershipVerdict::str() const {
    switch (verdict) {
        case V::In: return "in";
        case V::Out: return "out";
        case V::Unknown: return "unknown";
    }
    return "?";
}

MembershipVerdict contains(const IdealPtr& ideal, const SetPtr& set) {
    if (ideal->kind != IdealSpec::Kind::Restrict) return contains_catalog(ideal->kind, set);

    std::uint64_t w = default_window();
    auto [proof, witness] = subset_check(set, ideal->domain, w);
    if (proof == SubsetProof::RefutedAt)
        return verdict(V::Out, "element " + std::to_string(witness) + " lies outside " +
                                   ideal->domain->str());
    auto bv = contains(ideal->base, set);
    if (bv.verdict == V::Out) return verdict(V::Out, "base ideal: " + bv.certificate);
    if (bv.verdict == V::In) {
        std::string sub = proof == SubsetProof::Exact
                              ? "subset of domain (exact)"
                              : "subset of domain on window " + std::to_string(w);
        return verdict(V::In, sub + "; base ideal: " + bv.certificate);
    }
    return verdict(V::Unknown, "base ideal undecided: " + bv.certificate);
}

AdmissibilityReport is_admissible(const IdealPtr& ideal) {
    AdmissibilityReport rep;
    for (std::uint64_t n = 1; n <= 1024; ++n) {
        auto v = contains(ideal, finite({n}));
        if (v.verdict != MembershipVerdict::V::In) {
            rep.admissible = false;
            rep.report = "singleton {" + std::to_string(n) + "} not certified in: " + v.certificate;
            return rep;
        }
    }
    auto full = contains(ideal, naturals());
    if (full.verdict != MembershipVerdict::V::Out) {
        rep.admissible = false;
        rep.report = "full set not certified out: " + full.certificate;
        return rep;
    }
    rep.admissible = true;
    rep.report = "singletons 1..1024 in; full set out (" + full.certificate + ")";
    return rep;
}

Tri class_union_in_ideal(const IdealPtr& ideal, std::uint64_t m,
                         const std::vector<std::uint64_t>& residues) {
    if (m < 1) throw std::invalid_argument("class_union_in_ideal: m must be >= 1");
    if (residues.empty()) return Tri::Yes; // empty set
    switch (ideal->kind) {
        case IdealSpec::Kind::Fin:
        case IdealSpec::Kind::FinPerBlock:
        case IdealSpec::Kind::DensityZero:
            // any nonempty class is infinite, has an infinite block trace,
            // and has density 1/m > 0
            return Tri::No;
        case IdealSpec::Kind::EvenFin: {
            for (auto r : residues)
                if (m % 2 == 1 || r % 2 == 1) return Tri::No;
            return Tri::Yes;
        }
        case IdealSpec::Kind::MeetsFinBlocks:
        case IdealSpec::Kind::LocalBlocks: {
            std::uint64_t v2m = val2(m);
            for (auto r : residues) {
                std::uint64_t rep = (r % m == 0) ? m : r % m;
                if (val2(rep) >= v2m) return Tri::No;
            }
            return Tri::Yes;
        }
        case IdealSpec::Kind::Restrict:
            return Tri::Unknown;
    }
    return Tri::Unknown;
}

} // namespace idealtop
