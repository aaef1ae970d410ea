#include "idealtop/topolab.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealtop {

namespace {

using V = MembershipVerdict::V;

SetPtr residue_set(std::uint64_t r, std::uint64_t m) { return arith(r % m, m); }

SetPtr fiber_union(const FinSeq& s, Mask points) {
    SetPtr u = empty_set();
    for (const auto& [p, f] : s.fibers)
        if (points & (Mask{1} << p)) u = set_union(u, f);
    return u;
}

} // namespace

std::string ResSeq::str(const FinSpace& S) const {
    std::string out = "n mod " + std::to_string(m) + " -> [";
    for (std::size_t r = 0; r < pt.size(); ++r) {
        if (r) out += ",";
        out += S.points[pt[r]];
    }
    return out + "]";
}

std::vector<ResSeq> res_corpus(std::size_t n_points) {
    std::vector<ResSeq> out;
    for (std::uint64_t m = 1; m <= 4; ++m) {
        std::vector<std::size_t> pt(m, 0);
        for (;;) {
            out.push_back({m, pt});
            std::size_t i = 0;
            while (i < m && ++pt[i] == n_points) pt[i++] = 0;
            if (i == m) break;
        }
    }
    return out;
}

Mask res_limits(const FinSpace& S, const ResSeq& s, const IdealPtr& ideal) {
    Mask out = 0;
    for (std::size_t x = 0; x < S.size(); ++x) {
        Mask nbhd = S.min_nbhd_mask(x);
        std::vector<std::uint64_t> off;
        for (std::uint64_t r = 0; r < s.m; ++r)
            if (!(nbhd & (Mask{1} << s.pt[r]))) off.push_back(r);
        if (class_union_in_ideal(ideal, s.m, off) == Tri::Yes) out |= Mask{1} << x;
    }
    return out;
}

std::string FinSeq::str() const {
    std::string out = "finseq{";
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (i) out += "; ";
        out += space.points[fibers[i].first] + ": " + fibers[i].second->str();
    }
    return out + "}";
}

FinSeq make_finseq(const FinSpace& S, const std::vector<std::pair<std::string, SetPtr>>& fibers,
                   SetPtr domain) {
    FinSeq s;
    s.space = S;
    s.domain = std::move(domain);
    for (const auto& [label, f] : fibers) {
        int i = S.index_of(label);
        if (i < 0) throw std::invalid_argument("unknown point '" + label + "'");
        s.fibers.emplace_back(static_cast<std::size_t>(i), f);
    }
    for (std::uint64_t n = 1; n <= 512; ++n) {
        int covered = 0;
        for (const auto& [p, f] : s.fibers)
            if (member(f, n)) ++covered;
        if (covered != (member(s.domain, n) ? 1 : 0))
            throw std::invalid_argument("fibers do not partition the domain at index " +
                                        std::to_string(n));
    }
    return s;
}

FinSeq to_finseq(const FinSpace& S, const ResSeq& s) {
    FinSeq out;
    out.space = S;
    out.domain = naturals();
    for (std::size_t p = 0; p < S.size(); ++p) {
        SetPtr u = empty_set();
        bool any = false;
        for (std::uint64_t r = 0; r < s.m; ++r)
            if (s.pt[r] == p) {
                u = any ? set_union(u, residue_set(r, s.m)) : residue_set(r, s.m);
                any = true;
            }
        if (any) out.fibers.emplace_back(p, u);
    }
    return out;
}

Mask seq_limits(const FinSeq& s, const IdealPtr& ideal) {
    if (contains(ideal, s.domain).verdict == V::In)
        throw std::invalid_argument("thin sequence: its whole domain lies in the ideal");
    auto trace = restrict_ideal(ideal, s.domain).ideal;
    Mask out = 0;
    for (std::size_t x = 0; x < s.space.size(); ++x) {
        Mask off = s.space.full() & ~s.space.min_nbhd_mask(x);
        if (contains(trace, fiber_union(s, off)).verdict == V::In) out |= Mask{1} << x;
    }
    return out;
}

Mask i_closure(const FinSpace& S, Mask A, const IdealPtr& ideal) {
    if (A & ~S.full()) throw std::invalid_argument("closure argument is not a point subset");
    if (!A) return 0;
    Mask out = 0;
    for (const auto& s : res_corpus(S.size())) {
        bool inside = true;
        for (auto p : s.pt)
            if (!(A & (Mask{1} << p))) {
                inside = false;
                break;
            }
        if (inside) out |= res_limits(S, s, ideal);
    }
    return out;
}

bool is_i_closed(const FinSpace& S, Mask A, const IdealPtr& ideal) {
    return i_closure(S, A, ideal) == A;
}

bool is_i_open(const FinSpace& S, Mask A, const IdealPtr& ideal) {
    return is_i_closed(S, S.full() & ~A, ideal);
}

bool is_i_us(const FinSpace& S, const IdealPtr& ideal) {
    for (const auto& s : res_corpus(S.size())) {
        Mask lim = res_limits(S, s, ideal);
        if (lim && (lim & (lim - 1))) return false; // two distinct limits
    }
    return true;
}

bool is_i_sequential(const FinSpace& S, const IdealPtr& ideal) {
    for (Mask A = 0; A <= S.full(); ++A)
        if (is_i_closed(S, A, ideal) && closure_mask(S, A) != A) return false;
    return true;
}

CompactnessReport is_i_compact(const FinSpace& S, const IdealPtr& ideal) {
    for (const auto& s : res_corpus(S.size())) {
        bool found = false;
        for (std::size_t p = 0; p < S.size() && !found; ++p) {
            std::vector<std::uint64_t> mine;
            for (std::uint64_t r = 0; r < s.m; ++r)
                if (s.pt[r] == p) mine.push_back(r);
            if (mine.empty()) continue;
            if (class_union_in_ideal(ideal, s.m, mine) == Tri::No) {
                // the constant subsequence on this fiber converges to p
                found = true;
            }
        }
        if (!found)
            return {false, "no fiber of " + s.str(S) + " is certified outside " + ideal->name()};
    }
    return {true, "every corpus sequence has a fiber outside the ideal; its constant "
                  "subsequence converges to the fiber's point"};
}

std::string FinMap::str() const {
    std::string out = "map{";
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (i) out += ", ";
        out += source.points[i] + "->" + target.points[assign[i]];
    }
    return out + "}";
}

FinMap make_finmap(const FinSpace& source, const FinSpace& target,
                   const std::vector<std::pair<std::string, std::string>>& assignment) {
    FinMap f;
    f.source = source;
    f.target = target;
    f.assign.assign(source.size(), source.size());
    for (const auto& [from, to] : assignment) {
        int i = source.index_of(from), j = target.index_of(to);
        if (i < 0 || j < 0) throw std::invalid_argument("unknown point in map assignment");
        f.assign[static_cast<std::size_t>(i)] = static_cast<std::size_t>(j);
    }
    for (std::size_t i = 0; i < source.size(); ++i)
        if (f.assign[i] >= target.size())
            throw std::invalid_argument("map not total: " + source.points[i] + " unassigned");
    return f;
}

bool seq_continuous(const FinMap& f, const IdealPtr& ideal) {
    for (const auto& s : res_corpus(f.source.size())) {
        Mask lim = res_limits(f.source, s, ideal);
        ResSeq image{s.m, {}};
        for (auto p : s.pt) image.pt.push_back(f.assign[p]);
        Mask img_lim = res_limits(f.target, image, ideal);
        for (std::size_t x = 0; x < f.source.size(); ++x)
            if ((lim & (Mask{1} << x)) && !(img_lim & (Mask{1} << f.assign[x]))) return false;
    }
    return true;
}

bool preimage_continuous(const FinMap& f, const IdealPtr& ideal) {
    for (Mask B = 0; B <= f.target.full(); ++B) {
        if (!is_i_closed(f.target, B, ideal)) continue;
        Mask pre = 0;
        for (std::size_t i = 0; i < f.source.size(); ++i)
            if (B & (Mask{1} << f.assign[i])) pre |= Mask{1} << i;
        if (!is_i_closed(f.source, pre, ideal)) return false;
    }
    return true;
}

bool is_i_continuous(const FinMap& f, const IdealPtr& ideal) {
    bool a = seq_continuous(f, ideal);
    bool b = preimage_continuous(f, ideal);
    if (a != b)
        throw std::logic_error("continuity characterizations disagree on " + f.str() + " under " +
                               ideal->name());
    return a;
}

Thm212Report check_thm212_bc(const FinMap& f, const IdealPtr& ideal) {
    if (!is_i_continuous(f, ideal))
        throw std::invalid_argument("map is not I-continuous: " + f.str());

    Thm212Report rep;
    rep.b_pass = true;
    for (Mask B = 1; B <= f.target.full(); ++B) {
        if (!is_i_compact(subspace(f.target, B), ideal).compact) continue;
        Mask pre = 0;
        for (std::size_t i = 0; i < f.source.size(); ++i)
            if (B & (Mask{1} << f.assign[i])) pre |= Mask{1} << i;
        if (pre && !is_i_compact(subspace(f.source, pre), ideal).compact) {
            rep.b_pass = false;
            rep.detail = "preimage of " + f.target.mask_str(B) + " is not I-compact";
            break;
        }
    }

    rep.c_pass = true;
    for (const auto& s : res_corpus(f.target.size())) {
        Mask lim = res_limits(f.target, s, ideal);
        if (!lim) continue;
        Mask values = 0;
        for (auto p : s.pt) values |= Mask{1} << p;
        for (std::size_t x = 0; x < f.target.size(); ++x) {
            if (!(lim & (Mask{1} << x))) continue;
            Mask B = values | (Mask{1} << x);
            Mask pre = 0;
            for (std::size_t i = 0; i < f.source.size(); ++i)
                if (B & (Mask{1} << f.assign[i])) pre |= Mask{1} << i;
            if (pre && !is_i_compact(subspace(f.source, pre), ideal).compact) {
                rep.c_pass = false;
                rep.detail = "preimage of convergent set " + f.target.mask_str(B) +
                             " is not I-compact";
                break;
            }
        }
        if (!rep.c_pass) break;
    }
    if (rep.b_pass && rep.c_pass) rep.detail = "all preimages I-compact";
    return rep;
}

std::vector<IdealPtr> catalog_ideals() {
    return {ideal_fin(), ideal_i1(), ideal_i2(), ideal_i3(), ideal_id(), ideal_local_blocks()};
}

} // namespace idealtop
