#include "idealtop/onepoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealtop {

namespace {

bool opens_correspond(const FinSpace& A, const FinSpace& B, const std::vector<std::size_t>& bij) {
    if (A.opens.size() != B.opens.size()) return false;
    for (Mask o : A.opens) {
        Mask img = 0;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (o & (Mask{1} << i)) img |= Mask{1} << bij[i];
        if (!B.is_open(img)) return false;
    }
    return true;
}

} // namespace

std::string OnePointSpace::str() const { return space.str(); }

OnePointSpace build_onepoint(const FinSpace& S, const IdealPtr& ideal,
                             const std::string& alpha_label) {
    if (S.index_of(alpha_label) >= 0)
        throw std::invalid_argument("alpha label '" + alpha_label + "' already used by the base");

    OnePointSpace T;
    T.base = S;
    T.alpha = S.size();
    const Mask abit = Mask{1} << T.alpha;

    std::vector<std::string> pts = S.points;
    pts.push_back(alpha_label);
    std::vector<Mask> opens = S.opens;
    for (Mask U : S.opens) { // X−U closed forces U open, so open U are the candidates
        Mask comp = S.full() & ~U;
        bool comp_compact = comp == 0 || is_i_compact(subspace(S, comp), ideal).compact;
        if (comp_compact) opens.push_back(U | abit);
    }
    try {
        T.space = make_space(std::move(pts), std::move(opens));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("extension rule produced a non-topology: ") + e.what());
    }

    T.alpha_isolated = T.space.is_open(abit);
    T.base_dense = closure_mask(T.space, S.full()) == T.space.full();
    return T;
}

bool is_hausdorff(const FinSpace& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            bool separated = false;
            for (Mask a : S.opens) {
                if (!(a & (Mask{1} << i)) || (a & (Mask{1} << j))) continue;
                for (Mask b : S.opens)
                    if ((b & (Mask{1} << j)) && !(a & b)) {
                        separated = true;
                        break;
                    }
                if (separated) break;
            }
            if (!separated) return false;
        }
    return true;
}

bool is_hausdorff(const OnePointSpace& T) { return is_hausdorff(T.space); }

ExtendReport extend_map(const FinMap& f, const IdealPtr& ideal) {
    ExtendReport rep;
    rep.base_report = check_thm212_bc(f, ideal);

    auto shat = build_onepoint(f.source, ideal);
    auto that = build_onepoint(f.target, ideal);
    rep.fhat.source = shat.space;
    rep.fhat.target = that.space;
    rep.fhat.assign = f.assign;
    rep.fhat.assign.push_back(that.alpha);

    rep.fhat_continuous = true;
    for (Mask o : that.space.opens) {
        Mask pre = 0;
        for (std::size_t i = 0; i < shat.space.size(); ++i)
            if (o & (Mask{1} << rep.fhat.assign[i])) pre |= Mask{1} << i;
        if (!shat.space.is_open(pre)) {
            rep.fhat_continuous = false;
            break;
        }
    }
    rep.fhat_open = true;
    for (Mask o : shat.space.opens) {
        Mask img = 0;
        for (std::size_t i = 0; i < shat.space.size(); ++i)
            if (o & (Mask{1} << i)) img |= Mask{1} << rep.fhat.assign[i];
        if (!that.space.is_open(img)) {
            rep.fhat_open = false;
            break;
        }
    }
    return rep;
}

std::optional<std::vector<std::size_t>> homeo_search(const OnePointSpace& A,
                                                     const OnePointSpace& B) {
    if (A.space.size() != B.space.size()) return std::nullopt;
    const std::size_t n = A.space.size();

    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    if (A.alpha == B.alpha && opens_correspond(A.space, B.space, identity)) return identity;

    std::vector<std::size_t> perm = identity;
    do {
        if (perm[A.alpha] != B.alpha) continue;
        if (opens_correspond(A.space, B.space, perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace idealtop
