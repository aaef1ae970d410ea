#include "idealtop/finspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idealtop {

bool FinSpace::is_open(Mask m) const {
    return std::binary_search(opens.begin(), opens.end(), m);
}

Mask FinSpace::min_nbhd_mask(std::size_t i) const {
    if (i >= points.size()) throw std::invalid_argument("point index out of range");
    Mask out = full();
    for (Mask o : opens)
        if (o & (Mask{1} << i)) out &= o;
    return out;
}

int FinSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == label) return static_cast<int>(i);
    return -1;
}

std::string FinSpace::mask_str(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (m & (Mask{1} << i)) {
            if (!first) s += ",";
            s += points[i];
            first = false;
        }
    return s + "}";
}

std::string FinSpace::str() const {
    std::string s = "space{points: ";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) s += ",";
        s += points[i];
    }
    s += "; opens: ";
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (i) s += ", ";
        s += mask_str(opens[i]);
    }
    return s + "}";
}

FinSpace make_space(std::vector<std::string> points, std::vector<Mask> opens) {
    if (points.empty() || points.size() > 6)
        throw std::invalid_argument("space must have 1 to 6 points");
    std::set<std::string> labels(points.begin(), points.end());
    if (labels.size() != points.size()) throw std::invalid_argument("duplicate point labels");

    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    FinSpace S;
    S.points = std::move(points);
    S.opens = std::move(opens);

    Mask full = S.full();
    for (Mask o : S.opens)
        if (o & ~full) throw std::invalid_argument("open set mentions a point outside the space");
    if (!S.is_open(0) || !S.is_open(full))
        throw std::invalid_argument("the empty set and the whole space must be open");
    for (Mask a : S.opens)
        for (Mask b : S.opens) {
            if (!S.is_open(a | b))
                throw std::invalid_argument("opens not closed under union: " + S.mask_str(a) +
                                            " and " + S.mask_str(b));
            if (!S.is_open(a & b))
                throw std::invalid_argument("opens not closed under intersection: " +
                                            S.mask_str(a) + " and " + S.mask_str(b));
        }
    return S;
}

FinSpace discrete_space(std::vector<std::string> points) {
    std::vector<Mask> opens;
    for (Mask m = 0; m < (Mask{1} << points.size()); ++m) opens.push_back(m);
    return make_space(std::move(points), std::move(opens));
}

FinSpace indiscrete_space(std::vector<std::string> points) {
    Mask full = static_cast<Mask>((std::uint32_t{1} << points.size()) - 1);
    return make_space(std::move(points), {0, full});
}

FinSpace sierpinski() { return make_space({"a", "b"}, {0, 1, 3}); }

std::vector<std::string> min_nbhd(const FinSpace& S, const std::string& x) {
    int i = S.index_of(x);
    if (i < 0) throw std::invalid_argument("unknown point '" + x + "'");
    Mask m = S.min_nbhd_mask(static_cast<std::size_t>(i));
    std::vector<std::string> out;
    for (std::size_t j = 0; j < S.size(); ++j)
        if (m & (Mask{1} << j)) out.push_back(S.points[j]);
    return out;
}

Mask closure_mask(const FinSpace& S, Mask A) {
    Mask out = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S.min_nbhd_mask(i) & A) out |= Mask{1} << i;
    return out;
}

bool is_t1(const FinSpace& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        if (closure_mask(S, Mask{1} << i) != (Mask{1} << i)) return false;
    return true;
}

FinSpace subspace(const FinSpace& S, Mask keep) {
    std::vector<std::string> pts;
    std::vector<std::size_t> old_index;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (keep & (Mask{1} << i)) {
            pts.push_back(S.points[i]);
            old_index.push_back(i);
        }
    if (pts.empty()) throw std::invalid_argument("subspace on the empty set");

    std::vector<Mask> opens;
    for (Mask o : S.opens) {
        Mask m = 0;
        for (std::size_t j = 0; j < old_index.size(); ++j)
            if (o & (Mask{1} << old_index[j])) m |= Mask{1} << j;
        opens.push_back(m);
    }
    return make_space(std::move(pts), std::move(opens));
}

std::vector<FinSpace> enumerate_topologies(std::size_t n) {
    if (n < 1 || n > 4) throw std::invalid_argument("topology enumeration supports 1 to 4 points");
    const std::vector<std::string> names = {"a", "b", "c", "d"};
    std::vector<std::string> pts(names.begin(), names.begin() + n);

    const std::uint32_t subsets = std::uint32_t{1} << n;
    const std::uint64_t families = std::uint64_t{1} << subsets;
    std::vector<FinSpace> out;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        if (!(fam & 1) || !(fam >> (subsets - 1) & 1)) continue; // ∅ and full
        bool closed = true;
        for (std::uint32_t a = 0; a < subsets && closed; ++a) {
            if (!(fam >> a & 1)) continue;
            for (std::uint32_t b = a + 1; b < subsets && closed; ++b) {
                if (!(fam >> b & 1)) continue;
                if (!(fam >> (a | b) & 1) || !(fam >> (a & b) & 1)) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<Mask> opens;
        for (std::uint32_t a = 0; a < subsets; ++a)
            if (fam >> a & 1) opens.push_back(a);
        out.push_back(make_space(pts, std::move(opens)));
    }
    return out;
}

} // namespace idealtop
