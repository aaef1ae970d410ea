#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idealtop {

// Subsets of a finite point set as bitmasks, bit i = point i. Spaces have at
// most 6 points, so a 32-bit mask is plenty.
using Mask = std::uint32_t;

class FinSpace {
public:
    std::vector<std::string> points;
    std::vector<Mask> opens; // sorted, deduplicated, validated

    std::size_t size() const { return points.size(); }
    Mask full() const { return static_cast<Mask>((std::uint32_t{1} << points.size()) - 1); }
    bool is_open(Mask m) const;
    Mask min_nbhd_mask(std::size_t i) const; // intersection of opens containing point i
    int index_of(const std::string& label) const;
    std::string mask_str(Mask m) const; // "{a,b}"
    std::string str() const;
};

// validates: labels distinct, ∅ and the full set open, family closed under
// pairwise union and intersection; throws std::invalid_argument
FinSpace make_space(std::vector<std::string> points, std::vector<Mask> opens);

FinSpace discrete_space(std::vector<std::string> points);
FinSpace indiscrete_space(std::vector<std::string> points);
FinSpace sierpinski(); // points a,b; opens {}, {a}, {a,b}

// label-level minimal open neighbourhood; throws on unknown point
std::vector<std::string> min_nbhd(const FinSpace& S, const std::string& x);

Mask closure_mask(const FinSpace& S, Mask A); // classical closure
bool is_t1(const FinSpace& S);

// induced topology on the points of `keep`, point order preserved
FinSpace subspace(const FinSpace& S, Mask keep);

// all topologies on n labeled points (n ≤ 4); counts 1, 4, 29, 355
std::vector<FinSpace> enumerate_topologies(std::size_t n);

} // namespace idealtop
