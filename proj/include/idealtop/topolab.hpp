#pragma once

#include "idealtop/finspace.hpp"
#include "idealtop/ideals.hpp"

namespace idealtop {

// Sequence in a finite space given by residue classes: index n maps to the
// point pt[n mod m]. This is the whole quantification corpus for the I-notions
// below: convergence in a finite space only depends on which fiber unions lie
// in the ideal, so residue-class fiber maps with m <= 4 already exhibit every
// membership pattern the catalog ideals can distinguish on small spaces.
struct ResSeq {
    std::uint64_t m = 1;
    std::vector<std::size_t> pt; // size m, point index for each residue
    std::string str(const FinSpace& S) const;
};

// all assignments of residues mod 1..4 to n_points points (constants are m=1)
std::vector<ResSeq> res_corpus(std::size_t n_points);

// analytic limit kernel: x is a limit iff the union of residue classes sent
// outside min_nbhd(x) lies in the ideal
Mask res_limits(const FinSpace& S, const ResSeq& s, const IdealPtr& ideal);

// general fiber-map sequence, symbolic index sets
struct FinSeq {
    FinSpace space;
    std::vector<std::pair<std::size_t, SetPtr>> fibers; // point index, index set
    SetPtr domain;
    std::string str() const;
};

// fibers must partition the domain (checked on a window); unknown labels throw
FinSeq make_finseq(const FinSpace& S, const std::vector<std::pair<std::string, SetPtr>>& fibers,
                   SetPtr domain = naturals());
FinSeq to_finseq(const FinSpace& S, const ResSeq& s);

// reference limit computation through the symbolic membership engine;
// throws std::invalid_argument when the domain is thin (inside the ideal)
Mask seq_limits(const FinSeq& s, const IdealPtr& ideal);

Mask i_closure(const FinSpace& S, Mask A, const IdealPtr& ideal);
bool is_i_closed(const FinSpace& S, Mask A, const IdealPtr& ideal);
bool is_i_open(const FinSpace& S, Mask A, const IdealPtr& ideal);

bool is_i_us(const FinSpace& S, const IdealPtr& ideal);
bool is_i_sequential(const FinSpace& S, const IdealPtr& ideal);

struct CompactnessReport {
    bool compact = false;
    std::string witness; // convergent constant-subsequence witness, or the defeating sequence
};
CompactnessReport is_i_compact(const FinSpace& S, const IdealPtr& ideal);

struct FinMap {
    FinSpace source, target;
    std::vector<std::size_t> assign; // per source point index
    std::string str() const;
};
FinMap make_finmap(const FinSpace& source, const FinSpace& target,
                   const std::vector<std::pair<std::string, std::string>>& assignment);

bool seq_continuous(const FinMap& f, const IdealPtr& ideal);      // limit preservation
bool preimage_continuous(const FinMap& f, const IdealPtr& ideal); // I-closed preimages
// both characterizations; throws std::logic_error if they ever disagree
bool is_i_continuous(const FinMap& f, const IdealPtr& ideal);

struct Thm212Report {
    bool b_pass = false; // preimages of I-compact subsets are I-compact
    bool c_pass = false; // preimages of convergent-sequence-with-limit sets are I-compact
    std::string detail;
};
Thm212Report check_thm212_bc(const FinMap& f, const IdealPtr& ideal);

std::vector<IdealPtr> catalog_ideals();

} // namespace idealtop
