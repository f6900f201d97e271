// atlas.hpp
// Classification layer: for a coprime pair (p,q) with p > q >= 1, the index
// set of fillings (bounded zero words against the expansion of p/(p-q)), the
// per-filling invariants, and the uniqueness/multiplicity predicates.

#pragma once

#include <functional>

#include "lenscf/blowup.hpp"
#include "lenscf/cf.hpp"

namespace lenscf {

struct LensSpace {
    Int p, q;
    Word b_string;  // greedy expansion of p/(p-q), entries >= 2, length k
    Word a_string;  // greedy expansion of p/q, entries >= 2, length h
    long k = 0, h = 0;
};

struct FillingDescriptor {
    Word n;           // index word, pointwise <= b_string, value 0
    Int rank_h2;      // sum(b_i - n_i) - 1
    bool is_artin;    // n = (1,2,...,2,1) for k >= 2, or (0) for k = 1
    bool is_rational_homology_ball;  // rank_h2 = 0
    Witness witness;  // blowdown reduction of n to (0)
};

struct Atlas {
    LensSpace lens;
    std::vector<FillingDescriptor> fillings;  // lexicographic by n
    bool unique_up_to_blowup = false;         // |fillings| = 1
    bool kollar_certified = false;            // every a_i >= 5
    std::vector<Word> nrs_members;            // the (1,2^r,3,2^s,1,s+2) family
    long filling_count_lower_bound = 1;       // distinct ranks among nrs + artin
};

// Validates gcd(p,q)=1, p > q >= 1 and computes both expansions.
// Throws std::invalid_argument otherwise.
LensSpace make_lens(const Int& p, const Int& q);

// The Artin word for length k: (0) for k=1, (1,1) for k=2, else (1,2,...,2,1).
Word artin_word(long k);

// One descriptor per bounded zero word, in lexicographic order.
std::vector<FillingDescriptor> enumerate_fillings(const LensSpace& lens);

// sum(b_i - n_i) - 1. Throws std::invalid_argument unless n is a member of
// the index set for b (pointwise bounded and blowdown-reducible to (0)).
Int rank_h2(const Word& n, const Word& b);

// True iff every entry of the a-string is >= 5.
bool kollar_condition(const LensSpace& lens);

// The words (1, 2 x r, 3, 2 x s, 1, s+2) for r+s = k-4, when the hypotheses
// k >= 4, b_2..b_{k-2} >= 3, b_k >= k-2 hold; empty otherwise. Each member is
// verified to lie in the index set.
std::vector<Word> nrs_family(const LensSpace& lens);

Atlas build_atlas(const LensSpace& lens);

enum class SweepFilter { all, unique, multiple, kollar, qhb_present };

bool sweep_filter_accepts(SweepFilter f, const Atlas& atlas);

// Calls fn on build_atlas(p,q) for every coprime (p,q), 2 <= p <= p_max,
// 1 <= q < p, ascending in (p,q), keeping only atlases accepted by the
// filter. Throws std::invalid_argument if p_max < 2.
void sweep(const Int& p_max, SweepFilter filter, const std::function<void(const Atlas&)>& fn);

// The ascending (p,q) cell list a sweep visits; exposed so callers can
// distribute cells across workers and merge deterministically by index.
std::vector<std::pair<Int, Int>> sweep_cells(const Int& p_max);

}  // namespace lenscf
