// blowup.hpp
// Tuple-level blowup/blowdown calculus: certificates for reducing a word to
// (0) by blowdowns, and generation of all zero continued fractions (the words
// reachable from (0) by blowups), optionally pointwise bounded.

#pragma once

#include <optional>

#include "lenscf/cf.hpp"

namespace lenscf {

// One reduction step: the 1-based position whose entry (equal to 1) was
// removed, with both existing neighbors decremented.
using BlowdownStep = long;

// An ordered blowdown sequence taking its source word to exactly (0);
// replaying the inverse blowups from (0) reproduces the source.
struct Witness {
    std::vector<BlowdownStep> steps;
    bool operator==(const Witness& o) const { return steps == o.steps; }
};

// Remove entry s (1-based, must equal 1) and decrement each existing
// neighbor. Throws std::invalid_argument unless length >= 2 and w_s = 1.
Word blowdown(const Word& w, long s);

// Insert 1 at slot pos (1-based, 1..length+1) and increment each existing
// neighbor; exact inverse of blowdown at the same position.
// Throws std::invalid_argument on an out-of-range position.
Word blowup(const Word& w, long pos);

// Search for a blowdown sequence from w (entries >= 0) to (0), backtracking
// over every entry equal to 1 at each step in increasing position order.
// Returns the first complete reduction found, or nullopt if none exists.
std::optional<Witness> reduce_to_zero(const Word& w);

// Apply a witness to w; true iff every step is a legal blowdown and the
// final word is exactly (0). Lets external data be checked independently.
bool replay_witness(const Word& w, const Witness& wit);

// All words of length k reachable from (0) by exactly k-1 blowups,
// deduplicated and sorted lexicographically. Throws on k < 1.
std::vector<Word> enumerate_zero_words(long k);

// The subset of enumerate_zero_words(length(bounds)) lying pointwise <= the
// bounds word (entries >= 0). Computed by blowup-tree search pruned by
// order-preserving subsequence embedding into the bounds: entries only grow
// and insertions only lengthen under further blowups, so a partial word
// without such an embedding has no bounded descendant.
std::vector<Word> enumerate_zero_words_bounded(const Word& bounds);

}  // namespace lenscf
