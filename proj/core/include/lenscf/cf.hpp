// cf.hpp
// Negative (Hirzebruch-Jung) continued fractions with exact arithmetic:
// suffix continuants, totalized evaluation, greedy-ceiling expansion.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lenscf {

using Int = mpz_class;
using Rational = mpq_class;

// A word is a finite integer tuple. It serves three roles: expansion of a
// fraction (entries >= 2), filling index (entries >= 0), and raw input to the
// total evaluators (any integers). Role constraints are enforced by consumers.
using Word = std::vector<Int>;

Word make_word(std::initializer_list<long> entries);
std::string word_str(const Word& w);  // entries joined by single spaces

// Suffix continuants (S_1,...,S_{k+1}) of w: with S_{k+1} = 1 and S_{k+2} = 0,
// S_j = w_j * S_{j+1} - S_{j+2} for j = k..1. The nested value
// w_1 - 1/(w_2 - 1/(...)) equals S_1/S_2 whenever S_2,...,S_k are all nonzero.
std::vector<Int> suffix_continuants(const Word& w);

// Totalized evaluation: either the exact rational value, or the largest index
// j >= 2 whose suffix continuant vanishes (= the innermost vanishing
// denominator met by right-to-left evaluation). The empty word carries S = (1)
// and its would-be value 1/0 is reported as vanishing at index 2 (= k+2).
struct CFValue {
    bool admissible;
    Rational value;                    // set iff admissible
    long first_vanishing_suffix_index; // set iff !admissible, else 0

    static CFValue ok(Rational v) { return {true, std::move(v), 0}; }
    static CFValue vanishing(long j) { return {false, Rational(0), j}; }
    bool operator==(const CFValue& o) const {
        return admissible == o.admissible &&
               (admissible ? value == o.value
                           : first_vanishing_suffix_index == o.first_vanishing_suffix_index);
    }
};

CFValue cf_eval(const Word& w);

// Greedy ceiling expansion of num/den (num > den >= 1, coprime) into the
// unique word with all entries >= 2 evaluating back to num/den.
// Throws std::invalid_argument on out-of-order or non-coprime input.
Word hj_expand(const Int& num, const Int& den);

Word reverse(const Word& w);

}  // namespace lenscf
