// verify.hpp
// Self-contained invariant suites. Each suite re-derives its claim at a given
// scale through a route independent of the code under test and reports the
// first counterexample on failure. Shared by the CLI `verify` subcommand and
// the acceptance runner.

#pragma once

#include <string>

#include "lenscf/cf.hpp"

namespace lenscf {

struct SuiteResult {
    bool pass;
    long long checked;   // number of atomic checks performed
    std::string detail;  // empty on pass; minimal counterexample dump on fail
};

// Independent route to Z: depth-first search over the pointwise-bounded box
// of positive words, right to left on exact continuants, keeping only words
// whose blowdown reduction to (0) can be certified. Used to cross-check the
// forward generator. For a length-1 box the only value-0 word is (0).
std::vector<Word> bounded_zero_words_oracle(const Word& bounds);

// Exhaustive test of "value 0 <=> blowdown-reducible to (0)" over admissible
// positive words with length <= max_k and entries <= max_entry.
SuiteResult verify_lemma_zero_seq(long max_k, long max_entry);

// Generator vs oracle set equality over all coprime (p,q), p <= max_p.
SuiteResult verify_oracle_equivalence(long max_p);

// Every coprime (p,q), p <= max_p, with all a_i >= 5 has exactly one filling,
// the Artin one, and is reported unique and certified.
SuiteResult verify_kollar(long max_p);

// Every coprime (p,q), p <= max_p, meeting the n(r,s) hypotheses: each n(r,s)
// is a filling index, rank_h2(n(r,s)) = sum(b) - 2k - s, and the k-3 ranks
// are pairwise distinct.
SuiteResult verify_rank_formula(long max_p);

// |zero words of length k| = Catalan(k-1) for k <= max_k, with a fully naive
// Cartesian brute-force cross-check for k <= min(max_k, 7).
SuiteResult verify_catalan(long max_k);

// Sum(a_i - 1) = sum(b_j - 1) = h + k - 1 and cf_eval(hj_expand(n,d)) = n/d
// for all coprime pairs with p <= max_p.
SuiteResult verify_duality(long max_p);

// verify_s1s2 holds on every filling index emitted over p <= max_p.
SuiteResult verify_s1s2_suite(long max_p);

}  // namespace lenscf
