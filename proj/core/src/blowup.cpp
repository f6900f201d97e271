// blowup.cpp

#include "lenscf/blowup.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace lenscf {

Word blowdown(const Word& w, long s) {
    const long k = static_cast<long>(w.size());
    if (k < 2) throw std::invalid_argument("blowdown: word length must be >= 2");
    if (s < 1 || s > k) throw std::invalid_argument("blowdown: position out of range");
    if (w[s - 1] != 1) throw std::invalid_argument("blowdown: entry at position is not 1");
    Word v;
    v.reserve(k - 1);
    for (long i = 0; i < k; ++i)
        if (i != s - 1) v.push_back(w[i]);
    if (s - 2 >= 0) v[s - 2] -= 1;
    if (s - 1 < k - 1) v[s - 1] -= 1;
    return v;
}

Word blowup(const Word& w, long pos) {
    const long k = static_cast<long>(w.size());
    if (pos < 1 || pos > k + 1) throw std::invalid_argument("blowup: position out of range");
    Word v;
    v.reserve(k + 1);
    for (long i = 0; i < pos - 1; ++i) v.push_back(w[i]);
    v.push_back(1);
    for (long i = pos - 1; i < k; ++i) v.push_back(w[i]);
    if (pos - 2 >= 0) v[pos - 2] += 1;
    if (pos < k + 1) v[pos] += 1;
    return v;
}

namespace {

// Backtracking core. A blowdown path to (0), read backwards, is a blowup path
// from (0), and blowups starting at (0) produce only positive tuples; so any
// branch that creates a nonpositive entry (other than terminal (0)) is dead.
bool reduce_rec(const Word& w, std::vector<BlowdownStep>& steps, std::set<Word>& dead) {
    const long k = static_cast<long>(w.size());
    if (k == 1) return w[0] == 0;
    if (dead.count(w)) return false;
    for (long s = 1; s <= k; ++s) {
        if (w[s - 1] != 1) continue;
        Word v = blowdown(w, s);
        bool viable = true;
        if (v.size() >= 2) {
            for (const Int& e : v)
                if (e < 1) { viable = false; break; }
        }
        if (!viable) continue;
        steps.push_back(s);
        if (reduce_rec(v, steps, dead)) return true;
        steps.pop_back();
    }
    dead.insert(w);
    return false;
}

}  // namespace

std::optional<Witness> reduce_to_zero(const Word& w) {
    if (w.empty()) return std::nullopt;
    for (const Int& e : w)
        if (e < 0) return std::nullopt;
    Witness wit;
    std::set<Word> dead;
    if (reduce_rec(w, wit.steps, dead)) return wit;
    return std::nullopt;
}

bool replay_witness(const Word& w, const Witness& wit) {
    Word cur = w;
    for (BlowdownStep s : wit.steps) {
        if (cur.size() < 2 || s < 1 || s > static_cast<long>(cur.size())) return false;
        if (cur[s - 1] != 1) return false;
        cur = blowdown(cur, s);
    }
    return cur.size() == 1 && cur[0] == 0;
}

namespace {

// Generation runs on machine integers: a word of length l reachable from (0)
// has every entry <= l-1 (each of the l-1 blowups increments an entry at most
// once), so values stay tiny regardless of how large the bounds are.
using SmallWord = std::vector<int64_t>;

// Greedy order-preserving embedding of the blowup of w at slot pos (0-based,
// 0..len(w)) into caps, entry-by-entry without materializing the candidate.
bool blowup_embeds(const SmallWord& w, size_t pos, const std::vector<int64_t>& caps) {
    const size_t l = w.size(), k = caps.size();
    size_t j = 0;
    auto place = [&](int64_t e) {
        while (j < k && e > caps[j]) ++j;
        if (j == k) return false;
        ++j;
        return true;
    };
    for (size_t t = 0; t < pos; ++t)
        if (!place(w[t] + (t + 1 == pos ? 1 : 0))) return false;
    if (!place(1)) return false;
    for (size_t t = pos; t < l; ++t)
        if (!place(w[t] + (t == pos ? 1 : 0))) return false;
    return true;
}

SmallWord apply_blowup(const SmallWord& w, size_t pos) {
    SmallWord v;
    v.reserve(w.size() + 1);
    v.insert(v.end(), w.begin(), w.begin() + pos);
    v.push_back(1);
    v.insert(v.end(), w.begin() + pos, w.end());
    if (pos >= 1) v[pos - 1] += 1;
    if (pos + 1 < v.size()) v[pos + 1] += 1;
    return v;
}

std::vector<Word> to_words_sorted(const std::set<SmallWord>& level) {
    std::vector<Word> out;
    out.reserve(level.size());
    for (const SmallWord& s : level) {
        Word w;
        w.reserve(s.size());
        for (int64_t e : s) w.emplace_back(static_cast<long>(e));
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Word> enumerate_zero_words(long k) {
    if (k < 1) throw std::invalid_argument("enumerate_zero_words: length must be >= 1");
    std::set<SmallWord> cur = {SmallWord{0}};
    for (long level = 1; level < k; ++level) {
        std::set<SmallWord> next;
        for (const SmallWord& w : cur)
            for (size_t pos = 0; pos <= w.size(); ++pos)
                next.insert(apply_blowup(w, pos));
        cur = std::move(next);
    }
    return to_words_sorted(cur);
}

std::vector<Word> enumerate_zero_words_bounded(const Word& bounds) {
    const size_t k = bounds.size();
    for (const Int& b : bounds)
        if (b < 0) throw std::invalid_argument("enumerate_zero_words_bounded: bounds entries must be >= 0");
    if (k == 0) return {};
    if (k == 1) return {Word{Int(0)}};  // (0) <= (b_1) for any b_1 >= 0

    // Entries of any word in the tree stay < k+1, so larger bounds act as no
    // bound at all; capping keeps the comparison in machine range.
    std::vector<int64_t> caps(k);
    const Int capval(static_cast<long>(k) + 1);
    for (size_t i = 0; i < k; ++i)
        caps[i] = (bounds[i] > capval) ? static_cast<int64_t>(k) + 1 : bounds[i].get_si();

    std::set<SmallWord> cur = {SmallWord{0}};
    for (size_t level = 1; level < k; ++level) {
        std::set<SmallWord> next;
        for (const SmallWord& w : cur)
            for (size_t pos = 0; pos <= w.size(); ++pos)
                if (blowup_embeds(w, pos, caps)) next.insert(apply_blowup(w, pos));
        cur = std::move(next);
    }
    std::set<SmallWord> kept;
    for (const SmallWord& w : cur) {
        bool ok = true;
        for (size_t i = 0; i < k; ++i)
            if (w[i] > caps[i]) { ok = false; break; }
        if (ok) kept.insert(w);
    }
    return to_words_sorted(kept);
}

}  // namespace lenscf
