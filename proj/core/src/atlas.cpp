// atlas.cpp

#include "lenscf/atlas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lenscf {

LensSpace make_lens(const Int& p, const Int& q) {
    if (q < 1 || p <= q) throw std::invalid_argument("make_lens: need p > q >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("make_lens: p and q must be coprime");
    LensSpace lens;
    lens.p = p;
    lens.q = q;
    lens.b_string = hj_expand(p, p - q);
    lens.a_string = hj_expand(p, q);
    lens.k = static_cast<long>(lens.b_string.size());
    lens.h = static_cast<long>(lens.a_string.size());
    return lens;
}

Word artin_word(long k) {
    if (k < 1) throw std::invalid_argument("artin_word: length must be >= 1");
    if (k == 1) return make_word({0});
    Word w(k, Int(2));
    w.front() = 1;
    w.back() = 1;
    return w;
}

static bool is_member(const Word& n, const Word& b) {
    if (n.size() != b.size()) return false;
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] < 0 || n[i] > b[i]) return false;
    return reduce_to_zero(n).has_value();
}

Int rank_h2(const Word& n, const Word& b) {
    if (!is_member(n, b))
        throw std::invalid_argument("rank_h2: word is not an index for these bounds");
    Int r(-1);
    for (size_t i = 0; i < n.size(); ++i) r += b[i] - n[i];
    return r;
}

std::vector<FillingDescriptor> enumerate_fillings(const LensSpace& lens) {
    std::vector<FillingDescriptor> out;
    const Word artin = artin_word(lens.k);
    for (Word& n : enumerate_zero_words_bounded(lens.b_string)) {
        FillingDescriptor d;
        d.rank_h2 = -1;
        for (size_t i = 0; i < n.size(); ++i) d.rank_h2 += lens.b_string[i] - n[i];
        d.is_artin = (n == artin);
        d.is_rational_homology_ball = (d.rank_h2 == 0);
        auto wit = reduce_to_zero(n);
        if (!wit) throw std::logic_error("enumerate_fillings: generated word has no reduction");
        d.witness = std::move(*wit);
        d.n = std::move(n);
        out.push_back(std::move(d));
    }
    return out;  // generator output is already lexicographically sorted
}

bool kollar_condition(const LensSpace& lens) {
    for (const Int& a : lens.a_string)
        if (a < 5) return false;
    return true;
}

std::vector<Word> nrs_family(const LensSpace& lens) {
    const long k = lens.k;
    const Word& b = lens.b_string;
    if (k < 4) return {};
    for (long i = 2; i <= k - 2; ++i)
        if (b[i - 1] < 3) return {};
    if (b[k - 1] < k - 2) return {};
    std::vector<Word> out;
    for (long r = 0; r <= k - 4; ++r) {
        const long s = k - 4 - r;
        Word n;
        n.reserve(k);
        n.emplace_back(1);
        for (long i = 0; i < r; ++i) n.emplace_back(2);
        n.emplace_back(3);
        for (long i = 0; i < s; ++i) n.emplace_back(2);
        n.emplace_back(1);
        n.emplace_back(s + 2);
        if (!is_member(n, b))
            throw std::logic_error("nrs_family: member fails index-set verification");
        out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end());  // canonical order, same as fillings
    return out;
}

Atlas build_atlas(const LensSpace& lens) {
    Atlas a;
    a.lens = lens;
    a.fillings = enumerate_fillings(lens);
    a.unique_up_to_blowup = (a.fillings.size() == 1);
    a.kollar_certified = kollar_condition(lens);
    a.nrs_members = nrs_family(lens);
    std::set<Int> ranks;
    for (const Word& n : a.nrs_members) ranks.insert(rank_h2(n, lens.b_string));
    ranks.insert(rank_h2(artin_word(lens.k), lens.b_string));
    a.filling_count_lower_bound = std::max<long>(1, static_cast<long>(ranks.size()));
    return a;
}

bool sweep_filter_accepts(SweepFilter f, const Atlas& atlas) {
    switch (f) {
        case SweepFilter::all: return true;
        case SweepFilter::unique: return atlas.unique_up_to_blowup;
        case SweepFilter::multiple: return !atlas.unique_up_to_blowup;
        case SweepFilter::kollar: return atlas.kollar_certified;
        case SweepFilter::qhb_present:
            for (const FillingDescriptor& d : atlas.fillings)
                if (d.is_rational_homology_ball) return true;
            return false;
    }
    return false;
}

std::vector<std::pair<Int, Int>> sweep_cells(const Int& p_max) {
    if (p_max < 2) throw std::invalid_argument("sweep: p_max must be >= 2");
    std::vector<std::pair<Int, Int>> cells;
    Int g;
    for (Int p = 2; p <= p_max; ++p)
        for (Int q = 1; q < p; ++q) {
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g == 1) cells.emplace_back(p, q);
        }
    return cells;
}

void sweep(const Int& p_max, SweepFilter filter, const std::function<void(const Atlas&)>& fn) {
    for (const auto& [p, q] : sweep_cells(p_max)) {
        Atlas a = build_atlas(make_lens(p, q));
        if (sweep_filter_accepts(filter, a)) fn(a);
    }
}

}  // namespace lenscf
