// cf.cpp

#include "lenscf/cf.hpp"

#include <sstream>
#include <stdexcept>

namespace lenscf {

Word make_word(std::initializer_list<long> entries) {
    Word w;
    w.reserve(entries.size());
    for (long e : entries) w.emplace_back(e);
    return w;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

std::vector<Int> suffix_continuants(const Word& w) {
    const size_t k = w.size();
    std::vector<Int> s(k + 1);
    s[k] = 1;          // S_{k+1}
    Int prev = 0;      // S_{j+2}, starts as S_{k+2}
    for (size_t j = k; j-- > 0;) {
        s[j] = w[j] * s[j + 1] - prev;
        prev = s[j + 1];
    }
    return s;
}

CFValue cf_eval(const Word& w) {
    const size_t k = w.size();
    if (k == 0) return CFValue::vanishing(2);  // value carrier (1); S_2 = 0
    std::vector<Int> s = suffix_continuants(w);
    // Scan for the largest j in [2, k] with S_j = 0; that denominator is the
    // first one hit by the nested right-to-left evaluation.
    for (size_t j = k; j >= 2; --j)
        if (s[j - 1] == 0) return CFValue::vanishing(static_cast<long>(j));
    Rational v(s[0], s[1]);
    v.canonicalize();  // reduce to lowest terms, denominator > 0
    return CFValue::ok(v);
}

Word hj_expand(const Int& num, const Int& den) {
    if (den < 1 || num <= den) throw std::invalid_argument("hj_expand: need num > den >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw std::invalid_argument("hj_expand: num and den must be coprime");
    Word out;
    Int n = num, d = den, b;
    while (d != 0) {
        mpz_cdiv_q(b.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        out.push_back(b);
        Int next = b * d - n;  // the inverted remainder's new denominator
        n = d;
        d = next;
    }
    return out;
}

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace lenscf
