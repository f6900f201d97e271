#include "lenscf/topology.hpp"

#include <stdexcept>

namespace lenscf {

ChainResult chain_boundary(const Word& framings) {
    auto s = suffix_continuants(framings);
    ChainResult r;
    r.s1 = s[0];
    r.s2 = s.size() > 1 ? s[1] : Int(0);  // S_2 of the empty word is S_{k+2} = 0
    r.P = abs(r.s1);
    r.Q = 0;
    if (r.P == 0) {
        r.kind = ChainResult::Kind::S1xS2;
    } else if (r.P == 1) {
        r.kind = ChainResult::Kind::S3;
        r.P = 0;
    } else {
        r.kind = ChainResult::Kind::Lens;
        // S_1 and S_2 are coprime (the recurrence preserves the gcd down to
        // gcd(1,0)), so the residue never lands on 0.
        Int q = r.s2 % r.P;  // truncated; may be negative
        if (q < 0) q += r.P;
        r.Q = q;
    }
    return r;
}

bool verify_s1s2(const Word& n) {
    return chain_boundary(n).kind == ChainResult::Kind::S1xS2;
}

ChainResult plumbing_boundary(const Word& a_string) {
    for (const auto& a : a_string)
        if (a < 2)
            throw std::invalid_argument("plumbing_boundary: entry < 2 in " +
                                        word_str(a_string));
    // All entries >= 2 force strictly decreasing positive continuants, so the
    // result is always a genuine lens space (or S3 for the empty string).
    return chain_boundary(a_string);
}

}  // namespace lenscf
