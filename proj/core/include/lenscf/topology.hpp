// topology.hpp
// Sanity layer tying words to closed 3-manifolds: the boundary presented by
// integer surgery on a linear chain of unknots, via the leading pair of
// suffix continuants.

#pragma once

#include "lenscf/cf.hpp"

namespace lenscf {

// Result of a linear-chain surgery presentation, plus the raw leading
// continuants so any downstream consumer can re-normalize under a different
// orientation convention.
struct ChainResult {
    enum class Kind { S1xS2, Lens, S3 };
    Kind kind;
    Int P, Q;       // set iff kind == Lens: P >= 2, 1 <= Q < P, gcd(P,Q)=1
    Int s1, s2;     // leading suffix continuants of the input word

    bool operator==(const ChainResult& o) const {
        return kind == o.kind && (kind != Kind::Lens || (P == o.P && Q == o.Q));
    }
};

// The 3-manifold presented by surgery on a chain with the given framings:
// P = |S_1|; S1xS2 when P = 0, S3 when P = 1, else Lens(P, S_2 mod P
// normalized into [1, P-1]). Total: defined on inadmissible words too.
ChainResult chain_boundary(const Word& framings);

// True iff the chain with framings n bounds S1 x S2 (leading continuant 0).
bool verify_s1s2(const Word& n);

// Boundary of the linear plumbing on spheres of self-intersection -a_i:
// Lens(p,q) with p/q the value of the string. Entries must all be >= 2
// (throws std::invalid_argument otherwise), which forces value > 1.
ChainResult plumbing_boundary(const Word& a_string);

}  // namespace lenscf
