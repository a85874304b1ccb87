#ifndef SNCLAB_TESTS_SUPPORT_HPP
#define SNCLAB_TESTS_SUPPORT_HPP

#include "snclab/digraph_pair.hpp"
#include "snclab/prng.hpp"
#include "snclab/relation.hpp"

#include <initializer_list>
#include <vector>

namespace snclab::test {

/// Relation from 1-based adjacency rows, matching how the tables read.
inline Relation rel(std::initializer_list<std::initializer_list<int>> rows)
{
    Relation r(std::ssize(rows));
    Eigen::Index v = 0;
    for (const auto & row : rows) {
        for (int u : row)
            r.add(v, u - 1);
        ++v;
    }
    return r;
}

inline Relation cycle3()
{
    Relation r(3);
    r.add(0, 1);
    r.add(1, 2);
    r.add(2, 0);
    return r;
}

/// 0 -> 1 -> 2 plus 0 -> 2; vertex 2 is the sink.
inline Relation transitive3()
{
    Relation r(3);
    r.add(0, 1);
    r.add(1, 2);
    r.add(0, 2);
    return r;
}

/// Arbitrary digraph, loops allowed, each cell present with probability 1/2.
inline Relation random_relation(Eigen::Index n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    Relation r(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(2) == 1)
                r.add(u, v);
    return r;
}

/// Each unordered pair independently: no edge, u->v, or v->u.
inline Relation random_oriented(Eigen::Index n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    Relation r(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            switch (rng.below(3)) {
            case 1: r.add(u, v); break;
            case 2: r.add(v, u); break;
            default: break;
            }
        }
    return r;
}

inline Relation random_tournament(Eigen::Index n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    Relation r(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.below(2) == 1)
                r.add(u, v);
            else
                r.add(v, u);
        }
    return r;
}

/// The tournament with edge mask `bits` over pairs (u,v), u < v, in
/// lexicographic order: bit set means u -> v.
inline Relation tournament_from_bits(Eigen::Index n, std::uint64_t bits)
{
    Relation r(n);
    int i = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++i) {
            if (bits >> i & 1)
                r.add(u, v);
            else
                r.add(v, u);
        }
    return r;
}

inline WeightVector weights_of(std::initializer_list<int> ws)
{
    WeightVector w(std::ssize(ws));
    Eigen::Index v = 0;
    for (int x : ws)
        w(v++) = x;
    return w;
}

/// Integer weights in [lo, hi].
inline WeightVector random_integer_weights(Eigen::Index n, std::uint64_t seed, int lo, int hi)
{
    SplitMix64 rng(seed);
    WeightVector w(n);
    for (Eigen::Index v = 0; v < n; ++v)
        w(v) = Rational(static_cast<long>(lo + rng.below(hi - lo + 1)));
    return w;
}

/// Non-negative rationals with numerators up to 12 and denominators up to 8.
inline WeightVector random_rational_weights(Eigen::Index n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    WeightVector w(n);
    for (Eigen::Index v = 0; v < n; ++v)
        w(v) = Rational(static_cast<long>(rng.below(13)), static_cast<long>(1 + rng.below(8)));
    return w;
}

} // namespace snclab::test

#endif
