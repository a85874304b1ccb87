#ifndef SNCLAB_DIGRAPH_PAIR_HPP
#define SNCLAB_DIGRAPH_PAIR_HPP

#include "snclab/rational.hpp"
#include "snclab/relation.hpp"

#include <string>
#include <vector>

namespace snclab {

/// Non-negative exact rational weight per vertex.
using WeightVector = RationalVector;

/// All-ones; the unweighted checks are this instance.
WeightVector uniform_weights(Eigen::Index n);

/// Throws if any entry is negative or the length disagrees with n.
void require_weights(const WeightVector & w, Eigen::Index n);

/**
 * Two digraphs on a shared vertex set. The interesting hypotheses couple
 * them through the identity graph: A and B^T intersect in exactly the loops,
 * and for tournament pairs additionally cover all of V x V.
 */
struct DigraphPair {
    Relation a;
    Relation b;

    DigraphPair(Relation a_, Relation b_) : a(std::move(a_)), b(std::move(b_))
    {
        if (a.size() != b.size())
            throw DimensionError("digraph pair: A on " + std::to_string(a.size()) +
                " vertices, B on " + std::to_string(b.size()));
    }

    Eigen::Index size() const { return a.size(); }
};

/// A intersect B^T equals the identity graph. Forces a loop at every vertex
/// of both A and B.
bool check_identity_hypothesis(const DigraphPair & p);

/// Identity hypothesis plus A union B^T = V x V.
bool check_tournament_pair(const DigraphPair & p);

/**
 * Replace (A, B) by (A intersect B, A union B). Requires the identity
 * hypothesis; the result satisfies A' subset of B', keeps the identity (and,
 * when present, tournament) hypothesis, and shrinks A'B' union B'A' inside
 * AB union BA, so any vertex that satisfies the union inequality for the
 * reduced pair satisfies it for the original pair as well.
 */
DigraphPair reduce_pair(const DigraphPair & p);

enum class Variant {
    Product, ///< C = AB
    Union,   ///< C = AB union BA
    Wsnp,    ///< second-neighbourhood form on a single oriented graph
};

std::string variant_name(Variant v);

struct VertexInequality {
    Rational lhs;
    Rational rhs;
    Rational margin; ///< lhs - rhs; satisfied iff margin >= 0
    bool satisfied;
};

struct InequalityReport {
    Variant variant;
    bool weighted; ///< false when the weight vector was all ones
    std::vector<VertexInequality> rows;
    std::vector<Vertex> satisfying; ///< 0-based ids, ascending

    bool holds() const { return ! satisfying.empty(); }
};

/**
 * Per-vertex check of w(C(v)) >= w(A(v)) + w(B(v)) - w(v) where C is AB
 * (Variant::Product) or AB union BA (Variant::Union). Margins are exact.
 */
InequalityReport product_inequality_report(const DigraphPair & p, const WeightVector & w,
    Variant variant);

/**
 * Per-vertex check of w(N++(v)) >= w(N+(v)) on an oriented graph. The
 * second-neighbourhood-conjecture verdict for g is holds() of the all-ones
 * instance.
 */
InequalityReport wsnp_report(const Relation & g, const WeightVector & w);

} // namespace snclab

#endif
