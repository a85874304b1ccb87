#ifndef SNCLAB_THEOREM_HPP
#define SNCLAB_THEOREM_HPP

#include "snclab/digraph_pair.hpp"
#include "snclab/losing_density.hpp"

#include <vector>

namespace snclab {

/// No vertex satisfied the union inequality on a tournament pair. This is
/// mathematically impossible, so the full instance rides along for the
/// write-up.
class TheoremViolated : public Error {
  public:
    TheoremViolated(const std::string & what, DigraphPair pair, WeightVector weights) :
        Error(what),
        pair_(std::move(pair)),
        weights_(std::move(weights))
    {
    }

    const DigraphPair & pair() const noexcept { return pair_; }
    const WeightVector & weights() const noexcept { return weights_; }

  private:
    DigraphPair pair_;
    WeightVector weights_;
};

/**
 * The four sets a fixed vertex v splits V into, with C = AB union BA:
 *
 *   s1     = A^T(v) minus {v}, the in-neighbours of v inside A;
 *   s2     = C^T(v) minus B^T(v);
 *   b_only = B^T(v) minus A^T(v);
 *   q      = (V minus C^T(v)) union {v}.
 *
 * v's own loop sits in C^T(v), so q re-adds exactly v; partition-ness is
 * asserted at construction time.
 */
struct VertexPartition {
    VertexSet s1;
    VertexSet s2;
    VertexSet b_only;
    VertexSet q;
};

/// Requires the identity hypothesis and A subset of B.
VertexPartition partition_for_vertex(const DigraphPair & reduced, Vertex v);

/**
 * l(S2) >= l(S1) per vertex. Requires a tournament pair with A subset of B
 * and a density that verifies against strip_loops(A); all entries come back
 * true when those preconditions hold, so a false is a tripwire worth keeping
 * visible.
 */
std::vector<bool> density_inequality_check(const DigraphPair & reduced, const Density & d);

/**
 * sum_v l(v) * (w(C(v) \ B(v)) - w(A(v) \ {v})), computed directly and in
 * transposed form sum_v w(v) * (l(C^T(v) \ B^T(v)) - l(A^T(v) \ {v})); the
 * two must agree exactly, and the value is non-negative on valid instances.
 */
Rational aggregate_sum(const DigraphPair & reduced, const WeightVector & w, const Density & d);

struct TheoremVertexRecord {
    VertexPartition parts;
    Rational l_s1;
    Rational l_s2;
};

struct TheoremCertificate {
    DigraphPair reduced;    ///< the pair after the A -> A&B, B -> A|B step
    Density density;        ///< losing density of strip_loops(reduced A)
    std::vector<TheoremVertexRecord> vertices;
    Rational aggregate;     ///< non-negative weighted sum over all vertices
    Vertex witness;         ///< smallest satisfying vertex of the ORIGINAL pair
    Rational witness_lhs;   ///< w((AB u BA)(witness)) for the original pair
    Rational witness_rhs;   ///< w(A(witness)) + w(B(witness)) - w(witness)
};

/**
 * Machine-checked witness for the tournament-pair theorem: given a pair with
 * A & B^T = I and A | B^T = V x V and any non-negative weights, produce a
 * vertex of the ORIGINAL pair satisfying
 * w((AB u BA)(v)) >= w(A(v)) + w(B(v)) - w(v), together with the density and
 * per-vertex data that certify why one must exist. A subset of B is not
 * required; the pair is reduced internally and the witness transfers.
 */
TheoremCertificate find_witness(const DigraphPair & p, const WeightVector & w);

/**
 * The double-counting identity inside an induced subgraph: for any vertex
 * weights l whatsoever, sum over v in q of l(v) * l(N-(v) within q) equals
 * the same sum with N+ in place of N-. Holds unconditionally; each edge of
 * the induced subgraph contributes l(u) * l(v) to both sides.
 */
bool double_count_check(const Relation & g, const VertexSet & q, const RationalVector & l);

} // namespace snclab

#endif
