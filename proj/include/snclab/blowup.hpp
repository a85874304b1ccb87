#ifndef SNCLAB_BLOWUP_HPP
#define SNCLAB_BLOWUP_HPP

#include "snclab/digraph_pair.hpp"

#include <utility>
#include <vector>

namespace snclab {

/**
 * Bookkeeping for a blow-up: original vertex v becomes the contiguous range
 * of copies [copy_begin(v), copy_begin(v) + copy_count(v)).
 */
class BlowupMap {
  public:
    explicit BlowupMap(std::vector<Eigen::Index> counts);

    Eigen::Index original_size() const { return std::ssize(counts_); }
    Eigen::Index total_size() const { return offsets_.back(); }

    Eigen::Index copy_count(Vertex original) const { return counts_.at(original); }
    Eigen::Index copy_begin(Vertex original) const { return offsets_.at(original); }

    /// Copy i (0-based) of an original vertex.
    Vertex copy_id(Vertex original, Eigen::Index i) const;

    /// The original vertex a copy came from.
    Vertex origin(Vertex copy) const;

  private:
    std::vector<Eigen::Index> counts_;
    std::vector<Eigen::Index> offsets_; // size n+1, prefix sums
};

/// Extracts per-vertex copy counts from positive integer weights; anything
/// else is a PreconditionError.
std::vector<Eigen::Index> copy_counts(const WeightVector & w);

/**
 * Duplicate vertex v into w(v) copies. Every edge (u, v) of g turns into all
 * edges (u_i, v_j); no edges inside a copy class. Requires g oriented and
 * all weights positive integers; the result is oriented, and v satisfies the
 * weighted second neighbourhood inequality in (g, w) iff every copy of v
 * satisfies the unweighted one in the blow-up.
 */
std::pair<Relation, BlowupMap> blow_up_oriented(const Relation & g, const WeightVector & w);

/**
 * Blow up both members of a pair satisfying the identity hypothesis. Non-loop
 * edges blow up fully; each loop (v, v) becomes one loop per copy and no
 * cross edges between copies, which is what keeps A' intersect B'^T equal to
 * the identity. The unweighted margin of every copy of v (either variant)
 * equals the weighted margin of v in the original.
 */
std::pair<DigraphPair, BlowupMap> blow_up_pair(const DigraphPair & p, const WeightVector & w);

} // namespace snclab

#endif
