#include "snclab/blowup.hpp"

#include <algorithm>

namespace snclab {

BlowupMap::BlowupMap(std::vector<Eigen::Index> counts) : counts_(std::move(counts))
{
    offsets_.reserve(counts_.size() + 1);
    offsets_.push_back(0);
    for (Eigen::Index c : counts_) {
        if (c < 1)
            throw PreconditionError("blow-up: copy counts must be >= 1");
        offsets_.push_back(offsets_.back() + c);
    }
}

Vertex BlowupMap::copy_id(Vertex original, Eigen::Index i) const
{
    if (i < 0 || i >= copy_count(original))
        throw DimensionError("blow-up: copy index out of range");
    return offsets_[original] + i;
}

Vertex BlowupMap::origin(Vertex copy) const
{
    if (copy < 0 || copy >= total_size())
        throw DimensionError("blow-up: copy id out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), copy);
    return static_cast<Vertex>(it - offsets_.begin()) - 1;
}

std::vector<Eigen::Index> copy_counts(const WeightVector & w)
{
    std::vector<Eigen::Index> counts;
    counts.reserve(w.size());
    for (Eigen::Index v = 0; v < w.size(); ++v) {
        if (! is_integer(w(v)) || w(v) < 1)
            throw PreconditionError("blow-up: weight of vertex " + std::to_string(v + 1) +
                " is " + to_string(w(v)) + ", need a positive integer");
        counts.push_back(static_cast<Eigen::Index>(to_small_integer(w(v))));
    }
    return counts;
}

namespace {
    // Non-loop edges fan out across the full copy classes; loops become one
    // loop per copy.
    Relation blow_up_relation(const Relation & r, const BlowupMap & map)
    {
        Relation out(map.total_size());
        for (auto [u, v] : r.edges()) {
            if (u == v) {
                for (Eigen::Index i = 0; i < map.copy_count(u); ++i)
                    out.add(map.copy_id(u, i), map.copy_id(u, i));
                continue;
            }
            for (Eigen::Index i = 0; i < map.copy_count(u); ++i)
                for (Eigen::Index j = 0; j < map.copy_count(v); ++j)
                    out.add(map.copy_id(u, i), map.copy_id(v, j));
        }
        return out;
    }
}

std::pair<Relation, BlowupMap> blow_up_oriented(const Relation & g, const WeightVector & w)
{
    if (! is_oriented(g))
        throw PreconditionError("blow_up_oriented: graph is not oriented");
    require_weights(w, g.size());
    BlowupMap map(copy_counts(w));
    return {blow_up_relation(g, map), std::move(map)};
}

std::pair<DigraphPair, BlowupMap> blow_up_pair(const DigraphPair & p, const WeightVector & w)
{
    if (! check_identity_hypothesis(p))
        throw PreconditionError("blow_up_pair: pair does not satisfy the identity hypothesis");
    require_weights(w, p.size());
    BlowupMap map(copy_counts(w));
    DigraphPair blown(blow_up_relation(p.a, map), blow_up_relation(p.b, map));
    return {std::move(blown), std::move(map)};
}

} // namespace snclab
