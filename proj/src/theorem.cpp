#include "snclab/theorem.hpp"

namespace snclab {

namespace {
    Relation union_product(const DigraphPair & p)
    {
        return union_of(compose(p.a, p.b), compose(p.b, p.a));
    }

    void require_reduced(const DigraphPair & p, const char * who)
    {
        if (! check_identity_hypothesis(p))
            throw PreconditionError(std::string(who) + ": identity hypothesis fails");
        if (! is_subset(p.a, p.b))
            throw PreconditionError(std::string(who) + ": A is not a subset of B");
    }
}

VertexPartition partition_for_vertex(const DigraphPair & reduced, Vertex v)
{
    require_reduced(reduced, "partition_for_vertex");
    const Eigen::Index n = reduced.size();
    if (v < 0 || v >= n)
        throw DimensionError("partition_for_vertex: vertex out of range");

    Relation c = union_product(reduced);
    VertexSet at = in_set(reduced.a, v);
    VertexSet bt = in_set(reduced.b, v);
    VertexSet ct = in_set(c, v);

    VertexSet just_v(n);
    just_v.insert(v);

    VertexPartition parts{
        at - just_v,         // S1
        ct - bt,             // S2
        bt - at,             // B^T(v) \ A^T(v)
        ct.complement() | just_v, // Q
    };

    // The partition is what the whole argument stands on; check it here
    // rather than trusting the set algebra above.
    Eigen::Index covered = parts.s1.count() + parts.s2.count() + parts.b_only.count() +
        parts.q.count();
    VertexSet all = parts.s1 | parts.s2 | parts.b_only | parts.q;
    if (covered != n || ! (all == VertexSet::full(n)) || ! parts.q.contains(v))
        throw Error("partition_for_vertex: S1, S2, B-only, Q failed to partition V");
    return parts;
}

std::vector<bool> density_inequality_check(const DigraphPair & reduced, const Density & d)
{
    if (! check_tournament_pair(reduced))
        throw PreconditionError("density_inequality_check: not a tournament pair");
    if (! is_subset(reduced.a, reduced.b))
        throw PreconditionError("density_inequality_check: A is not a subset of B");
    if (! verify_density(strip_loops(reduced.a), d))
        throw PreconditionError("density_inequality_check: density does not verify");

    std::vector<bool> verdicts;
    verdicts.reserve(reduced.size());
    for (Vertex v = 0; v < reduced.size(); ++v) {
        VertexPartition parts = partition_for_vertex(reduced, v);
        verdicts.push_back(weight_of(parts.s2, d.l) >= weight_of(parts.s1, d.l));
    }
    return verdicts;
}

Rational aggregate_sum(const DigraphPair & reduced, const WeightVector & w, const Density & d)
{
    require_reduced(reduced, "aggregate_sum");
    require_weights(w, reduced.size());
    const Eigen::Index n = reduced.size();

    Relation c = union_product(reduced);
    Rational direct{0};
    Rational transposed{0};
    for (Vertex v = 0; v < n; ++v) {
        VertexSet just_v(n);
        just_v.insert(v);

        // row form: l(v) * (w(C(v) \ B(v)) - w(A(v) \ {v}))
        direct += d.l(v) *
            (weight_of(out_set(c, v) - out_set(reduced.b, v), w) -
                weight_of(out_set(reduced.a, v) - just_v, w));

        // column form: w(v) * (l(C^T(v) \ B^T(v)) - l(A^T(v) \ {v}))
        transposed += w(v) *
            (weight_of(in_set(c, v) - in_set(reduced.b, v), d.l) -
                weight_of(in_set(reduced.a, v) - just_v, d.l));
    }
    if (direct != transposed)
        throw Error("aggregate_sum: direct and transposed forms disagree (" +
            to_string(direct) + " vs " + to_string(transposed) + ")");
    return direct;
}

TheoremCertificate find_witness(const DigraphPair & p, const WeightVector & w)
{
    if (! check_tournament_pair(p))
        throw PreconditionError("find_witness: not a tournament pair");
    require_weights(w, p.size());
    const Eigen::Index n = p.size();

    DigraphPair reduced = reduce_pair(p);
    Density density = compute_losing_density(strip_loops(reduced.a));

    std::vector<TheoremVertexRecord> records;
    records.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexPartition parts = partition_for_vertex(reduced, v);
        Rational l_s1 = weight_of(parts.s1, density.l);
        Rational l_s2 = weight_of(parts.s2, density.l);
        records.push_back(TheoremVertexRecord{std::move(parts), std::move(l_s1), std::move(l_s2)});
    }

    Rational aggregate = aggregate_sum(reduced, w, density);
    if (aggregate < 0)
        throw TheoremViolated("theorem-violated: aggregate sum is negative", p, w);

    // The witness is read off the ORIGINAL pair; reduction only shrinks the
    // left-hand side, so this can only find more vertices, never fewer.
    Relation c = union_product(p);
    for (Vertex v = 0; v < n; ++v) {
        Rational lhs = weight_of(out_set(c, v), w);
        Rational rhs = weight_of(out_set(p.a, v), w) + weight_of(out_set(p.b, v), w) - w(v);
        if (lhs >= rhs) {
            return TheoremCertificate{std::move(reduced), std::move(density),
                std::move(records), std::move(aggregate), v, std::move(lhs), std::move(rhs)};
        }
    }
    throw TheoremViolated("theorem-violated: no vertex satisfies the union inequality", p, w);
}

bool double_count_check(const Relation & g, const VertexSet & q, const RationalVector & l)
{
    const Eigen::Index n = g.size();
    if (q.universe_size() != n || l.size() != n)
        throw DimensionError("double_count_check: dimension mismatch");

    Rational in_sum{0};
    Rational out_sum{0};
    for (Vertex v = 0; v < n; ++v) {
        if (! q.contains(v))
            continue;
        for (Vertex u = 0; u < n; ++u) {
            if (! q.contains(u))
                continue;
            if (g.grid()(u, v))
                in_sum += l(v) * l(u);
            if (g.grid()(v, u))
                out_sum += l(v) * l(u);
        }
    }
    return in_sum == out_sum;
}

} // namespace snclab
