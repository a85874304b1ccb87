#include "snclab/digraph_pair.hpp"

namespace snclab {

WeightVector uniform_weights(Eigen::Index n)
{
    return WeightVector::Constant(n, Rational(1));
}

void require_weights(const WeightVector & w, Eigen::Index n)
{
    if (w.size() != n)
        throw DimensionError("weight vector of length " + std::to_string(w.size()) +
            " for " + std::to_string(n) + " vertices");
    for (Eigen::Index v = 0; v < n; ++v)
        if (w(v) < 0)
            throw PreconditionError("negative weight at vertex " + std::to_string(v + 1));
}

bool check_identity_hypothesis(const DigraphPair & p)
{
    return intersection_of(p.a, transpose(p.b)) == identity(p.size());
}

bool check_tournament_pair(const DigraphPair & p)
{
    return check_identity_hypothesis(p) &&
        union_of(p.a, transpose(p.b)) == complete(p.size());
}

DigraphPair reduce_pair(const DigraphPair & p)
{
    if (! check_identity_hypothesis(p))
        throw PreconditionError("reduce_pair: A and B^T do not intersect in the identity");
    return DigraphPair(intersection_of(p.a, p.b), union_of(p.a, p.b));
}

std::string variant_name(Variant v)
{
    switch (v) {
    case Variant::Product: return "ab";
    case Variant::Union: return "union";
    case Variant::Wsnp: return "wsnp";
    }
    return "?";
}

namespace {
    bool all_ones(const WeightVector & w)
    {
        for (Eigen::Index v = 0; v < w.size(); ++v)
            if (w(v) != 1)
                return false;
        return true;
    }

    InequalityReport make_report(Variant variant, const WeightVector & w,
        std::vector<VertexInequality> rows)
    {
        InequalityReport report;
        report.variant = variant;
        report.weighted = ! all_ones(w);
        report.rows = std::move(rows);
        for (Eigen::Index v = 0; v < std::ssize(report.rows); ++v)
            if (report.rows[v].satisfied)
                report.satisfying.push_back(v);
        return report;
    }
}

InequalityReport product_inequality_report(const DigraphPair & p, const WeightVector & w,
    Variant variant)
{
    if (variant == Variant::Wsnp)
        throw PreconditionError("product_inequality_report: use wsnp_report");
    require_weights(w, p.size());

    Relation c = compose(p.a, p.b);
    if (variant == Variant::Union)
        c = union_of(c, compose(p.b, p.a));

    std::vector<VertexInequality> rows;
    rows.reserve(p.size());
    for (Vertex v = 0; v < p.size(); ++v) {
        Rational lhs = weight_of(out_set(c, v), w);
        Rational rhs = weight_of(out_set(p.a, v), w) + weight_of(out_set(p.b, v), w) - w(v);
        Rational margin = lhs - rhs;
        rows.push_back(VertexInequality{lhs, rhs, margin, margin >= 0});
    }
    return make_report(variant, w, std::move(rows));
}

InequalityReport wsnp_report(const Relation & g, const WeightVector & w)
{
    if (! is_oriented(g))
        throw PreconditionError("wsnp_report: graph is not oriented");
    require_weights(w, g.size());

    std::vector<VertexInequality> rows;
    rows.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        Neighbourhoods nb = neighbourhoods(g, v);
        Rational lhs = weight_of(nb.second_out, w);
        Rational rhs = weight_of(nb.out, w);
        Rational margin = lhs - rhs;
        rows.push_back(VertexInequality{lhs, rhs, margin, margin >= 0});
    }
    return make_report(Variant::Wsnp, w, std::move(rows));
}

} // namespace snclab
