#include "snclab/relation.hpp"

namespace snclab {

namespace {
    void check_same_size(const Relation & r, const Relation & s, const char * op)
    {
        if (r.size() != s.size())
            throw DimensionError(std::string(op) + ": relations on " + std::to_string(r.size()) +
                " and " + std::to_string(s.size()) + " vertices");
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (Eigen::Index v = 0; v < bits_.size(); ++v)
        if (bits_(v))
            out.push_back(v);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Relation::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Eigen::Index u = 0; u < grid_.rows(); ++u)
        for (Eigen::Index v = 0; v < grid_.cols(); ++v)
            if (grid_(u, v))
                out.emplace_back(u, v);
    return out;
}

Relation identity(Eigen::Index n)
{
    Relation r(n);
    for (Eigen::Index v = 0; v < n; ++v)
        r.add(v, v);
    return r;
}

Relation complete(Eigen::Index n)
{
    Relation r(n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v)
            r.add(u, v);
    return r;
}

Relation transpose(const Relation & r)
{
    const Eigen::Index n = r.size();
    Relation out(n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v)
            if (r.grid()(u, v))
                out.add(v, u);
    return out;
}

Relation compose(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "compose");
    const Eigen::Index n = r.size();
    Relation out(n);
    BoolRow row(1, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        row.setConstant(false);
        for (Eigen::Index w = 0; w < n; ++w)
            if (r.grid()(u, w))
                row = row || s.grid().row(w);
        for (Eigen::Index v = 0; v < n; ++v)
            if (row(v))
                out.add(u, v);
    }
    return out;
}

Relation union_of(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "union");
    Relation out(r.size());
    for (auto [u, v] : r.edges())
        out.add(u, v);
    for (auto [u, v] : s.edges())
        out.add(u, v);
    return out;
}

Relation intersection_of(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "intersection");
    Relation out(r.size());
    for (auto [u, v] : r.edges())
        if (s.grid()(u, v))
            out.add(u, v);
    return out;
}

Relation difference_of(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "difference");
    Relation out(r.size());
    for (auto [u, v] : r.edges())
        if (! s.grid()(u, v))
            out.add(u, v);
    return out;
}

bool is_subset(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "is_subset");
    if (r.size() == 0)
        return true;
    return (s.grid() || ! r.grid()).all();
}

bool operator==(const Relation & r, const Relation & s)
{
    check_same_size(r, s, "equals");
    if (r.size() == 0)
        return true;
    return (r.grid() == s.grid()).all();
}

VertexSet out_set(const Relation & r, Vertex v)
{
    if (v < 0 || v >= r.size())
        throw DimensionError("out_set: vertex " + std::to_string(v) + " outside 0.." +
            std::to_string(r.size() - 1));
    return VertexSet(r.grid().row(v));
}

VertexSet in_set(const Relation & r, Vertex v)
{
    if (v < 0 || v >= r.size())
        throw DimensionError("in_set: vertex " + std::to_string(v) + " outside 0.." +
            std::to_string(r.size() - 1));
    return VertexSet(r.grid().col(v).transpose());
}

Relation strip_loops(const Relation & r)
{
    Relation out = r;
    for (Eigen::Index v = 0; v < r.size(); ++v)
        out.set(v, v, false);
    return out;
}

bool is_oriented(const Relation & r)
{
    if (r.size() == 0)
        return true;
    // A loop or a 2-cycle is exactly a common edge of r and its transpose.
    return ! (r.grid() && r.grid().transpose()).any();
}

Neighbourhoods neighbourhoods(const Relation & r, Vertex v)
{
    const Eigen::Index n = r.size();
    VertexSet out = out_set(r, v);
    VertexSet in = in_set(r, v);

    BoolRow acc_out = BoolRow::Constant(1, n, false);
    BoolRow acc_in = BoolRow::Constant(1, n, false);
    for (Eigen::Index u = 0; u < n; ++u) {
        if (out.bits()(u))
            acc_out = acc_out || r.grid().row(u);
        if (in.bits()(u))
            acc_in = acc_in || r.grid().col(u).transpose();
    }

    VertexSet second_out(BoolRow(acc_out && ! out.bits()));
    VertexSet second_in(BoolRow(acc_in && ! in.bits()));
    return Neighbourhoods{std::move(out), std::move(in), std::move(second_out), std::move(second_in)};
}

} // namespace snclab
