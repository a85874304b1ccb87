#ifndef SNCLAB_RELATION_HPP
#define SNCLAB_RELATION_HPP

#include "snclab/errors.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace snclab {

using Vertex = Eigen::Index;

// Row-major so that out-neighbourhood rows are contiguous; row unions
// dominate the workload.
using BoolGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using BoolRow = Eigen::Array<bool, 1, Eigen::Dynamic>;

/**
 * A subset of 0..n-1 with bitset semantics. Every set is tied to a fixed
 * universe size n; mixing sets over different universes is a DimensionError.
 */
class VertexSet {
  public:
    explicit VertexSet(Eigen::Index universe) :
        bits_(BoolRow::Constant(1, universe, false))
    {
        if (universe < 0)
            throw DimensionError("vertex set: negative universe size");
    }

    explicit VertexSet(BoolRow bits) : bits_(std::move(bits)) {}

    static VertexSet full(Eigen::Index universe)
    {
        return VertexSet(BoolRow::Constant(1, universe, true));
    }

    Eigen::Index universe_size() const { return bits_.size(); }
    Eigen::Index count() const { return bits_.count(); }
    bool empty() const { return ! bits_.any(); }

    bool contains(Vertex v) const
    {
        check_vertex(v);
        return bits_(v);
    }

    void insert(Vertex v)
    {
        check_vertex(v);
        bits_(v) = true;
    }

    void erase(Vertex v)
    {
        check_vertex(v);
        bits_(v) = false;
    }

    /// Ascending vertex ids.
    std::vector<Vertex> members() const;

    const BoolRow & bits() const { return bits_; }

    friend VertexSet operator|(const VertexSet & a, const VertexSet & b)
    {
        check_same(a, b);
        return VertexSet(a.bits_ || b.bits_);
    }

    friend VertexSet operator&(const VertexSet & a, const VertexSet & b)
    {
        check_same(a, b);
        return VertexSet(a.bits_ && b.bits_);
    }

    /// Set difference.
    friend VertexSet operator-(const VertexSet & a, const VertexSet & b)
    {
        check_same(a, b);
        return VertexSet(a.bits_ && ! b.bits_);
    }

    VertexSet complement() const { return VertexSet((! bits_).eval()); }

    friend bool operator==(const VertexSet & a, const VertexSet & b)
    {
        check_same(a, b);
        return (a.bits_ == b.bits_).all();
    }

    bool is_subset_of(const VertexSet & other) const
    {
        check_same(*this, other);
        return (other.bits_ || ! bits_).all();
    }

    bool intersects(const VertexSet & other) const
    {
        check_same(*this, other);
        return (bits_ && other.bits_).any();
    }

  private:
    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= bits_.size())
            throw DimensionError("vertex " + std::to_string(v) + " outside universe of size " +
                std::to_string(bits_.size()));
    }

    static void check_same(const VertexSet & a, const VertexSet & b)
    {
        if (a.bits_.size() != b.bits_.size())
            throw DimensionError("vertex sets over different universes");
    }

    BoolRow bits_;
};

/**
 * A digraph on vertices 0..n-1 viewed as a binary relation: a dense n-by-n
 * boolean incidence grid with entry (u, v) true iff there is an edge u -> v.
 * Loops are permitted. Values are immutable in normal use; construction
 * mutates via set()/add().
 */
class Relation {
  public:
    /// The empty relation on n vertices.
    explicit Relation(Eigen::Index n) : grid_(BoolGrid::Constant(n, n, false))
    {
        if (n < 0)
            throw DimensionError("relation: negative vertex count");
    }

    Eigen::Index size() const { return grid_.rows(); }
    Eigen::Index edge_count() const { return grid_.count(); }

    bool contains(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        return grid_(u, v);
    }

    void set(Vertex u, Vertex v, bool present)
    {
        check_vertex(u);
        check_vertex(v);
        grid_(u, v) = present;
    }

    void add(Vertex u, Vertex v) { set(u, v, true); }

    const BoolGrid & grid() const { return grid_; }

    /// Edges in row-major order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

  private:
    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= grid_.rows())
            throw DimensionError("vertex " + std::to_string(v) + " outside 0.." +
                std::to_string(grid_.rows() - 1));
    }

    BoolGrid grid_;
};

/// The identity graph: exactly the n loops (v, v).
Relation identity(Eigen::Index n);

/// The complete relation V x V, loops included.
Relation complete(Eigen::Index n);

/// All edges reversed: (u, v) in the result iff (v, u) in r.
Relation transpose(const Relation & r);

/**
 * The product graph: (u, v) in compose(r, s) iff some w has (u, w) in r and
 * (w, v) in s. The first factor is applied first, so
 * compose(r, s)(v) = union of s(w) over w in r(v).
 */
Relation compose(const Relation & r, const Relation & s);

Relation union_of(const Relation & r, const Relation & s);
Relation intersection_of(const Relation & r, const Relation & s);
/// Edges of r that are not in s.
Relation difference_of(const Relation & r, const Relation & s);

/// True iff every edge of r is an edge of s.
bool is_subset(const Relation & r, const Relation & s);

bool operator==(const Relation & r, const Relation & s);

/// Row v of r as a set: r(v) = { u : (v, u) in r }.
VertexSet out_set(const Relation & r, Vertex v);

/// Column v of r as a set: { u : (u, v) in r }, i.e. transpose(r)(v).
VertexSet in_set(const Relation & r, Vertex v);

/// r with every loop (v, v) removed.
Relation strip_loops(const Relation & r);

/// No loops and no directed 2-cycles.
bool is_oriented(const Relation & r);

/**
 * First and second neighbourhoods of v, in both directions. The second
 * out-neighbourhood is (union of out(u) over u in out(v)) minus out(v),
 * taken literally; for digraphs with loops this can put v itself inside
 * its own second neighbourhood.
 */
struct Neighbourhoods {
    VertexSet out;
    VertexSet in;
    VertexSet second_out;
    VertexSet second_in;
};

Neighbourhoods neighbourhoods(const Relation & r, Vertex v);

/// Sum of w over the members of s. Exact whenever the scalar is.
template <typename Derived>
auto weight_of(const VertexSet & s, const Eigen::MatrixBase<Derived> & w) ->
    typename Derived::Scalar
{
    if (w.size() != s.universe_size())
        throw DimensionError("weight vector size does not match universe");
    typename Derived::Scalar total{0};
    for (Eigen::Index v = 0; v < w.size(); ++v)
        if (s.bits()(v))
            total += w(v);
    return total;
}

} // namespace snclab

#endif
