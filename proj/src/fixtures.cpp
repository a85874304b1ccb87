#include "snclab/fixtures.hpp"
#include "snclab/blowup.hpp"
#include "snclab/hashing.hpp"

#include <array>
#include <initializer_list>

namespace snclab {

namespace {
    using Row = std::initializer_list<int>;

    Relation from_rows(std::initializer_list<Row> rows)
    {
        const Eigen::Index n = std::ssize(rows);
        Relation r(n);
        Eigen::Index v = 0;
        for (const Row & row : rows) {
            for (int u : row)
                r.add(v, u - 1); // tables are 1-based
            ++v;
        }
        return r;
    }

    WeightVector from_ints(std::initializer_list<int> ws)
    {
        WeightVector w(std::ssize(ws));
        Eigen::Index v = 0;
        for (int x : ws)
            w(v++) = x;
        return w;
    }

    // Frozen from fixture_checksum at the time the tables were transcribed;
    // guards against silent edits to the data below.
    constexpr std::array<std::uint64_t, 2> expected_checksums = {
        0x60f615829a33ca1cULL,
        0x7418fd187841e44bULL,
    };
} // namespace

Fixture load_fixture(int id)
{
    if (id == 1) {
        return Fixture{
            1,
            DigraphPair(
                from_rows({{1, 2, 5, 6}, {2, 3}, {1, 3, 4, 5}, {1, 4}, {2, 5, 6}, {2, 3, 6}}),
                from_rows({{1, 2, 5, 6}, {2, 3, 4}, {1, 3, 4, 5}, {1, 4, 6}, {2, 4, 5, 6},
                    {2, 3, 6}})),
            from_ints({7, 3, 11, 3, 3, 9}),
            from_rows({{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}, {1, 2, 4, 5, 6},
                {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}),
            true,
        };
    }
    if (id == 2) {
        return Fixture{
            2,
            DigraphPair(
                from_rows({{1, 2, 5, 6}, {2, 3, 4}, {1, 3, 6}, {1, 3, 4, 5}, {2, 3, 5},
                    {2, 4, 5, 6}}),
                from_rows(
                    {{1, 2, 5, 6}, {2, 3, 4}, {1, 3}, {3, 4, 5}, {2, 3, 5}, {2, 5, 6}})),
            from_ints({17, 11, 15, 8, 5, 8}),
            from_rows({{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5}, {1, 2, 3, 5, 6}, {1, 2, 3, 4, 5, 6},
                {1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}}),
            false,
        };
    }
    throw PreconditionError("unknown fixture id " + std::to_string(id) + ", expected 1 or 2");
}

std::uint64_t fixture_checksum(const Fixture & f)
{
    Fnv1a h;
    h.update(static_cast<std::uint8_t>(f.id));
    h.update_u64(static_cast<std::uint64_t>(f.pair.size()));
    auto update_relation = [&](const Relation & r) {
        for (Eigen::Index u = 0; u < r.size(); ++u)
            for (Eigen::Index v = 0; v < r.size(); ++v)
                h.update(r.grid()(u, v) ? 1 : 0);
    };
    update_relation(f.pair.a);
    update_relation(f.pair.b);
    update_relation(f.printed_ab);
    for (Eigen::Index v = 0; v < f.weights.size(); ++v) {
        h.update(to_string(f.weights(v)));
        h.update(',');
    }
    h.update(f.a_subset_b ? 1 : 0);
    return h.digest();
}

FixtureVerification verify_fixture(int id)
{
    Fixture f = load_fixture(id);
    FixtureVerification v;
    v.id = id;
    v.expected_blowup_vertices = id == 1 ? 36 : 64;

    v.checksum_ok = fixture_checksum(f) == expected_checksums.at(id - 1);
    if (! v.checksum_ok)
        v.mismatches.push_back("fixture data checksum changed");

    v.identity_ok = check_identity_hypothesis(f.pair);
    if (! v.identity_ok)
        v.mismatches.push_back("A & B^T is not the identity");

    v.inclusion_ok = f.a_subset_b ? is_subset(f.pair.a, f.pair.b)
                                  : is_subset(f.pair.b, f.pair.a);
    if (! v.inclusion_ok)
        v.mismatches.push_back("stated inclusion does not hold");

    v.a_oriented_ok = is_oriented(strip_loops(f.pair.a));
    v.b_oriented_ok = is_oriented(strip_loops(f.pair.b));
    if (! v.a_oriented_ok || ! v.b_oriented_ok)
        v.mismatches.push_back("2-cycle found after removing loops");

    Relation recomputed = compose(f.pair.a, f.pair.b);
    v.ab_matches = recomputed == f.printed_ab;
    if (! v.ab_matches) {
        for (Vertex u = 0; u < f.pair.size(); ++u)
            if (! (out_set(recomputed, u) == out_set(f.printed_ab, u)))
                v.mismatches.push_back("AB(" + std::to_string(u + 1) +
                    ") differs from the printed column");
    }

    InequalityReport product = product_inequality_report(f.pair, f.weights, Variant::Product);
    v.product_fails_everywhere = product.satisfying.empty();
    v.product_margins_minus_one = true;
    for (Eigen::Index u = 0; u < std::ssize(product.rows); ++u) {
        if (product.rows[u].margin != -1) {
            v.product_margins_minus_one = false;
            v.mismatches.push_back("product margin at vertex " + std::to_string(u + 1) +
                " is " + to_string(product.rows[u].margin) + ", expected -1");
        }
    }
    if (! v.product_fails_everywhere)
        v.mismatches.push_back("product inequality unexpectedly satisfied somewhere");

    InequalityReport unioned = product_inequality_report(f.pair, f.weights, Variant::Union);
    v.union_satisfying = unioned.satisfying;
    if (v.union_satisfying.empty())
        v.mismatches.push_back("union inequality fails at every vertex");

    auto [blown, map] = blow_up_pair(f.pair, f.weights);
    v.blowup_vertices = map.total_size();
    if (v.blowup_vertices != v.expected_blowup_vertices)
        v.mismatches.push_back("blow-up has " + std::to_string(v.blowup_vertices) +
            " vertices, expected " + std::to_string(v.expected_blowup_vertices));

    v.blowup_identity_ok = check_identity_hypothesis(blown);
    if (! v.blowup_identity_ok)
        v.mismatches.push_back("blow-up broke the identity hypothesis");

    InequalityReport unweighted =
        product_inequality_report(blown, uniform_weights(blown.size()), Variant::Product);
    v.blowup_fails_everywhere = unweighted.satisfying.empty();
    v.blowup_margins_minus_one = true;
    for (const VertexInequality & row : unweighted.rows)
        if (row.margin != -1)
            v.blowup_margins_minus_one = false;
    if (! v.blowup_fails_everywhere || ! v.blowup_margins_minus_one)
        v.mismatches.push_back("blow-up margins are not uniformly -1");

    return v;
}

} // namespace snclab
