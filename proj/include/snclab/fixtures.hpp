#ifndef SNCLAB_FIXTURES_HPP
#define SNCLAB_FIXTURES_HPP

#include "snclab/digraph_pair.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace snclab {

/**
 * The two embedded 6-vertex weighted counterexamples to the product-only
 * inequality, together with the AB column they were published with. The AB
 * column is stored as data AND recomputed by verify_fixture; a divergence
 * between the two is a red-alert condition, never silently patched.
 */
struct Fixture {
    int id;                 ///< 1 or 2
    DigraphPair pair;
    WeightVector weights;   ///< (7,3,11,3,3,9) resp. (17,11,15,8,5,8)
    Relation printed_ab;    ///< the published AB column
    bool a_subset_b;        ///< fixture 1 has A within B; fixture 2 the reverse
};

/// id must be 1 or 2.
Fixture load_fixture(int id);

/// Canonical content hash of everything inside the fixture.
std::uint64_t fixture_checksum(const Fixture & f);

struct FixtureVerification {
    int id = 0;
    bool checksum_ok = false;
    bool identity_ok = false;   ///< A & B^T = I
    bool inclusion_ok = false;  ///< the stated inclusion direction
    bool a_oriented_ok = false; ///< A minus loops has no 2-cycles
    bool b_oriented_ok = false;
    bool ab_matches = false;    ///< recomputed AB equals the printed column
    bool product_fails_everywhere = false;
    bool product_margins_minus_one = false; ///< every product margin exactly -1
    std::vector<Vertex> union_satisfying;   ///< 0-based; must be non-empty
    Eigen::Index blowup_vertices = 0;
    Eigen::Index expected_blowup_vertices = 0; ///< 36 resp. 64
    bool blowup_identity_ok = false;
    bool blowup_fails_everywhere = false;      ///< unweighted product variant
    bool blowup_margins_minus_one = false;     ///< margin -1 at every copy
    std::vector<std::string> mismatches;       ///< human-readable details

    bool ok() const
    {
        return checksum_ok && identity_ok && inclusion_ok && a_oriented_ok && b_oriented_ok &&
            ab_matches && product_fails_everywhere && product_margins_minus_one &&
            ! union_satisfying.empty() && blowup_vertices == expected_blowup_vertices &&
            blowup_identity_ok && blowup_fails_everywhere && blowup_margins_minus_one;
    }
};

/// Re-derives every claim the fixture carries, from scratch.
FixtureVerification verify_fixture(int id);

} // namespace snclab

#endif
