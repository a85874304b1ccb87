#ifndef SNCLAB_SEARCH_HPP
#define SNCLAB_SEARCH_HPP

#include "snclab/digraph_pair.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace snclab {

/// Which coupling between A and B the searched pairs must satisfy.
enum class HypothesisMode {
    Identity,       ///< A & B^T = I
    IdentitySubset, ///< additionally A within B
    TournamentPair, ///< additionally A | B^T = V x V
};

std::string hypothesis_name(HypothesisMode mode);

/**
 * The valid states of one unordered vertex pair {u, v}, encoded as 4-bit
 * codes: bit 0 = (u,v) in A, bit 1 = (v,u) in A, bit 2 = (u,v) in B,
 * bit 3 = (v,u) in B. Ascending order; sizes are 9, 6 and 4 for the three
 * modes, so a whole pair structure is one digit per unordered vertex pair
 * in that base. Loops are forced everywhere and carry no digits.
 */
const std::vector<int> & valid_patterns(HypothesisMode mode);

/// Number of pairs an exhaustive run of size n visits:
/// |patterns|^(n(n-1)/2).
std::uint64_t pair_enumeration_total(Eigen::Index n, HypothesisMode mode);

/**
 * Visits every pair satisfying the hypothesis exactly once and returns the
 * visit count. The pair handed to the visitor is a scratch value rewritten
 * between calls; copy it to keep it. Bounded at n <= 4 by default, n = 5
 * behind allow_large; anything above is refused.
 */
std::uint64_t enumerate_pairs(Eigen::Index n, HypothesisMode mode,
    const std::function<void(const DigraphPair &)> & visit, bool allow_large = false);

/// Deterministic uniform sample over the constrained local-configuration
/// product; (seed, index) fully determine the result.
DigraphPair sample_pair(Eigen::Index n, HypothesisMode mode, std::uint64_t seed,
    std::uint64_t index);

/**
 * Exact LP oracle: find weights violating the chosen inequality variant at
 * EVERY vertex of the fixed pair, or certify that none exist. Maximizes the
 * minimum violation t over {w >= 0, sum w = 1}; a positive optimum yields
 * the weights, t* <= 0 yields nothing. Complete over the rationals: empty
 * means empty, not "not found".
 */
std::optional<WeightVector> find_violating_weights(const DigraphPair & p, Variant variant);

struct SearchConfig {
    Eigen::Index n = 3;
    HypothesisMode hypothesis = HypothesisMode::Identity;
    Variant variant = Variant::Union;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 1000; ///< random mode only
    unsigned width = 1;              ///< worker threads
    bool weight_oracle = false;      ///< run find_violating_weights per pair
    bool allow_large_exhaustive = false;
};

struct CounterexampleRecord {
    std::uint64_t index; ///< enumeration or sample index, for reproduction
    DigraphPair pair;
    WeightVector weights; ///< all ones for unweighted finds
    Variant variant;
};

struct SearchReport {
    std::uint64_t examined = 0;
    std::uint64_t fingerprint = 0; ///< order-independent hash of the examined set
    double wall_seconds = 0.0;
    std::vector<CounterexampleRecord> findings; ///< each one re-verified already
};

/// Hash of one pair, stable across platforms; the report fingerprint is the
/// wrapping sum of these over every examined pair.
std::uint64_t pair_fingerprint(const DigraphPair & p);

/**
 * Visit the full enumeration space, applying the unweighted check (and the
 * weight oracle when configured). Deterministic; the fingerprint and the
 * findings do not depend on width.
 */
SearchReport exhaustive_search(const SearchConfig & config);

/// Seeded random campaign with the same checks and the same determinism
/// contract: (seed, iterations) fix the outcome for any width.
SearchReport random_search(const SearchConfig & config);

} // namespace snclab

#endif
