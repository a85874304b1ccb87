#ifndef SNCLAB_LOSING_DENSITY_HPP
#define SNCLAB_LOSING_DENSITY_HPP

#include "snclab/rational.hpp"
#include "snclab/relation.hpp"

#include <string>
#include <vector>

namespace snclab {

/// The solver failed to produce a density. Cannot happen for oriented
/// inputs (the underlying skew-symmetric game has value zero), so reaching
/// this is a correctness tripwire, not a normal error path.
struct DensityNotFound : Error {
    using Error::Error;
};

/**
 * A losing density of an oriented graph g: a probability vector l with
 * l(N+(v)) >= l(N-(v)) at every vertex. slack(v) = l(N+(v)) - l(N-(v));
 * feasibility already forces l(v) * slack(v) = 0 everywhere, because the
 * slacks weighted by l sum to zero on any oriented graph.
 */
struct Density {
    RationalVector l;
    RationalVector slack;
};

/**
 * Exact rational feasibility solve for {l >= 0, sum l = 1, slack >= 0}.
 * Deterministic: the pivot rule is fixed, so the same graph always yields
 * the same density. When the feasible set is not a single point, which
 * vertex of it comes back is unspecified but stable.
 */
Density compute_losing_density(const Relation & g);

/// Outcome of re-checking a Density against its graph from scratch.
struct DensityCheck {
    bool nonnegative = false;      ///< l(v) >= 0 for all v
    bool normalized = false;       ///< sum l = 1
    bool slack_nonnegative = false;///< recomputed slack(v) >= 0 for all v
    bool complementary = false;    ///< l(v) * slack(v) = 0 for all v
    bool slack_consistent = false; ///< stored slack equals recomputed slack
    std::vector<std::string> violations;

    bool ok() const
    {
        return nonnegative && normalized && slack_nonnegative && complementary &&
            slack_consistent;
    }
    explicit operator bool() const { return ok(); }
};

/// Independent re-verification: recomputes every slack from g and l with
/// fresh summations and checks all invariants exactly. Never throws on a
/// bad density; the report says what failed.
DensityCheck verify_density(const Relation & g, const Density & d);

} // namespace snclab

#endif
