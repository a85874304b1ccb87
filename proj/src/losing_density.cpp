#include "snclab/losing_density.hpp"
#include "snclab/simplex.hpp"

namespace snclab {

namespace {
    RationalVector recompute_slack(const Relation & g, const RationalVector & l)
    {
        const Eigen::Index n = g.size();
        RationalVector slack(n);
        for (Vertex v = 0; v < n; ++v)
            slack(v) = weight_of(out_set(g, v), l) - weight_of(in_set(g, v), l);
        return slack;
    }
}

Density compute_losing_density(const Relation & g)
{
    if (! is_oriented(g))
        throw PreconditionError("losing density: graph is not oriented");
    const Eigen::Index n = g.size();
    if (n < 1)
        throw PreconditionError("losing density: need at least one vertex");

    // Feasibility only; the objective is zero. Row v encodes
    // l(N+(v)) - l(N-(v)) >= 0, the last row sum l = 1.
    RationalMatrix a = RationalMatrix::Zero(n + 1, n);
    RationalVector b = RationalVector::Zero(n + 1);
    std::vector<Sense> senses(n + 1, Sense::GreaterEq);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < n; ++u) {
            if (g.grid()(v, u))
                a(v, u) += 1;
            if (g.grid()(u, v))
                a(v, u) -= 1;
        }
    }
    a.row(n).setConstant(Rational(1));
    b(n) = 1;
    senses[n] = Sense::Equal;

    auto solution = lp_maximize<Rational>(a, senses, b, RationalVector::Zero(n));
    if (solution.status != LpStatus::Optimal)
        throw DensityNotFound("density-not-found: feasibility solve failed on an oriented graph");

    Density d{solution.x, recompute_slack(g, solution.x)};
    return d;
}

DensityCheck verify_density(const Relation & g, const Density & d)
{
    DensityCheck check;
    const Eigen::Index n = g.size();
    if (d.l.size() != n || d.slack.size() != n) {
        check.violations.push_back("dimension mismatch");
        return check;
    }

    check.nonnegative = true;
    for (Vertex v = 0; v < n; ++v)
        if (d.l(v) < 0) {
            check.nonnegative = false;
            check.violations.push_back("l(" + std::to_string(v + 1) + ") < 0");
        }

    Rational total{0};
    for (Vertex v = 0; v < n; ++v)
        total += d.l(v);
    check.normalized = total == 1;
    if (! check.normalized)
        check.violations.push_back("sum l = " + to_string(total) + ", expected 1");

    RationalVector slack = recompute_slack(g, d.l);
    check.slack_nonnegative = true;
    check.complementary = true;
    check.slack_consistent = true;
    for (Vertex v = 0; v < n; ++v) {
        if (slack(v) < 0) {
            check.slack_nonnegative = false;
            check.violations.push_back("slack(" + std::to_string(v + 1) + ") = " +
                to_string(slack(v)) + " < 0");
        }
        if (d.l(v) * slack(v) != 0) {
            check.complementary = false;
            check.violations.push_back("l(" + std::to_string(v + 1) + ") > 0 with slack " +
                to_string(slack(v)));
        }
        if (slack(v) != d.slack(v)) {
            check.slack_consistent = false;
            check.violations.push_back("stored slack(" + std::to_string(v + 1) +
                ") disagrees with recomputed value");
        }
    }
    return check;
}

} // namespace snclab
