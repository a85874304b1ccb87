#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snclab/prng.hpp"
#include "snclab/rational.hpp"
#include "snclab/simplex.hpp"

#include <optional>
#include <vector>

using namespace snclab;

namespace {
    // Plain rational Gaussian elimination, independent of the solver under
    // test. Returns nothing when the system is singular.
    std::optional<RationalVector> solve_square(RationalMatrix m, RationalVector rhs)
    {
        const Eigen::Index n = m.rows();
        for (Eigen::Index col = 0; col < n; ++col) {
            Eigen::Index pivot = -1;
            for (Eigen::Index row = col; row < n; ++row)
                if (m(row, col) != 0) {
                    pivot = row;
                    break;
                }
            if (pivot == -1)
                return std::nullopt;
            m.row(col).swap(m.row(pivot));
            std::swap(rhs(col), rhs(pivot));
            for (Eigen::Index row = 0; row < n; ++row) {
                if (row == col || m(row, col) == 0)
                    continue;
                const Rational f = m(row, col) / m(col, col);
                m.row(row) -= f * m.row(col);
                rhs(row) -= f * rhs(col);
            }
        }
        RationalVector x(n);
        for (Eigen::Index i = 0; i < n; ++i)
            x(i) = rhs(i) / m(i, i);
        return x;
    }

    bool feasible_point(const RationalMatrix & a, const std::vector<Sense> & senses,
        const RationalVector & b, const RationalVector & x)
    {
        for (Eigen::Index j = 0; j < x.size(); ++j)
            if (x(j) < 0)
                return false;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const Rational lhs = a.row(i).dot(x);
            switch (senses[i]) {
            case Sense::LessEq:
                if (lhs > b(i))
                    return false;
                break;
            case Sense::Equal:
                if (lhs != b(i))
                    return false;
                break;
            case Sense::GreaterEq:
                if (lhs < b(i))
                    return false;
                break;
            }
        }
        return true;
    }

    // Enumerates every candidate vertex: each choice of n active hyperplanes
    // among the m constraint rows and the n sign bounds. Exact and complete
    // for bounded feasible regions, which the generator guarantees via box
    // rows. Returns the best objective over feasible vertices, or nothing if
    // no vertex is feasible (i.e. the LP is infeasible).
    std::optional<Rational> brute_force_best(const RationalMatrix & a,
        const std::vector<Sense> & senses, const RationalVector & b, const RationalVector & c)
    {
        const Eigen::Index m = a.rows(), n = a.cols();
        const Eigen::Index hyperplanes = m + n;
        std::vector<Eigen::Index> pick(n);
        std::optional<Rational> best;

        auto consider = [&]() {
            RationalMatrix sys(n, n);
            RationalVector rhs(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                if (pick[i] < m) {
                    sys.row(i) = a.row(pick[i]);
                    rhs(i) = b(pick[i]);
                }
                else {
                    sys.row(i).setZero();
                    sys(i, pick[i] - m) = 1;
                    rhs(i) = 0;
                }
            }
            auto x = solve_square(sys, rhs);
            if (! x || ! feasible_point(a, senses, b, *x))
                return;
            Rational value = c.dot(*x);
            if (! best || value > *best)
                best = value;
        };

        // all ascending n-subsets of the hyperplane indices
        for (Eigen::Index i = 0; i < n; ++i)
            pick[i] = i;
        for (;;) {
            consider();
            Eigen::Index i = n - 1;
            while (i >= 0 && pick[i] == hyperplanes - n + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (Eigen::Index j = i + 1; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return best;
    }
}

TEST_CASE("textbook maximum")
{
    // max x + y, x + 2y <= 4, x <= 1: optimum 5/2 at (1, 3/2)
    RationalMatrix a(2, 2);
    a << 1, 2, 1, 0;
    RationalVector b(2);
    b << 4, 1;
    RationalVector c(2);
    c << 1, 1;
    auto sol = lp_maximize<Rational>(a, {Sense::LessEq, Sense::LessEq}, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rational(5, 2));
    CHECK(sol.x(0) == 1);
    CHECK(sol.x(1) == Rational(3, 2));
}

TEST_CASE("infeasible system")
{
    RationalMatrix a(2, 1);
    a << 1, 1;
    RationalVector b(2);
    b << 2, 1;
    RationalVector c = RationalVector::Zero(1);
    auto sol = lp_maximize<Rational>(a, {Sense::GreaterEq, Sense::LessEq}, b, c);
    CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective")
{
    RationalMatrix a(1, 1);
    a << -1;
    RationalVector b(1);
    b << 1;
    RationalVector c(1);
    c << 1;
    auto sol = lp_maximize<Rational>(a, {Sense::LessEq}, b, c);
    CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("equality rows and redundant constraints")
{
    // x + y = 1 stated twice, then doubled; phase 1 must shed the redundancy
    RationalMatrix a(3, 2);
    a << 1, 1, 1, 1, 2, 2;
    RationalVector b(3);
    b << 1, 1, 2;
    RationalVector c(2);
    c << 3, 5;
    auto sol = lp_maximize<Rational>(a, {Sense::Equal, Sense::Equal, Sense::Equal}, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 5);
    CHECK(sol.x(0) == 0);
    CHECK(sol.x(1) == 1);
}

TEST_CASE("negative right-hand sides are normalised away")
{
    // -x <= -2 is x >= 2; max -x gives -2
    RationalMatrix a(2, 1);
    a << -1, 1;
    RationalVector b(2);
    b << -2, 5;
    RationalVector c(1);
    c << -1;
    auto sol = lp_maximize<Rational>(a, {Sense::LessEq, Sense::LessEq}, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == -2);
}

TEST_CASE("zero objective returns a feasible point")
{
    RationalMatrix a(1, 3);
    a << 1, 1, 1;
    RationalVector b(1);
    b << 1;
    auto sol = lp_maximize<Rational>(a, {Sense::Equal}, b, RationalVector::Zero(3));
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(feasible_point(a, {Sense::Equal}, b, sol.x));
}

TEST_CASE("matches the vertex-enumeration oracle on random boxed LPs")
{
    SplitMix64 rng(20240811);
    int optimal_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + rng.below(3);
        const Eigen::Index rows = 1 + rng.below(4);
        // box rows x_j <= 3 keep everything bounded, so vertex enumeration
        // is a complete oracle
        RationalMatrix a = RationalMatrix::Zero(rows + n, n);
        RationalVector b(rows + n);
        RationalVector c(n);
        std::vector<Sense> senses;
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < n; ++j)
                a(i, j) = Rational(static_cast<long>(rng.below(7)) - 3);
            b(i) = Rational(static_cast<long>(rng.below(7)) - 3);
            senses.push_back(rng.below(3) == 0 ? Sense::LessEq
                    : rng.below(2) == 0        ? Sense::GreaterEq
                                               : Sense::Equal);
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            a(rows + j, j) = 1;
            b(rows + j) = 3;
            senses.push_back(Sense::LessEq);
        }
        for (Eigen::Index j = 0; j < n; ++j)
            c(j) = Rational(static_cast<long>(rng.below(7)) - 3);

        auto sol = lp_maximize<Rational>(a, senses, b, c);
        auto oracle = brute_force_best(a, senses, b, c);

        if (oracle) {
            ++optimal_seen;
            REQUIRE(sol.status == LpStatus::Optimal);
            CHECK(sol.objective == *oracle);
            CHECK(feasible_point(a, senses, b, sol.x));
            CHECK(c.dot(sol.x) == sol.objective);
        }
        else {
            ++infeasible_seen;
            REQUIRE(sol.status == LpStatus::Infeasible);
        }
    }
    // the generator should exercise both outcomes
    CHECK(optimal_seen > 50);
    CHECK(infeasible_seen > 10);
}

TEST_CASE("solves are deterministic")
{
    SplitMix64 rng(99);
    RationalMatrix a(3, 3);
    RationalVector b(3), c(3);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j)
            a(i, j) = Rational(static_cast<long>(rng.below(5)) - 2);
        b(i) = Rational(static_cast<long>(rng.below(4)));
        c(i) = Rational(static_cast<long>(rng.below(5)) - 2);
    }
    std::vector<Sense> senses{Sense::LessEq, Sense::GreaterEq, Sense::Equal};
    auto first = lp_maximize<Rational>(a, senses, b, c);
    for (int i = 0; i < 5; ++i) {
        auto again = lp_maximize<Rational>(a, senses, b, c);
        CHECK(again.status == first.status);
        if (first.status == LpStatus::Optimal) {
            CHECK(again.objective == first.objective);
            CHECK(again.x == first.x);
        }
    }
}
