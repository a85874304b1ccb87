#ifndef SNCLAB_SIMPLEX_HPP
#define SNCLAB_SIMPLEX_HPP

#include "snclab/errors.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace snclab {

enum class Sense { LessEq, Equal, GreaterEq };

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    LpStatus status = LpStatus::Infeasible;
    Vector x; ///< structural variables; meaningful only when Optimal
    Scalar objective{0};
};

/**
 * Dense two-phase primal simplex, templated on the scalar so that exact
 * rational instantiations carry no tolerances: every comparison below is
 * against literal zero. Bland's smallest-index rule picks both the entering
 * and the leaving variable, which rules out cycling and makes every solve
 * bit-for-bit reproducible.
 *
 * Solves  max c.x  subject to  a.row(i).x (sense_i) b_i,  x >= 0.
 *
 * Sized for the tiny instances this library produces (tens of variables), so
 * reduced costs are recomputed from the basis each iteration instead of being
 * carried in the tableau.
 */
template <typename Scalar>
class DenseSimplex {
  public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    static LpSolution<Scalar> maximize(const Matrix & a, const std::vector<Sense> & senses,
        const Vector & b, const Vector & c)
    {
        if (a.rows() != b.size() || a.rows() != std::ssize(senses) || a.cols() != c.size())
            throw DimensionError("simplex: inconsistent problem dimensions");
        DenseSimplex s(a, senses, b, c);
        return s.run();
    }

  private:
    enum class Stop { ReachedOptimum, Unbounded };

    Eigen::Index m_;         // constraint rows (may shrink if redundant)
    Eigen::Index n_;         // structural columns
    Eigen::Index cols_;      // structural + slack + artificial
    Eigen::Index first_art_; // first artificial column
    Matrix t_;               // m x cols, kept equal to B^-1 A
    Vector rhs_;             // m, kept >= 0
    Vector cost_;            // phase-2 objective padded over all columns
    std::vector<Eigen::Index> basis_; // basic column per row
    std::vector<bool> in_basis_;
    std::vector<bool> usable_;

    DenseSimplex(Matrix a, std::vector<Sense> senses, Vector b, const Vector & c) :
        m_(a.rows()),
        n_(a.cols())
    {
        // Normalise to b >= 0; a >=-row with zero rhs flips to <= for free,
        // saving an artificial variable.
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (b(i) < 0 || (b(i) == 0 && senses[i] == Sense::GreaterEq)) {
                a.row(i) = -a.row(i);
                b(i) = -b(i);
                if (senses[i] == Sense::LessEq)
                    senses[i] = Sense::GreaterEq;
                else if (senses[i] == Sense::GreaterEq)
                    senses[i] = Sense::LessEq;
            }
        }

        Eigen::Index slacks = 0, arts = 0;
        for (Sense s : senses) {
            if (s != Sense::Equal)
                ++slacks;
            if (s != Sense::LessEq)
                ++arts;
        }
        first_art_ = n_ + slacks;
        cols_ = first_art_ + arts;

        t_ = Matrix::Zero(m_, cols_);
        rhs_ = std::move(b);
        t_.leftCols(n_) = a;
        basis_.assign(m_, -1);
        in_basis_.assign(cols_, false);
        usable_.assign(cols_, true);

        Eigen::Index next_slack = n_, next_art = first_art_;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (senses[i] != Sense::Equal)
                t_(i, next_slack) = senses[i] == Sense::LessEq ? Scalar(1) : Scalar(-1);
            if (senses[i] == Sense::LessEq)
                set_basic(i, next_slack);
            else {
                t_(i, next_art) = Scalar(1);
                set_basic(i, next_art);
                ++next_art;
            }
            if (senses[i] != Sense::Equal)
                ++next_slack;
        }

        cost_ = Vector::Zero(cols_);
        cost_.head(n_) = c;
    }

    void set_basic(Eigen::Index row, Eigen::Index col)
    {
        basis_[row] = col;
        in_basis_[col] = true;
    }

    void pivot(Eigen::Index r, Eigen::Index s)
    {
        const Scalar piv = t_(r, s);
        t_.row(r) /= piv;
        rhs_(r) /= piv;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (i == r)
                continue;
            const Scalar f = t_(i, s);
            if (f != 0) {
                t_.row(i) -= f * t_.row(r);
                rhs_(i) -= f * rhs_(r);
            }
        }
        const Eigen::Index leaving = basis_[r];
        in_basis_[leaving] = false;
        if (leaving >= first_art_)
            usable_[leaving] = false; // artificials never re-enter
        set_basic(r, s);
    }

    Scalar reduced_cost(const Vector & c, Eigen::Index j) const
    {
        Scalar rc = c(j);
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (c(basis_[i]) != 0)
                rc -= c(basis_[i]) * t_(i, j);
        }
        return rc;
    }

    Stop iterate(const Vector & c)
    {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < cols_; ++j) {
                if (! usable_[j] || in_basis_[j])
                    continue;
                if (reduced_cost(c, j) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == -1)
                return Stop::ReachedOptimum;

            Eigen::Index leave = -1;
            Scalar best{0};
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (t_(i, enter) <= 0)
                    continue;
                Scalar ratio = rhs_(i) / t_(i, enter);
                if (leave == -1 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == -1)
                return Stop::Unbounded;
            pivot(leave, enter);
        }
    }

    void drop_row(Eigen::Index r)
    {
        const Eigen::Index last = m_ - 1;
        in_basis_[basis_[r]] = false;
        if (r != last) {
            t_.row(r) = t_.row(last);
            rhs_(r) = rhs_(last);
            basis_[r] = basis_[last];
        }
        t_.conservativeResize(last, Eigen::NoChange);
        rhs_.conservativeResize(last);
        basis_.pop_back();
        m_ = last;
    }

    LpSolution<Scalar> run()
    {
        if (cols_ > first_art_) {
            Vector phase1 = Vector::Zero(cols_);
            for (Eigen::Index j = first_art_; j < cols_; ++j)
                phase1(j) = Scalar(-1);
            if (iterate(phase1) == Stop::Unbounded) // bounded above by 0
                throw Error("simplex: phase 1 reported unbounded");

            Scalar infeasibility{0};
            for (Eigen::Index i = 0; i < m_; ++i)
                if (basis_[i] >= first_art_)
                    infeasibility += rhs_(i);
            if (infeasibility != 0)
                return LpSolution<Scalar>{LpStatus::Infeasible, Vector::Zero(n_), Scalar(0)};

            // Degenerate artificials may still sit in the basis at value 0:
            // pivot them out, or drop the row when it has become redundant.
            for (Eigen::Index i = 0; i < m_;) {
                if (basis_[i] < first_art_) {
                    ++i;
                    continue;
                }
                Eigen::Index enter = -1;
                for (Eigen::Index j = 0; j < first_art_; ++j) {
                    if (! in_basis_[j] && t_(i, j) != 0) {
                        enter = j;
                        break;
                    }
                }
                if (enter == -1)
                    drop_row(i);
                else
                    pivot(i, enter); // rhs is 0, so any pivot sign keeps feasibility
            }
            for (Eigen::Index j = first_art_; j < cols_; ++j)
                usable_[j] = false;
        }

        if (iterate(cost_) == Stop::Unbounded)
            return LpSolution<Scalar>{LpStatus::Unbounded, Vector::Zero(n_), Scalar(0)};

        LpSolution<Scalar> solution;
        solution.status = LpStatus::Optimal;
        solution.x = Vector::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                solution.x(basis_[i]) = rhs_(i);
        solution.objective = cost_.head(n_).dot(solution.x);
        return solution;
    }
};

/// max c.x subject to a.row(i).x (sense_i) b_i, x >= 0.
template <typename Scalar>
LpSolution<Scalar> lp_maximize(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> & a,
    const std::vector<Sense> & senses, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> & b,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> & c)
{
    return DenseSimplex<Scalar>::maximize(a, senses, b, c);
}

} // namespace snclab

#endif
