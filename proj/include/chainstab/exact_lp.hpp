#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainstab/errors.hpp"
#include "chainstab/rational.hpp"

namespace chainstab {

enum class RowSense { LessEqual, GreaterEqual, Equal };

struct LinearRow {
    std::vector<Rational> coeffs;
    RowSense sense;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> point;
};

// Small dense exact-rational linear program: optimize c.x subject to rows,
// with each variable either free or non-negative. Two-phase primal simplex
// with Bland's rule, so it terminates on degenerate problems. Intended for
// the handful-of-variables systems that arise from chain conditions.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), nonnegative_(num_vars, false) {}
    LinearProgram(std::size_t num_vars, std::vector<bool> nonnegative)
        : num_vars_(num_vars), nonnegative_(std::move(nonnegative)) {
        if (nonnegative_.size() != num_vars_) {
            throw InputError("nonnegativity flags do not match the number of variables");
        }
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<LinearRow>& rows() const { return rows_; }

    void add_row(std::vector<Rational> coeffs, RowSense sense, Rational rhs) {
        if (coeffs.size() != num_vars_) {
            throw InputError("row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                             std::to_string(num_vars_));
        }
        rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
    }

    LpSolution maximize(std::span<const Rational> objective) const { return solve(objective, false); }

    LpSolution minimize(std::span<const Rational> objective) const {
        std::vector<Rational> negated(objective.begin(), objective.end());
        for (auto& c : negated) {
            c = -c;
        }
        LpSolution s = solve(negated, false);
        s.value = -s.value;
        return s;
    }

    // Any feasible point, or nullopt.
    std::optional<std::vector<Rational>> feasible_point() const {
        std::vector<Rational> zero(num_vars_, Rational(0));
        LpSolution s = solve(zero, true);
        if (s.status == LpStatus::Infeasible) {
            return std::nullopt;
        }
        return s.point;
    }

    bool feasible() const { return feasible_point().has_value(); }

private:
    struct Tableau {
        std::vector<std::vector<Rational>> a;  // m x cols
        std::vector<Rational> b;               // m
        std::vector<std::size_t> basis;        // m
    };

    static void pivot(Tableau& t, std::size_t row, std::size_t col) {
        const std::size_t cols = t.a[row].size();
        const Rational p = t.a[row][col];
        for (std::size_t c = 0; c < cols; ++c) {
            if (!t.a[row][c].is_zero()) {
                t.a[row][c] /= p;
            }
        }
        t.b[row] /= p;
        for (std::size_t i = 0; i < t.a.size(); ++i) {
            if (i == row || t.a[i][col].is_zero()) {
                continue;
            }
            const Rational f = t.a[i][col];
            for (std::size_t c = 0; c < cols; ++c) {
                if (!t.a[row][c].is_zero()) {
                    t.a[i][c] -= f * t.a[row][c];
                }
            }
            t.b[i] -= f * t.b[row];
        }
        t.basis[row] = col;
    }

    // Maximizes cost over the current tableau restricted to `allowed`
    // entering columns. Returns false when unbounded.
    static bool run_simplex(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        const std::size_t m = t.a.size();
        const std::size_t cols = cost.size();
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols && !entering; ++j) {
                if (!allowed[j]) {
                    continue;
                }
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < m; ++i) {
                    if (!t.a[i][j].is_zero() && !cost[t.basis[i]].is_zero()) {
                        reduced -= cost[t.basis[i]] * t.a[i][j];
                    }
                }
                if (reduced.sign() > 0) {
                    entering = j;
                }
            }
            if (!entering) {
                return true;
            }
            const std::size_t col = *entering;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t.a[i][col].sign() <= 0) {
                    continue;
                }
                Rational ratio = t.b[i] / t.a[i][col];
                if (!leaving || ratio < best || (ratio == best && t.basis[i] < t.basis[*leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (!leaving) {
                return false;
            }
            pivot(t, *leaving, col);
        }
    }

    LpSolution solve(std::span<const Rational> objective, bool feasibility_only) const {
        if (objective.size() != num_vars_) {
            throw InputError("objective has the wrong dimension");
        }
        // Column layout: structural columns (free variables split in two),
        // then one slack/surplus per inequality row, then artificials.
        std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, SIZE_MAX);
        std::size_t cols = 0;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            pos_col[v] = cols++;
            if (!nonnegative_[v]) {
                neg_col[v] = cols++;
            }
        }
        const std::size_t structural = cols;
        const std::size_t m = rows_.size();

        struct NormalRow {
            std::vector<Rational> coeffs;
            RowSense sense;
            Rational rhs;
        };
        std::vector<NormalRow> normal;
        normal.reserve(m);
        for (const auto& row : rows_) {
            NormalRow nr{std::vector<Rational>(structural), row.sense, row.rhs};
            for (std::size_t v = 0; v < num_vars_; ++v) {
                nr.coeffs[pos_col[v]] = row.coeffs[v];
                if (neg_col[v] != SIZE_MAX) {
                    nr.coeffs[neg_col[v]] = -row.coeffs[v];
                }
            }
            if (nr.rhs.sign() < 0) {
                for (auto& c : nr.coeffs) {
                    c = -c;
                }
                nr.rhs = -nr.rhs;
                if (nr.sense == RowSense::LessEqual) {
                    nr.sense = RowSense::GreaterEqual;
                } else if (nr.sense == RowSense::GreaterEqual) {
                    nr.sense = RowSense::LessEqual;
                }
            }
            normal.push_back(std::move(nr));
        }

        std::size_t slack_count = 0;
        std::size_t artificial_count = 0;
        for (const auto& nr : normal) {
            if (nr.sense != RowSense::Equal) {
                ++slack_count;
            }
            if (nr.sense != RowSense::LessEqual) {
                ++artificial_count;
            }
        }
        const std::size_t total_cols = structural + slack_count + artificial_count;
        const std::size_t first_artificial = structural + slack_count;

        Tableau t;
        t.a.assign(m, std::vector<Rational>(total_cols));
        t.b.resize(m);
        t.basis.resize(m);
        std::size_t next_slack = structural;
        std::size_t next_artificial = first_artificial;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t c = 0; c < structural; ++c) {
                t.a[i][c] = normal[i].coeffs[c];
            }
            t.b[i] = normal[i].rhs;
            switch (normal[i].sense) {
                case RowSense::LessEqual:
                    t.a[i][next_slack] = 1;
                    t.basis[i] = next_slack++;
                    break;
                case RowSense::GreaterEqual:
                    t.a[i][next_slack++] = -1;
                    t.a[i][next_artificial] = 1;
                    t.basis[i] = next_artificial++;
                    break;
                case RowSense::Equal:
                    t.a[i][next_artificial] = 1;
                    t.basis[i] = next_artificial++;
                    break;
            }
        }

        LpSolution result;
        if (artificial_count > 0) {
            std::vector<Rational> phase_one(total_cols);
            for (std::size_t c = first_artificial; c < total_cols; ++c) {
                phase_one[c] = -1;
            }
            std::vector<bool> allowed(total_cols, true);
            run_simplex(t, phase_one, allowed);
            Rational infeasibility;
            for (std::size_t i = 0; i < m; ++i) {
                if (t.basis[i] >= first_artificial) {
                    infeasibility += t.b[i];
                }
            }
            if (infeasibility.sign() > 0) {
                result.status = LpStatus::Infeasible;
                return result;
            }
            // Drive zero-level artificials out of the basis where possible;
            // rows where that is impossible are redundant and stay inert.
            for (std::size_t i = 0; i < m; ++i) {
                if (t.basis[i] < first_artificial) {
                    continue;
                }
                for (std::size_t c = 0; c < first_artificial; ++c) {
                    if (!t.a[i][c].is_zero()) {
                        pivot(t, i, c);
                        break;
                    }
                }
            }
        }

        std::vector<Rational> cost(total_cols);
        if (!feasibility_only) {
            for (std::size_t v = 0; v < num_vars_; ++v) {
                cost[pos_col[v]] = objective[v];
                if (neg_col[v] != SIZE_MAX) {
                    cost[neg_col[v]] = -objective[v];
                }
            }
        }
        std::vector<bool> allowed(total_cols, false);
        for (std::size_t c = 0; c < first_artificial; ++c) {
            allowed[c] = true;
        }
        const bool bounded = run_simplex(t, cost, allowed);

        std::vector<Rational> column_value(total_cols);
        for (std::size_t i = 0; i < m; ++i) {
            column_value[t.basis[i]] = t.b[i];
        }
        result.point.resize(num_vars_);
        for (std::size_t v = 0; v < num_vars_; ++v) {
            result.point[v] = column_value[pos_col[v]];
            if (neg_col[v] != SIZE_MAX) {
                result.point[v] -= column_value[neg_col[v]];
            }
        }
        if (!bounded) {
            result.status = LpStatus::Unbounded;
            return result;
        }
        result.status = LpStatus::Optimal;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            result.value += objective[v] * result.point[v];
        }
        return result;
    }

    std::size_t num_vars_;
    std::vector<bool> nonnegative_;
    std::vector<LinearRow> rows_;
};

}  // namespace chainstab
