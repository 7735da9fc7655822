#include "curvopt/lp.hpp"

#include <vector>

namespace curvopt::lp {

namespace {

constexpr double kCostEps = 1e-9;
constexpr double kPivotEps = 1e-11;

// Full-tableau simplex core. Rows 0..m-1 hold B^{-1}[D | rhs]; row m is the
// objective row z_j = c_B B^{-1} D_j - c_j (optimal when all z_j >= -eps for
// a maximization). basis[i] is the variable occupying row i.
struct Tableau {
    Eigen::MatrixXd t;        // (m+1) x (n+1)
    std::vector<int> basis;   // size m
    int m, n;

    void pivot(int row, int col) {
        t.row(row) /= t(row, col);
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            double f = t(i, col);
            if (f != 0.0) t.row(i) -= f * t.row(row);
        }
        basis[row] = col;
    }

    // Bland's rule iteration over the columns marked eligible.
    // Returns Optimal, Unbounded (unbounded_col set) or runs until done.
    Status run(const std::vector<bool>& eligible, int& unbounded_col) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (eligible[j] && t(m, j) < -kCostEps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return Status::Optimal;

            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                if (t(i, enter) > kPivotEps) {
                    double ratio = t(i, n) / t(i, enter);
                    if (leave < 0 || ratio < best_ratio - kPivotEps ||
                        (ratio < best_ratio + kPivotEps && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) {
                unbounded_col = enter;
                return Status::Unbounded;
            }
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());

    // Split free variables: x = u - v with u, v >= 0, one slack per row.
    // Rows with negative rhs are negated, which flips their slack to -1 and
    // requires an artificial variable for the initial basis.
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) art_rows.push_back(i);
    const int n_struct = 2 * d + m;
    const int n_art = static_cast<int>(art_rows.size());
    const int n = n_struct + n_art;

    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.t = Eigen::MatrixXd::Zero(m + 1, n + 1);
    tab.basis.assign(m, -1);

    for (int i = 0; i < m; ++i) {
        double sign = b[i] < 0 ? -1.0 : 1.0;
        for (int j = 0; j < d; ++j) {
            tab.t(i, j) = sign * A(i, j);
            tab.t(i, d + j) = -sign * A(i, j);
        }
        tab.t(i, 2 * d + i) = sign;  // slack
        tab.t(i, n) = sign * b[i];
    }
    for (int k = 0; k < n_art; ++k) {
        tab.t(art_rows[k], n_struct + k) = 1.0;
        tab.basis[art_rows[k]] = n_struct + k;
    }
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < 0) tab.basis[i] = 2 * d + i;

    Result res;
    std::vector<bool> eligible(n, true);

    if (n_art > 0) {
        // Phase 1: maximize -sum(artificials). Objective row for that cost.
        for (int j = 0; j <= n; ++j) {
            double z = 0.0;
            for (int i = 0; i < m; ++i)
                if (tab.basis[i] >= n_struct) z -= tab.t(i, j);
            tab.t(m, j) = z;
        }
        for (int k = 0; k < n_art; ++k) tab.t(m, n_struct + k) += 1.0;

        int unb = -1;
        tab.run(eligible, unb);  // phase 1 cannot be unbounded
        if (tab.t(m, n) < -1e-7) {
            res.status = Status::Infeasible;
            return res;
        }
        // Pivot any artificial still in the basis out on a structural column.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] >= n_struct) {
                for (int j = 0; j < n_struct; ++j) {
                    if (std::abs(tab.t(i, j)) > kPivotEps) {
                        tab.pivot(i, j);
                        break;
                    }
                }
            }
        }
        for (int j = n_struct; j < n; ++j) eligible[j] = false;
    }

    // Phase 2 objective row: z_j = c_B B^{-1} D_j - c_j with the split costs.
    auto cost_of = [&](int j) {
        if (j < d) return c[j];
        if (j < 2 * d) return -c[j - d];
        return 0.0;
    };
    for (int j = 0; j <= n; ++j) {
        double z = (j < n) ? -cost_of(j) : 0.0;
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] >= n_struct) continue;  // redundant row, zero cost
            double cb = cost_of(tab.basis[i]);
            if (cb != 0.0) z += cb * tab.t(i, j);
        }
        tab.t(m, j) = z;
    }

    int unbounded_col = -1;
    Status st = tab.run(eligible, unbounded_col);

    if (st == Status::Unbounded) {
        Eigen::VectorXd zray = Eigen::VectorXd::Zero(n);
        zray[unbounded_col] = 1.0;
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] < n) zray[tab.basis[i]] = -tab.t(i, unbounded_col);
        res.status = Status::Unbounded;
        res.ray = zray.head(d) - zray.segment(d, d);
        return res;
    }

    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) z[tab.basis[i]] = tab.t(i, n);
    res.status = Status::Optimal;
    res.x = z.head(d) - z.segment(d, d);
    res.value = c.dot(res.x);
    return res;
}

}  // namespace curvopt::lp
