#include "orbitope/rational_lp.hpp"

#include <stdexcept>

namespace orbitope::lp {

namespace {

// Dense primal simplex tableau for: maximize x_obj subject to A x <= b,
// x >= 0, with b >= 0 so the slack basis is feasible from the start.
// Bland's rule guarantees termination.
class Tableau {
public:
    Tableau(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, int objective_var)
        : a_(std::move(a)), b_(std::move(b)), obj_var_(objective_var) {
        m_ = static_cast<int>(a_.size());
        n_ = m_ == 0 ? 0 : static_cast<int>(a_[0].size());
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            a_[i].resize(n_ + m_, 0);
            a_[i][n_ + i] = 1;
        }
        // Reduced costs z_j - c_j for maximizing c = e_obj.
        cost_.assign(n_ + m_, 0);
        cost_[obj_var_] = -1;
        value_ = 0;
    }

    void solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_ + m_; ++j) {
                if (cost_[j] < 0) { enter = j; break; }
            }
            if (enter < 0) return;
            int leave = -1;
            mpq_class best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                mpq_class ratio = b_[i] / a_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::domain_error("unbounded slack objective");
            pivot(leave, enter);
        }
    }

    mpq_class objective_value() const { return value_; }

    mpq_class variable_value(int j) const {
        for (int i = 0; i < m_; ++i)
            if (basis_[i] == j) return b_[i];
        return 0;
    }

private:
    void pivot(int row, int col) {
        mpq_class p = a_[row][col];
        for (auto& x : a_[row]) x /= p;
        b_[row] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || a_[i][col] == 0) continue;
            mpq_class f = a_[i][col];
            for (int j = 0; j < n_ + m_; ++j) a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
        }
        if (cost_[col] != 0) {
            mpq_class f = cost_[col];
            for (int j = 0; j < n_ + m_; ++j) cost_[j] -= f * a_[row][j];
            value_ -= f * b_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<mpq_class>> a_;
    std::vector<mpq_class> b_;
    std::vector<mpq_class> cost_;
    mpq_class value_;
    std::vector<int> basis_;
    int m_, n_, obj_var_;
};

}  // namespace

SlackResult max_min_slack(int n, const std::vector<StrictInequality>& ineqs) {
    // Substitute x_n = 2 - x_1 - ... - x_{n-1}; split the free coordinates
    // into differences of nonnegative variables; shift the slack so the
    // all-zero assignment (the point (0,...,0,2)) starts feasible.
    const int d = n - 1;
    const int num_vars = 2 * d + 1;  // y+, y-, shifted slack u
    const int u_var = 2 * d;

    std::vector<std::vector<mpq_class>> reduced;  // a . y + constant per inequality
    std::vector<mpq_class> constants;
    mpq_class worst = 0;  // most negative value at y = 0
    for (const auto& q : ineqs) {
        if (static_cast<int>(q.coeffs.size()) != n)
            throw std::invalid_argument("inequality arity mismatch");
        std::vector<mpq_class> a(d);
        for (int j = 0; j < d; ++j) a[j] = q.coeffs[j] - q.coeffs[n - 1];
        mpq_class c = 2 * q.coeffs[n - 1] + q.constant;
        if (c < worst) worst = c;
        reduced.push_back(std::move(a));
        constants.push_back(std::move(c));
    }
    const mpq_class shift = -worst;  // >= 0

    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        // -(a . y) + u <= shift + constant, with y = y+ - y-.
        std::vector<mpq_class> row(num_vars, 0);
        for (int j = 0; j < d; ++j) {
            row[j] = -reduced[i][j];
            row[d + j] = reduced[i][j];
        }
        row[u_var] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(shift + constants[i]);
    }

    Tableau t(std::move(rows), std::move(rhs), u_var);
    t.solve();

    SlackResult result;
    result.slack = t.objective_value() - shift;
    result.feasible = result.slack > 0;
    result.point.resize(n);
    mpq_class sum = 0;
    for (int j = 0; j < d; ++j) {
        result.point[j] = t.variable_value(j) - t.variable_value(d + j);
        sum += result.point[j];
    }
    result.point[n - 1] = 2 - sum;
    return result;
}

}  // namespace orbitope::lp
