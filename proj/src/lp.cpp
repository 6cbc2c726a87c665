#include "surfcount/lp.hpp"

#include <algorithm>

namespace surfcount {

namespace {

// Dense tableau simplex in standard form:
//   minimize c.y   subject to  M y = d,  y >= 0,  d >= 0.
// Phase 1 introduces artificials. Bland's rule throughout.
class Simplex {
  public:
    Simplex(std::vector<std::vector<Rat>> m, std::vector<Rat> d) : m_(std::move(m)), d_(std::move(d)) {
        rows_ = static_cast<int>(m_.size());
        cols_ = rows_ ? static_cast<int>(m_[0].size()) : 0;
        for (int i = 0; i < rows_; ++i)
            if (d_[i] < 0) {
                for (auto& e : m_[i]) e = -e;
                d_[i] = -d_[i];
            }
    }

    // Returns false when the system is infeasible.
    bool phase1() {
        basis_.assign(rows_, -1);
        // Append artificial columns.
        for (int i = 0; i < rows_; ++i) {
            for (int r = 0; r < rows_; ++r) m_[r].push_back(r == i ? Rat(1) : Rat(0));
            basis_[i] = cols_ + i;
        }
        int total = cols_ + rows_;
        std::vector<Rat> cost(total);
        for (int j = cols_; j < total; ++j) cost[j] = 1;
        build_reduced(cost);
        run();
        if (objective_ != 0) return false;
        // Drive artificials out of the basis where possible.
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < cols_) continue;
            int enter = -1;
            for (int j = 0; j < cols_; ++j)
                if (m_[i][j] != 0) { enter = j; break; }
            if (enter >= 0) pivot(i, enter);
            // Otherwise the row is redundant; the artificial stays at level 0.
        }
        // Drop artificial columns (any remaining basic artificial sits at 0 in
        // a redundant row; keep the row but forbid re-entry by truncation).
        for (int i = 0; i < rows_; ++i) m_[i].resize(cols_);
        for (int i = 0; i < rows_; ++i)
            if (basis_[i] >= cols_) basis_[i] = -1;  // redundant row marker
        return true;
    }

    // Maximize c.y from the current feasible basis. Returns false if unbounded.
    bool phase2(const std::vector<Rat>& c) {
        std::vector<Rat> cost(cols_);
        for (int j = 0; j < cols_; ++j) cost[j] = -c[j];  // minimize -c
        build_reduced(cost);
        return run();
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(cols_);
        for (int i = 0; i < rows_; ++i)
            if (basis_[i] >= 0 && basis_[i] < cols_) x[basis_[i]] = d_[i];
        return x;
    }

    Rat objective() const { return objective_; }  // phase-2 max value

  private:
    void build_reduced(const std::vector<Rat>& cost) {
        cost_ = cost;
        cost_.resize(m_.empty() ? cost.size() : m_[0].size());
        objective_ = 0;
        // Price out the basic columns.
        for (int i = 0; i < rows_; ++i) {
            int b = basis_[i];
            if (b < 0 || cost_[b] == 0) continue;
            Rat f = cost_[b];
            for (size_t j = 0; j < cost_.size(); ++j) cost_[j] -= f * m_[i][j];
            objective_ -= f * d_[i];
        }
    }

    bool run() {
        for (;;) {
            int enter = -1;
            for (size_t j = 0; j < cost_.size(); ++j)
                if (cost_[j] < 0) { enter = static_cast<int>(j); break; }  // Bland: lowest index
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < rows_; ++i) {
                if (basis_[i] < 0) continue;  // redundant row
                if (m_[i][enter] <= 0) continue;
                Rat ratio = d_[i] / m_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat piv = m_[row][col];
        for (auto& e : m_[row]) e /= piv;
        d_[row] /= piv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m_[i][col] == 0) continue;
            Rat f = m_[i][col];
            for (size_t j = 0; j < m_[i].size(); ++j) m_[i][j] -= f * m_[row][j];
            d_[i] -= f * d_[row];
        }
        if (cost_[col] != 0) {
            Rat f = cost_[col];
            for (size_t j = 0; j < cost_.size(); ++j) cost_[j] -= f * m_[row][j];
            objective_ -= f * d_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<Rat>> m_;
    std::vector<Rat> d_;
    std::vector<Rat> cost_;
    std::vector<int> basis_;
    Rat objective_;
    int rows_ = 0, cols_ = 0;
};

struct StandardForm {
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> d;
    std::vector<std::pair<int, int>> var_map;  // original var -> (plus col, minus col or -1)
    int n_cols = 0;
};

// Split free variables into differences of nonnegatives.
StandardForm to_standard(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<bool>& nonneg) {
    StandardForm sf;
    const int n = nonneg.empty() ? (a.empty() ? 0 : static_cast<int>(a[0].size()))
                                 : static_cast<int>(nonneg.size());
    sf.var_map.resize(n);
    for (int j = 0; j < n; ++j) {
        if (nonneg[j])
            sf.var_map[j] = {sf.n_cols++, -1};
        else {
            sf.var_map[j] = {sf.n_cols, sf.n_cols + 1};
            sf.n_cols += 2;
        }
    }
    sf.m.assign(a.size(), std::vector<Rat>(sf.n_cols));
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < n; ++j) {
            if (a[i][j] == 0) continue;
            sf.m[i][sf.var_map[j].first] = a[i][j];
            if (sf.var_map[j].second >= 0) sf.m[i][sf.var_map[j].second] = -a[i][j];
        }
    sf.d = b;
    return sf;
}

std::vector<Rat> from_standard(const StandardForm& sf, const std::vector<Rat>& y) {
    std::vector<Rat> x(sf.var_map.size());
    for (size_t j = 0; j < sf.var_map.size(); ++j) {
        x[j] = y[sf.var_map[j].first];
        if (sf.var_map[j].second >= 0) x[j] -= y[sf.var_map[j].second];
    }
    return x;
}

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& c, const std::vector<bool>& nonneg) {
    StandardForm sf = to_standard(a, b, nonneg);
    Simplex sx(sf.m, sf.d);
    LpResult res;
    if (!sx.phase1()) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    std::vector<Rat> cs(sf.n_cols);
    for (size_t j = 0; j < c.size(); ++j) {
        cs[sf.var_map[j].first] = c[j];
        if (sf.var_map[j].second >= 0) cs[sf.var_map[j].second] = -c[j];
    }
    if (!sx.phase2(cs)) {
        res.status = LpStatus::Unbounded;
        res.x = from_standard(sf, sx.solution());
        return res;
    }
    res.status = LpStatus::Optimal;
    res.objective = sx.objective();
    res.x = from_standard(sf, sx.solution());
    return res;
}

std::optional<std::vector<Rat>> lp_feasible(const FeasibilityQuery& q) {
    const int n = q.equalities.cols;
    const int rows = q.equalities.rows;
    if (!q.rhs.empty() && static_cast<int>(q.rhs.size()) != rows)
        throw exact_error("lp_feasible: rhs dimension mismatch");
    for (int i : q.nonneg_indices)
        if (i < 0 || i >= n) throw exact_error("lp_feasible: nonneg index out of range");
    for (const auto& s : q.strict_positive_sums)
        for (int i : s)
            if (i < 0 || i >= n) throw exact_error("lp_feasible: strict index out of range");

    // Variables: x_0..x_{n-1}, then delta when strict sums are present.
    const bool strict = !q.strict_positive_sums.empty();
    const int nv = n + (strict ? 1 : 0);
    std::vector<bool> nonneg(nv, false);
    for (int i : q.nonneg_indices) nonneg[i] = true;
    if (strict) nonneg[n] = true;

    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int i = 0; i < rows; ++i) {
        std::vector<Rat> row(nv);
        for (int j = 0; j < n; ++j) row[j] = Rat(q.equalities.at(i, j));
        a.push_back(std::move(row));
        b.push_back(q.rhs.empty() ? Rat(0) : q.rhs[i]);
    }
    if (strict) {
        // sum_{i in S} x_i - delta >= 0 for each S, plus delta <= 1 to stay
        // bounded; feasible with a positive optimum iff the strict system is.
        const int m = static_cast<int>(q.strict_positive_sums.size());
        const int total = nv + m + 1;  // x, delta, one slack per strict set, cap slack
        for (auto& r : a) r.resize(total);
        for (int k = 0; k < m; ++k) {
            std::vector<Rat> row(total);
            for (int i : q.strict_positive_sums[k]) row[i] += 1;
            row[n] = -1;
            row[nv + k] = -1;
            a.push_back(std::move(row));
            b.push_back(0);
        }
        {
            std::vector<Rat> row(total);
            row[n] = 1;
            row[nv + m] = 1;
            a.push_back(std::move(row));
            b.push_back(1);
        }
        nonneg.resize(total, true);
        std::vector<Rat> c(total);
        c[n] = 1;
        LpResult r = lp_maximize(a, b, c, nonneg);
        if (r.status != LpStatus::Optimal || r.objective <= 0) return std::nullopt;
        std::vector<Rat> x(r.x.begin(), r.x.begin() + n);
        return x;
    }
    std::vector<Rat> c(nv);
    LpResult r = lp_maximize(a, b, c, nonneg);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    std::vector<Rat> x(r.x.begin(), r.x.begin() + n);
    return x;
}

LpResult lp_extremum(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<bool>& nonneg, int index, bool maximize) {
    std::vector<Rat> c(nonneg.size());
    c[index] = maximize ? 1 : -1;
    LpResult r = lp_maximize(a, b, c, nonneg);
    if (r.status == LpStatus::Optimal && !maximize) r.objective = -r.objective;
    return r;
}

}  // namespace surfcount
