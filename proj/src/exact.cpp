#include "surfcount/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace surfcount {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw exact_error("mat_mul: dimension mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

std::vector<Int> mat_apply(const IntMat& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw exact_error("mat_apply: dimension mismatch");
    std::vector<Int> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

IntMat transpose(const IntMat& m) {
    IntMat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw exact_error("det: matrix not square");
    // Bareiss fraction-free elimination.
    IntMat w = m;
    int n = m.rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int d = w.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

int rank_q(const IntMat& m) {
    IntMat w = m;
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        int p = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        for (int i = r + 1; i < w.rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Int g = gcd(w.at(r, c), w.at(i, c));
            Int mr = w.at(i, c) / g, mi = w.at(r, c) / g;
            for (int j = c; j < w.cols; ++j) w.at(i, j) = w.at(i, j) * mi - w.at(r, j) * mr;
        }
        ++r;
    }
    return r;
}

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<Int>& v) {
    Int g = vec_gcd(v);
    if (g == 0) return;
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

std::vector<Int> vec_sub(const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

std::vector<Int> vec_add(const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

namespace {

struct SnfWork {
    IntMat s, u, v;

    void row_swap(int i, int j) {
        for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_addmul(int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int c = 0; c < s.cols; ++c) s.at(dst, c) += f * s.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void col_addmul(int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < s.rows; ++r) s.at(r, dst) += f * s.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void row_negate(int i) {
        for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

namespace {

// Quotient of the division with remainder of least absolute value.
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ab = abs(b);
    if (2 * r > ab) q += 1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
    if (a.rows == 0 || a.cols == 0) throw exact_error("smith_normal_form: empty matrix");
    SnfWork w{a, IntMat::identity(a.rows), IntMat::identity(a.cols)};
    const int n = std::min(a.rows, a.cols);

    for (int k = 0; k < n; ++k) {
        for (;;) {
            // Smallest nonzero |entry| of the trailing block as pivot.
            int pr = -1, pc = -1;
            Int best;
            for (int i = k; i < w.s.rows; ++i)
                for (int j = k; j < w.s.cols; ++j) {
                    const Int& x = w.s.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pr < 0 || ax < best) {
                        best = ax;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) goto done;  // trailing block all zero
            if (pr != k) w.row_swap(k, pr);
            if (pc != k) w.col_swap(k, pc);

            // Reduce column and row k by the pivot. Any nonzero remainder is
            // strictly smaller than the pivot, so re-selecting converges.
            bool remainder = false;
            for (int i = k + 1; i < w.s.rows; ++i) {
                if (w.s.at(i, k) == 0) continue;
                w.row_addmul(i, k, -round_div(w.s.at(i, k), w.s.at(k, k)));
                if (w.s.at(i, k) != 0) remainder = true;
            }
            for (int j = k + 1; j < w.s.cols; ++j) {
                if (w.s.at(k, j) == 0) continue;
                w.col_addmul(j, k, -round_div(w.s.at(k, j), w.s.at(k, k)));
                if (w.s.at(k, j) != 0) remainder = true;
            }
            if (remainder) continue;

            // Pivot must divide the whole trailing block for the chain
            // d_k | d_{k+1}; fold in an offending row and restart.
            bool divides = true;
            for (int i = k + 1; i < w.s.rows && divides; ++i)
                for (int j = k + 1; j < w.s.cols; ++j)
                    if (w.s.at(i, j) % w.s.at(k, k) != 0) {
                        w.row_addmul(k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.s.at(k, k) < 0) w.row_negate(k);
    }
done:

    SmithResult res{w.u, w.s, w.v, 0};
    for (int k = 0; k < n; ++k)
        if (w.s.at(k, k) != 0) ++res.rank;
    return res;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& a) {
    if (a.rows == 0 || a.cols == 0) {
        // No constraints: kernel is all of Z^cols.
        std::vector<std::vector<Int>> basis;
        for (int j = 0; j < a.cols; ++j) {
            std::vector<Int> e(a.cols);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    SmithResult snf = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (int j = snf.rank; j < a.cols; ++j) {
        std::vector<Int> col(a.cols);
        for (int i = 0; i < a.cols; ++i) col[i] = snf.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

std::vector<std::vector<Int>> saturated_span_basis(const std::vector<std::vector<Int>>& rows, int dim) {
    if (rows.empty()) return {};
    IntMat r(static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) r.at(static_cast<int>(i), j) = rows[i][j];
    auto ann = integer_kernel_basis(r);  // functionals vanishing on the span
    if (ann.empty()) {
        std::vector<std::vector<Int>> basis;
        for (int j = 0; j < dim; ++j) {
            std::vector<Int> e(dim);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    IntMat n(static_cast<int>(ann.size()), dim);
    for (size_t i = 0; i < ann.size(); ++i)
        for (int j = 0; j < dim; ++j) n.at(static_cast<int>(i), j) = ann[i][j];
    return integer_kernel_basis(n);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    SmithResult snf = smith_normal_form(a);
    std::vector<Int> ub = mat_apply(snf.u, b);
    std::vector<Int> y(a.cols);
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        Int d = (i < n) ? snf.s.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;  // inconsistent
        } else {
            if (ub[i] % d != 0) return std::nullopt;  // rational but not integral
            y[i] = ub[i] / d;
        }
    }
    return mat_apply(snf.v, y);
}

LatticeDecomposition lattice_complement(const std::vector<std::vector<Int>>& w_basis, int ambient_dim) {
    LatticeDecomposition dec;
    dec.ambient_dim = ambient_dim;
    if (w_basis.empty()) {
        dec.projection = IntMat::identity(ambient_dim);
        for (int j = 0; j < ambient_dim; ++j) {
            std::vector<Int> e(ambient_dim);
            e[j] = 1;
            dec.l_basis.push_back(std::move(e));
        }
        return dec;
    }
    const int k = static_cast<int>(w_basis.size());
    IntMat bt(ambient_dim, k);  // basis vectors as columns
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(w_basis[j].size()) != ambient_dim)
            throw exact_error("lattice_complement: basis vector has wrong dimension");
        for (int i = 0; i < ambient_dim; ++i) bt.at(i, j) = w_basis[j][i];
    }
    SmithResult snf = smith_normal_form(bt);
    if (snf.rank != k)
        throw exact_error("lattice_complement: input vectors are linearly dependent");

    // U * B^T * V = S, so the first k columns of U^{-1} span the saturation
    // of W, and columns k..n-1 give an integral complement.
    // U^{-1} is recovered by exact inverse of the unimodular U.
    IntMat uinv(ambient_dim, ambient_dim);
    {
        // Solve U * X = I column by column with integer elimination; U unimodular.
        IntMat w = snf.u;
        IntMat rhs = IntMat::identity(ambient_dim);
        // Forward elimination with exact row ops (pivot by +-1 reachable via gcd steps
        // is unnecessary: use rational elimination then verify integrality).
        // Simpler: adjugate-free approach via rational Gauss-Jordan.
        std::vector<std::vector<Rat>> m(ambient_dim, std::vector<Rat>(2 * ambient_dim));
        for (int i = 0; i < ambient_dim; ++i) {
            for (int j = 0; j < ambient_dim; ++j) m[i][j] = Rat(w.at(i, j));
            m[i][ambient_dim + i] = 1;
        }
        for (int c = 0; c < ambient_dim; ++c) {
            int p = -1;
            for (int i = c; i < ambient_dim; ++i)
                if (m[i][c] != 0) { p = i; break; }
            if (p < 0) throw exact_error("lattice_complement: singular unimodular matrix");
            std::swap(m[c], m[p]);
            Rat piv = m[c][c];
            for (int j = 0; j < 2 * ambient_dim; ++j) m[c][j] /= piv;
            for (int i = 0; i < ambient_dim; ++i) {
                if (i == c || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (int j = 0; j < 2 * ambient_dim; ++j) m[i][j] -= f * m[c][j];
            }
        }
        for (int i = 0; i < ambient_dim; ++i)
            for (int j = 0; j < ambient_dim; ++j) {
                Rat x = m[i][ambient_dim + j];
                if (x.get_den() != 1) throw exact_error("lattice_complement: U inverse not integral");
                uinv.at(i, j) = x.get_num();
            }
    }

    dec.saturation_index = 1;
    for (int j = 0; j < k; ++j) dec.saturation_index *= snf.s.at(j, j);
    dec.input_was_saturated = (dec.saturation_index == 1);

    for (int j = 0; j < ambient_dim; ++j) {
        std::vector<Int> col(ambient_dim);
        for (int i = 0; i < ambient_dim; ++i) col[i] = uinv.at(i, j);
        if (j < k)
            dec.w_basis.push_back(std::move(col));
        else
            dec.l_basis.push_back(std::move(col));
    }

    // T = U^{-1} * diag(0...0,1...1) * U.
    IntMat mask(ambient_dim, ambient_dim);
    for (int i = k; i < ambient_dim; ++i) mask.at(i, i) = 1;
    dec.projection = mat_mul(uinv, mat_mul(mask, snf.u));
    return dec;
}

std::vector<Int> LatticeDecomposition::l_coordinates(const std::vector<Int>& v) const {
    std::vector<Int> p = project(v);
    auto c = coordinates_in_basis(l_basis, p);
    if (!c) throw exact_error("l_coordinates: projected vector not in L(Z)");
    return *c;
}

std::optional<std::vector<Int>> coordinates_in_basis(const std::vector<std::vector<Int>>& basis,
                                                     const std::vector<Int>& x) {
    if (basis.empty()) {
        for (const Int& e : x)
            if (e != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    const int dim = static_cast<int>(basis[0].size());
    const int k = static_cast<int>(basis.size());
    // Solve sum_j c_j basis_j = x by rational elimination over the k unknowns.
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(k + 1));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][k] = Rat(x[i]);
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < k && row < dim; ++c) {
        int p = -1;
        for (int i = row; i < dim; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Rat piv = m[row][c];
        for (int j = c; j <= k; ++j) m[row][j] /= piv;
        for (int i = 0; i < dim; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) != k) return std::nullopt;  // dependent basis
    for (int i = row; i < dim; ++i)
        if (m[i][k] != 0) return std::nullopt;  // x outside span
    std::vector<Int> coords(k);
    for (int r = 0; r < k; ++r) {
        Rat c = m[r][k];
        if (c.get_den() != 1) return std::nullopt;
        coords[pivot_col[r]] = c.get_num();
    }
    return coords;
}

bool in_rational_span(const std::vector<std::vector<Int>>& vectors, const std::vector<Int>& x) {
    bool x_zero = true;
    for (const Int& e : x)
        if (e != 0) { x_zero = false; break; }
    if (x_zero) return true;
    if (vectors.empty()) return false;
    const int dim = static_cast<int>(x.size());
    IntMat m(static_cast<int>(vectors.size()), dim);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
    IntMat m2(static_cast<int>(vectors.size()) + 1, dim);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < dim; ++j) m2.at(i, j) = m.at(i, j);
    for (int j = 0; j < dim; ++j) m2.at(m.rows, j) = x[j];
    return rank_q(m) == rank_q(m2);
}

}  // namespace surfcount
