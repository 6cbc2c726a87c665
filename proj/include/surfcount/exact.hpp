#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcount {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Dense matrix of arbitrary-precision integers, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
std::vector<Int> mat_apply(const IntMat& m, const std::vector<Int>& v);
IntMat transpose(const IntMat& m);
Int det(const IntMat& m);  // square only

// Rank over Q of an integer matrix (fraction-free elimination).
int rank_q(const IntMat& m);

// Divide a vector by the gcd of its entries; flips sign so the first
// nonzero entry is positive. Zero vectors pass through.
void make_primitive(std::vector<Int>& v);

Int vec_gcd(const std::vector<Int>& v);
std::vector<Int> vec_sub(const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> vec_add(const std::vector<Int>& x, const std::vector<Int>& y);

// U*A*V = S with U, V unimodular and S diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithResult {
    IntMat u, s, v;
    int rank = 0;
};
SmithResult smith_normal_form(const IntMat& a);

// Basis of ker(A) as a saturated lattice in Z^cols (empty when trivial).
std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& a);

// Basis of span_Q(rows) o Z^cols, i.e. the saturation of the row lattice.
std::vector<std::vector<Int>> saturated_span_basis(const std::vector<std::vector<Int>>& rows, int dim);

// Solve A x = b over the integers. Returns a particular solution or
// nullopt when none exists (the rational solution set may still be
// nonempty). Kernel directions come from integer_kernel_basis.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// Z^n = W(Z) (+) L(Z) with W(Z) the saturation of the span of w_basis.
struct LatticeDecomposition {
    int ambient_dim = 0;
    std::vector<std::vector<Int>> w_basis;  // saturated basis of W(Z)
    std::vector<std::vector<Int>> l_basis;  // complement basis of L(Z)
    IntMat projection;                      // T: ambient -> ambient, image L, kernel span(W)
    bool input_was_saturated = true;
    Int saturation_index = 1;               // index of the input lattice in W(Z)

    std::vector<Int> project(const std::vector<Int>& v) const { return mat_apply(projection, v); }
    // Coordinates of T(v) in the l_basis (integer for v in Z^n).
    std::vector<Int> l_coordinates(const std::vector<Int>& v) const;
};
LatticeDecomposition lattice_complement(const std::vector<std::vector<Int>>& w_basis, int ambient_dim);

// Express x in the given lattice basis; nullopt when x is outside the
// lattice (non-integer or out-of-span coordinates).
std::optional<std::vector<Int>> coordinates_in_basis(const std::vector<std::vector<Int>>& basis,
                                                     const std::vector<Int>& x);

// True when x lies in the rational span of the given vectors.
bool in_rational_span(const std::vector<std::vector<Int>>& vectors, const std::vector<Int>& x);

struct exact_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace surfcount
