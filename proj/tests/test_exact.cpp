#include "doctest.h"

#include "surfcount/exact.hpp"
#include "surfcount/lp.hpp"

#include <random>

using namespace surfcount;

namespace {

IntMat from_rows(const std::vector<std::vector<int>>& rows) {
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

bool is_unimodular(const IntMat& m) {
    Int d = det(m);
    return d == 1 || d == -1;
}

bool is_snf_shape(const IntMat& s) {
    int n = std::min(s.rows, s.cols);
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j)
            if (i != j && s.at(i, j) != 0) return false;
    for (int k = 0; k < n; ++k)
        if (s.at(k, k) < 0) return false;
    for (int k = 0; k + 1 < n; ++k) {
        const Int &a = s.at(k, k), &b = s.at(k + 1, k + 1);
        if (a == 0 && b != 0) return false;
        if (a != 0 && b != 0 && b % a != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    SUBCASE("identity") {
        auto r = smith_normal_form(IntMat::identity(2));
        CHECK(r.s == IntMat::identity(2));
        CHECK(r.rank == 2);
    }
    SUBCASE("divisibility reorder of diag(4,2)") {
        auto r = smith_normal_form(from_rows({{4, 0}, {0, 2}}));
        CHECK(r.s.at(0, 0) == 2);
        CHECK(r.s.at(1, 1) == 4);
    }
    SUBCASE("[[2,4],[6,8]] has S = diag(2,4)") {
        IntMat a = from_rows({{2, 4}, {6, 8}});
        auto r = smith_normal_form(a);
        CHECK(r.s.at(0, 0) == 2);
        CHECK(r.s.at(1, 1) == 4);
        CHECK(mat_mul(mat_mul(r.u, a), r.v) == r.s);
        CHECK(is_unimodular(r.u));
        CHECK(is_unimodular(r.v));
    }
}

TEST_CASE("smith normal form randomized round trip") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 12), entry(-50, 50);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat a(dim(rng), dim(rng));
        for (auto& x : a.a) x = entry(rng);
        auto r = smith_normal_form(a);
        CHECK(mat_mul(mat_mul(r.u, a), r.v) == r.s);
        CHECK(is_unimodular(r.u));
        CHECK(is_unimodular(r.v));
        CHECK(is_snf_shape(r.s));
    }
}

TEST_CASE("integer kernel basis") {
    SUBCASE("[1,-1]") {
        auto b = integer_kernel_basis(from_rows({{1, -1}}));
        REQUIRE(b.size() == 1);
        std::vector<Int> v = b[0];
        make_primitive(v);
        CHECK(v == std::vector<Int>{1, 1});
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(integer_kernel_basis(IntMat::identity(3)).empty());
    }
    SUBCASE("[[2,-1,0],[0,1,-2]] gives (1,2,1) as index-1 lattice") {
        IntMat a = from_rows({{2, -1, 0}, {0, 1, -2}});
        auto b = integer_kernel_basis(a);
        REQUIRE(b.size() == 1);
        std::vector<Int> v = b[0];
        make_primitive(v);
        CHECK(v == std::vector<Int>{1, 2, 1});
        // Brute-force: smallest integer kernel vectors are multiples of (1,2,1).
        for (int x = -6; x <= 6; ++x)
            for (int y = -6; y <= 6; ++y)
                for (int z = -6; z <= 6; ++z) {
                    if (2 * x - y != 0 || y - 2 * z != 0) continue;
                    CHECK(x == z);
                    CHECK(y == 2 * z);
                }
    }
    SUBCASE("kernel vectors actually lie in the kernel (random)") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int trial = 0; trial < 40; ++trial) {
            IntMat a(3, 6);
            for (auto& x : a.a) x = entry(rng);
            for (const auto& v : integer_kernel_basis(a)) {
                auto out = mat_apply(a, v);
                for (const auto& e : out) CHECK(e == 0);
            }
        }
    }
}

TEST_CASE("lattice complement") {
    SUBCASE("axis subspace") {
        auto d = lattice_complement({{Int(1), Int(0)}}, 2);
        CHECK(d.input_was_saturated);
        REQUIRE(d.l_basis.size() == 1);
        auto t = d.project({Int(5), Int(7)});
        // Kernel is the first axis: projection kills it.
        auto again = d.project(t);
        CHECK(again == t);
        auto zero = d.project({Int(3), Int(0)});
        CHECK(zero == std::vector<Int>{0, 0});
    }
    SUBCASE("diagonal subspace") {
        auto d = lattice_complement({{Int(1), Int(1)}}, 2);
        auto t = d.project({Int(1), Int(1)});
        CHECK(t == std::vector<Int>{0, 0});
        // T is idempotent and integral.
        auto p = d.project({Int(2), Int(5)});
        CHECK(d.project(p) == p);
        // v - T(v) must be a multiple of (1,1).
        std::vector<Int> v{Int(2), Int(5)};
        auto w = vec_sub(v, p);
        CHECK(w[0] == w[1]);
    }
    SUBCASE("non-saturated input is repaired and reported") {
        auto d = lattice_complement({{Int(2), Int(2)}}, 2);
        CHECK_FALSE(d.input_was_saturated);
        CHECK(d.saturation_index == 2);
        REQUIRE(d.w_basis.size() == 1);
        Int g = gcd(d.w_basis[0][0], d.w_basis[0][1]);
        CHECK(abs(d.w_basis[0][0]) == g);  // primitive (1,1) direction
        CHECK(d.w_basis[0][0] == d.w_basis[0][1]);
    }
    SUBCASE("random decompositions split 1000 lattice vectors") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> entry(-4, 4);
        int checked = 0;
        for (int trial = 0; trial < 25 && checked < 1000; ++trial) {
            int n = 4;
            std::vector<std::vector<Int>> w;
            for (int k = 0; k < 2; ++k) {
                std::vector<Int> v(n);
                for (auto& x : v) x = entry(rng);
                w.push_back(v);
            }
            IntMat m(2, n);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = w[i][j];
            if (rank_q(m) != 2) continue;
            auto d = lattice_complement(w, n);
            std::uniform_int_distribution<int> big(-50, 50);
            for (int s = 0; s < 50; ++s, ++checked) {
                std::vector<Int> v(n);
                for (auto& x : v) x = big(rng);
                auto t = d.project(v);
                // T(v) is in L(Z): integer coordinates in the L basis.
                CHECK(coordinates_in_basis(d.l_basis, t).has_value());
                // v - T(v) is in W(Z).
                CHECK(coordinates_in_basis(d.w_basis, vec_sub(v, t)).has_value());
            }
        }
        CHECK(checked >= 1000);
    }
}

TEST_CASE("lp feasibility") {
    SUBCASE("x1 = x2 with strict positivity has a witness") {
        FeasibilityQuery q;
        q.equalities = from_rows({{1, -1}});
        q.nonneg_indices = {0, 1};
        q.strict_positive_sums = {{0}};
        auto x = lp_feasible(q);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == (*x)[1]);
        CHECK((*x)[0] > 0);
    }
    SUBCASE("x1 + x2 = 0 with x >= 0 and x1 > 0 is infeasible") {
        FeasibilityQuery q;
        q.equalities = from_rows({{1, 1}});
        q.nonneg_indices = {0, 1};
        q.strict_positive_sums = {{0}};
        CHECK_FALSE(lp_feasible(q).has_value());
    }
    SUBCASE("affine rhs") {
        FeasibilityQuery q;
        q.equalities = from_rows({{1, 1}});
        q.rhs = {Rat(1)};
        q.nonneg_indices = {0, 1};
        q.strict_positive_sums = {{0}, {1}};
        auto x = lp_feasible(q);
        REQUIRE(x.has_value());
        CHECK((*x)[0] + (*x)[1] == 1);
        CHECK((*x)[0] > 0);
        CHECK((*x)[1] > 0);
    }
    SUBCASE("witnesses never violate constraints; brute-force agreement") {
        // Random 2-3 variable systems, compared against rational grid search
        // with denominators <= 8.
        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> entry(-3, 3), nv(2, 3);
        for (int trial = 0; trial < 120; ++trial) {
            int n = nv(rng);
            FeasibilityQuery q;
            q.equalities = IntMat(1, n);
            for (int j = 0; j < n; ++j) q.equalities.at(0, j) = entry(rng);
            for (int j = 0; j < n; ++j) q.nonneg_indices.push_back(j);
            q.strict_positive_sums = {{0}};
            auto x = lp_feasible(q);
            if (x) {
                Rat dot;
                for (int j = 0; j < n; ++j) dot += Rat(q.equalities.at(0, j)) * (*x)[j];
                CHECK(dot == 0);
                CHECK((*x)[0] > 0);
                for (int j = 0; j < n; ++j) CHECK((*x)[j] >= 0);
            } else {
                // Grid search must also fail.
                bool found = false;
                std::vector<int> num(n);
                const int den = 8, top = 16;
                std::function<void(int)> rec = [&](int k) {
                    if (found) return;
                    if (k == n) {
                        Int dot = 0;
                        for (int j = 0; j < n; ++j) dot += Int(q.equalities.at(0, j)) * num[j];
                        if (dot == 0 && num[0] > 0) found = true;
                        return;
                    }
                    for (num[k] = 0; num[k] <= top; ++num[k]) rec(k + 1);
                };
                rec(0);
                (void)den;
                CHECK_FALSE(found);
            }
        }
    }
}

TEST_CASE("lp maximize") {
    // max x+y st x+y+s = 3 treated via equality x + y = 3, x,y >= 0.
    std::vector<std::vector<Rat>> a{{Rat(1), Rat(1)}};
    std::vector<Rat> b{Rat(3)};
    auto r = lp_maximize(a, b, {Rat(1), Rat(2)}, {true, true});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 6);

    // Unbounded: max x st x - y = 0.
    auto u = lp_maximize({{Rat(1), Rat(-1)}}, {Rat(0)}, {Rat(1), Rat(0)}, {true, true});
    CHECK(u.status == LpStatus::Unbounded);

    // Infeasible: x = -1 with x >= 0.
    auto inf = lp_maximize({{Rat(1)}}, {Rat(-1)}, {Rat(1)}, {true});
    CHECK(inf.status == LpStatus::Infeasible);
}
