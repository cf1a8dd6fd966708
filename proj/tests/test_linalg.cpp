#include <doctest.h>

#include "novcoh/fuzz.hpp"
#include "support.hpp"

using namespace test;

namespace {

bool is_diagonal_with_divisibility(const ScalarMatrix& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && !s(i, j).is_zero()) return false;
    const std::size_t k = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const mpz_class a = s(i, i).numerator();
        const mpz_class b = s(i + 1, i + 1).numerator();
        if (a < 0) return false;
        if (a == 0 && b != 0) return false;
        if (a != 0 && b % a != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("matrix products: serial and parallel agree") {
    fuzz::Rng rng(3);
    for (auto ring : {ZZ, F(7)}) {
        for (int t = 0; t < 10; ++t) {
            const auto a = fuzz::random_matrix(rng, ring, 1 + fuzz::draw(rng, 30), 1 + fuzz::draw(rng, 30));
            const auto b = fuzz::random_matrix(rng, ring, a.cols(), 1 + fuzz::draw(rng, 30));
            CHECK(serial::multiply(a, b) == parallel::multiply(a, b));
        }
    }
    CHECK_THROWS_AS(mat(ZZ, {{1, 2}}) * mat(ZZ, {{1, 2}}), DomainError);
}

TEST_CASE("row_reduce: serial and parallel agree, rank matches elimination") {
    fuzz::Rng rng(4);
    for (auto ring : {F(2), F(5), QQ}) {
        for (int t = 0; t < 20; ++t) {
            const auto a = fuzz::random_matrix(rng, ring, 1 + fuzz::draw(rng, 40), 1 + fuzz::draw(rng, 40), 2);
            const auto e1 = serial::row_reduce(a);
            const auto e2 = parallel::row_reduce(a);
            CHECK(e1.reduced == e2.reduced);
            CHECK(e1.pivot_cols == e2.pivot_cols);
            CHECK(rank_field(a) == e1.rank());
            CHECK(rank_field(a.transposed()) == e1.rank());
        }
    }
    CHECK_THROWS_AS(row_reduce(mat(ZZ, {{2}})), DomainError);
}

TEST_CASE("solve_field and nullspace_field") {
    const auto a = mat(F(5), {{1, 2, 3}, {2, 4, 2}});
    const auto b = vec(F(5), {1, 0});
    const auto x = solve_field(a, b);
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
    const auto n = nullspace_field(a);
    CHECK(n.cols() == 1);
    CHECK((a * n).is_zero());
    CHECK_FALSE(solve_field(mat(QQ, {{1, 1}, {1, 1}}), vec(QQ, {0, 1})));

    fuzz::Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        const auto m = fuzz::random_matrix(rng, F(3), 1 + fuzz::draw(rng, 8), 1 + fuzz::draw(rng, 8));
        const auto ns = nullspace_field(m);
        CHECK(ns.cols() + rank_field(m) == m.cols());
        CHECK((m * ns).is_zero());
        CHECK(rank_field(ns) == ns.cols());
    }
}

TEST_CASE("smith_normal_form: U A V = S, inverses, divisibility") {
    const auto a = mat(ZZ, {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto snf = smith_normal_form(a);
    CHECK(snf.u * a * snf.v == snf.s);
    CHECK(snf.diagonal() == std::vector<mpz_class>{2, 6, 12});

    fuzz::Rng rng(9);
    for (int t = 0; t < 60; ++t) {
        const auto m = fuzz::random_matrix(rng, ZZ, fuzz::draw(rng, 7), fuzz::draw(rng, 7), 9);
        const auto f = smith_normal_form(m);
        CHECK(f.u * m * f.v == f.s);
        CHECK(f.u * f.u_inv == ScalarMatrix::identity(ZZ, m.rows()));
        CHECK(f.v * f.v_inv == ScalarMatrix::identity(ZZ, m.cols()));
        CHECK(is_diagonal_with_divisibility(f.s));
        CHECK(f.rank() == rank_field(map_base(m, QQ)));
    }
    CHECK_THROWS_AS(smith_normal_form(mat(F(3), {{1}})), RingMismatch);
}

TEST_CASE("solve_int and nullspace_int") {
    const auto a = mat(ZZ, {{2, 0}, {0, 3}});
    CHECK(solve_int(a, vec(ZZ, {4, 9})) == std::optional<Vector>(vec(ZZ, {2, 3})));
    CHECK_FALSE(solve_int(a, vec(ZZ, {1, 0})));
    // Rationally solvable but not integrally.
    CHECK_FALSE(solve_int(mat(ZZ, {{2, 4}}), vec(ZZ, {3})));

    fuzz::Rng rng(10);
    for (int t = 0; t < 40; ++t) {
        const auto m = fuzz::random_matrix(rng, ZZ, 1 + fuzz::draw(rng, 5), 1 + fuzz::draw(rng, 5), 5);
        Vector x0;
        for (std::size_t j = 0; j < m.cols(); ++j) x0.push_back(fuzz::random_scalar(rng, ZZ, 4));
        const auto b = m.apply(x0);
        const auto x = solve_int(m, b);
        REQUIRE(x);
        CHECK(m.apply(*x) == b);
        const auto ns = nullspace_int(m);
        CHECK((m * ns).is_zero());
        CHECK(ns.cols() + smith_normal_form(m).rank() == m.cols());
    }
}

TEST_CASE("det_laurent: examples, multiplicativity, cofactor vs elimination") {
    CHECK(det_laurent(LaurentMatrix(ZZ, 0, 0)) == LaurentPoly::one(ZZ));
    auto a = to_laurent(mat(ZZ, {{2}})) - LaurentMatrix::identity(ZZ, 1).scaled(lp(ZZ, {{1, 1}}));
    CHECK(det_laurent(a) == lp(ZZ, {{0, 2}, {1, -1}}));
    // Permutation h: det(h - z I) = z^2 - 1.
    auto p = to_laurent(mat(ZZ, {{0, 1}, {1, 0}})) - LaurentMatrix::identity(ZZ, 2).scaled(lp(ZZ, {{1, 1}}));
    CHECK(det_laurent(p) == lp(ZZ, {{0, -1}, {2, 1}}));

    fuzz::Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + fuzz::draw(rng, 6);
        LaurentMatrix x(ZZ, n, n), y(ZZ, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x(i, j) = lp(ZZ, {{-1, fuzz::draw_range(rng, -2, 2)}, {0, fuzz::draw_range(rng, -2, 2)}});
                y(i, j) = lp(ZZ, {{0, fuzz::draw_range(rng, -2, 2)}, {1, fuzz::draw_range(rng, -2, 2)}});
            }
        CHECK(det_laurent(x * y) == det_laurent(x) * det_laurent(y));
        // Evaluation is a ring map: det commutes with it.
        const Scalar c(QQ, 3L);
        const auto xq = map_base(x, QQ);
        CHECK(det_laurent(xq).evaluate(c) == det_laurent(to_laurent(evaluate(xq, c))).coeff(0));
    }
}

TEST_CASE("rank_laurent_fraction against evaluation points") {
    fuzz::Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + fuzz::draw(rng, 5), c = 1 + fuzz::draw(rng, 5);
        // Product of thin factors gives rank deficiency.
        const std::size_t k = 1 + fuzz::draw(rng, 3);
        LaurentMatrix a(F(101), r, k), b(F(101), k, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j)
                a(i, j) = lp(F(101), {{0, fuzz::draw_range(rng, 0, 100)}, {1, fuzz::draw_range(rng, 0, 100)}});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < c; ++j)
                b(i, j) = lp(F(101), {{-1, fuzz::draw_range(rng, 0, 100)}, {0, fuzz::draw_range(rng, 0, 100)}});
        const auto m = a * b;
        const auto rk = rank_laurent_fraction(m);
        CHECK(serial::bareiss_rank(m) == parallel::bareiss_rank(m));
        std::size_t best = 0;
        for (long pt = 1; pt <= 12; ++pt) {
            const auto ev = rank_field(evaluate(m, Scalar(F(101), pt)));
            CHECK(ev <= rk);
            best = std::max(best, ev);
        }
        // Twelve points cannot all be roots of a nonzero minor of degree <= 10.
        CHECK(best == rk);
    }
    CHECK_THROWS_AS(rank_laurent_fraction(LaurentMatrix(ZZ, 1, 1)), DomainError);
}

}  // TEST_SUITE
