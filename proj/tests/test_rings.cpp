#include <doctest.h>

#include "novcoh/fuzz.hpp"
#include "support.hpp"

using namespace test;

TEST_SUITE("rings") {

TEST_CASE("base rings and scalar parsing") {
    CHECK(BaseRing::parse("ZZ") == ZZ);
    CHECK(BaseRing::parse("F7") == F(7));
    CHECK_THROWS_AS(BaseRing::prime_field(6), DomainError);
    CHECK_THROWS_AS(BaseRing::parse("F1"), Error);
    CHECK_THROWS_AS(BaseRing::parse("RR"), ParseError);

    CHECK(Scalar::parse(ZZ, "-12").to_string() == "-12");
    CHECK(Scalar::parse(QQ, "-6/4").to_string() == "-3/2");
    CHECK_THROWS_AS(Scalar::parse(QQ, "6/-4"), ParseError);
    CHECK(Scalar::parse(QQ, "5").to_string() == "5");
    CHECK(Scalar::parse(F(5), "4").to_string() == "4");
    CHECK_THROWS_AS(Scalar::parse(F(5), "5"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(F(5), "-1"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(ZZ, "1/2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(QQ, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(ZZ, "12a"), ParseError);
}

TEST_CASE("scalar arithmetic keeps canonical representatives") {
    CHECK((s(F(5), 3) + s(F(5), 4)).to_string() == "2");
    CHECK((s(F(5), 0) - s(F(5), 1)).to_string() == "4");
    CHECK(s(F(7), 3).inverse() * s(F(7), 3) == s(F(7), 1));
    CHECK(s(ZZ, -1).is_unit());
    CHECK_FALSE(s(ZZ, 2).is_unit());
    CHECK_THROWS_AS(s(ZZ, 2).inverse(), DomainError);
    CHECK(exact_div(s(ZZ, 12), s(ZZ, -4)) == s(ZZ, -3));
    CHECK_THROWS_AS(exact_div(s(ZZ, 5), s(ZZ, 2)), DomainError);
    CHECK_THROWS_AS(s(ZZ, 1) + s(QQ, 1), RingMismatch);
    CHECK(map_scalar(s(ZZ, -1), F(3)) == s(F(3), 2));
}

TEST_CASE("laurent_arith examples") {
    CHECK(lp(ZZ, {{0, 2}, {1, -1}}) + lp(ZZ, {{1, 1}}) == lp(ZZ, {{0, 2}}));
    CHECK(lp(ZZ, {{0, 1}, {1, -1}}) * lp(ZZ, {{0, 1}, {1, 1}}) == lp(ZZ, {{0, 1}, {2, -1}}));
    const auto f2 = lp(F(2), {{0, 1}, {1, 1}});
    CHECK(f2 * f2 == lp(F(2), {{0, 1}, {2, 1}}));
    CHECK((f2 - f2).is_zero());
    CHECK((f2 - f2).terms().empty());
    CHECK_THROWS_AS(f2 + lp(ZZ, {{0, 1}}), RingMismatch);
    CHECK(lp(ZZ, {{0, 2}, {1, -1}}).to_string() == "2 - z");
    CHECK(lp(ZZ, {{-2, 1}, {0, 3}}).lo_deg() == -2);
    CHECK(lp(ZZ, {{-3, -1}}).is_unit());
    CHECK_FALSE(lp(ZZ, {{0, 2}, {1, -1}}).is_unit());
    CHECK_FALSE(lp(ZZ, {{1, 2}}).is_unit());
    CHECK(lp(QQ, {{1, 2}}).is_unit());
    CHECK(exact_div(lp(ZZ, {{0, 1}, {2, -1}}), lp(ZZ, {{0, 1}, {1, 1}})) == lp(ZZ, {{0, 1}, {1, -1}}));
    CHECK_THROWS_AS(exact_div(lp(ZZ, {{0, 1}}), lp(ZZ, {{0, 2}})), DomainError);
}

TEST_CASE("canonical form: sums never store zero coefficients") {
    fuzz::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly a(F(3)), b(F(3));
        for (int e = -3; e <= 3; ++e) {
            a.set_coeff(e, fuzz::random_scalar(rng, F(3)));
            b.set_coeff(e, fuzz::random_scalar(rng, F(3)));
        }
        const auto sum = a + b;
        const auto prod = a * b;
        for (const auto& [e, c] : sum.terms()) CHECK_FALSE(c.is_zero());
        for (const auto& [e, c] : prod.terms()) CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("novikov_unit examples") {
    const auto f = lp(ZZ, {{0, 2}, {1, -1}});
    const auto rt = novikov_unit(f, SeriesDir::Rt);
    CHECK(rt.unit);
    CHECK(rt.pivot_exp == 1);
    CHECK(rt.pivot_coeff == s(ZZ, -1));
    const auto lt = novikov_unit(f, SeriesDir::Lt);
    CHECK_FALSE(lt.unit);
    CHECK(lt.pivot_exp == 0);
    CHECK(lt.pivot_coeff == s(ZZ, 2));
    for (auto ring : {ZZ, QQ, F(2)}) {
        for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) CHECK(novikov_unit(lp(ring, {{1, 1}}), dir).unit);
    }
    CHECK_THROWS_AS(novikov_unit(LaurentPoly::zero(ZZ), SeriesDir::Lt), DomainError);
}

TEST_CASE("unit criterion over fields and direction symmetry") {
    fuzz::Rng rng(5);
    for (auto ring : {QQ, F(5), ZZ}) {
        for (int t = 0; t < 100; ++t) {
            LaurentPoly f(ring);
            for (int e = -2; e <= 2; ++e) f.set_coeff(e, fuzz::random_scalar(rng, ring));
            if (f.is_zero()) continue;
            if (ring.is_field()) {
                CHECK(novikov_unit(f, SeriesDir::Lt).unit);
                CHECK(novikov_unit(f, SeriesDir::Rt).unit);
            }
            const auto a = novikov_unit(f, SeriesDir::Lt);
            const auto b = novikov_unit(f.inverted_variable(), SeriesDir::Rt);
            CHECK(a.unit == b.unit);
            CHECK(a.pivot_exp == -b.pivot_exp);
            CHECK(a.pivot_coeff == b.pivot_coeff);
        }
    }
}

TEST_CASE("series_invert examples") {
    const auto g = series_invert(lp(ZZ, {{0, 2}, {1, -1}}), SeriesDir::Rt, 4);
    CHECK(g.hi() == -1);
    CHECK(g.lo() <= -4);
    CHECK(g.coeff(-1) == s(ZZ, -1));
    CHECK(g.coeff(-2) == s(ZZ, -2));
    CHECK(g.coeff(-3) == s(ZZ, -4));
    CHECK(g.coeff(-4) == s(ZZ, -8));
    CHECK(g.coeff(0).is_zero());  // known zero above the window

    const auto h = series_invert(lp(ZZ, {{0, 1}, {1, -1}}), SeriesDir::Lt, 3);
    CHECK(h.lo() == 0);
    CHECK(h.hi() == 3);
    for (int e = 0; e <= 3; ++e) CHECK(h.coeff(e) == s(ZZ, 1));

    for (int order : {1, 5, 9}) {
        const auto m = series_invert(lp(F(3), {{1, 1}}), SeriesDir::Lt, order);
        CHECK(m.truncation() == lp(F(3), {{-1, 1}}));
    }
    CHECK_THROWS_AS(series_invert(lp(ZZ, {{0, 2}, {1, -1}}), SeriesDir::Lt, 4), DomainError);
    CHECK_THROWS_AS(series_invert(lp(ZZ, {{0, 1}}), SeriesDir::Lt, 0), DomainError);
}

TEST_CASE("unit soundness: multiply back gives 1 on the determined window") {
    fuzz::Rng rng(17);
    int tested = 0;
    for (auto ring : {ZZ, QQ, F(2), F(5)}) {
        for (int t = 0; t < 40; ++t) {
            LaurentPoly f(ring);
            for (int e = -2; e <= 2; ++e) f.set_coeff(e, fuzz::random_scalar(rng, ring, 2));
            if (f.is_zero()) continue;
            for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
                if (!novikov_unit(f, dir).unit) continue;
                for (int order : {1, 2, 7, 16, 32}) {
                    const auto g = series_invert(f, dir, order);
                    CHECK(g.length() >= static_cast<std::size_t>(order));
                    const auto fw = SeriesWindow::from_poly(f, dir, f.lo_deg(), f.hi_deg());
                    CHECK(series_arith(fw, g, SeriesOp::Mul).is_one_on_window());
                    ++tested;
                }
            }
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("series_arith examples and window rule") {
    const auto a = SeriesWindow::from_poly(lp(ZZ, {{0, 1}, {1, 1}}), SeriesDir::Lt, 0, 1);
    const auto b = SeriesWindow::from_poly(lp(ZZ, {{1, 1}}), SeriesDir::Lt, 0, 1);
    const auto sum = series_arith(a, b, SeriesOp::Add);
    CHECK(sum.lo() == 0);
    CHECK(sum.hi() == 1);
    CHECK(sum.truncation() == lp(ZZ, {{0, 1}, {1, 2}}));

    const auto p = SeriesWindow::from_poly(lp(ZZ, {{0, 1}, {1, 1}}), SeriesDir::Lt, 0, 3);
    const auto q = SeriesWindow::from_poly(lp(ZZ, {{0, 1}, {1, -1}}), SeriesDir::Lt, 0, 3);
    const auto pq = series_arith(p, q, SeriesOp::Mul);
    CHECK(pq.lo() == 0);
    CHECK(pq.hi() == 3);
    CHECK(pq.truncation() == lp(ZZ, {{0, 1}, {2, -1}}));

    const auto u = SeriesWindow::from_poly(lp(ZZ, {{-1, 1}}), SeriesDir::Rt, -2, -1);
    const auto v = SeriesWindow::from_poly(lp(ZZ, {{1, 1}}), SeriesDir::Rt, 0, 1);
    const auto uv = series_arith(u, v, SeriesOp::Mul);
    CHECK(uv.lo() == -1);
    CHECK(uv.hi() == 0);
    CHECK(uv.truncation() == lp(ZZ, {{0, 1}}));
    CHECK(uv.is_one_on_window());

    CHECK_THROWS_AS(series_arith(a, u, SeriesOp::Add), DomainError);
    CHECK_THROWS_AS(a.coeff(2), DomainError);  // unknown side
    CHECK(a.coeff(-5).is_zero());
}

TEST_CASE("series products agree with polynomial products where determined") {
    fuzz::Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto dir = t % 2 ? SeriesDir::Lt : SeriesDir::Rt;
        LaurentPoly f(F(5)), g(F(5));
        for (int e = -3; e <= 3; ++e) {
            f.set_coeff(e, fuzz::random_scalar(rng, F(5)));
            g.set_coeff(e, fuzz::random_scalar(rng, F(5)));
        }
        // Exact polynomials: any window containing the support determines the product.
        const auto fw = SeriesWindow::from_poly(f, dir, -3, 3);
        const auto gw = SeriesWindow::from_poly(g, dir, -3, 3);
        const auto pw = series_arith(fw, gw, SeriesOp::Mul);
        const auto fg = f * g;
        for (auto e = pw.lo(); e <= pw.hi(); ++e) CHECK(pw.coeff(e) == fg.coeff(e));
    }
}

}  // TEST_SUITE
