#include <doctest.h>

#include "novcoh/fuzz.hpp"
#include "support.hpp"

using namespace test;

namespace {

SeriesWindow window_of(const BaseRing& ring, SeriesDir dir, long lo, std::initializer_list<long> cs) {
    SeriesWindow w(ring, dir, lo, lo + static_cast<long>(cs.size()) - 1);
    long e = lo;
    for (long c : cs) w.set_coeff(e++, Scalar(ring, c));
    return w;
}

SeriesWindow random_window(fuzz::Rng& rng, SeriesDir dir, long lo, long len) {
    SeriesWindow w(ZZ, dir, lo, lo + len - 1);
    for (long e = lo; e < lo + len; ++e) w.set_coeff(e, fuzz::random_scalar(rng, ZZ, 20));
    return w;
}

}  // namespace

TEST_SUITE("novikov") {

TEST_CASE("mapping_torus examples") {
    const auto t = mapping_torus(point(ZZ), scalar_map(point(ZZ), 2));
    CHECK(t.lo() == -1);
    CHECK(t.hi() == 0);
    CHECK(t.d(-1)(0, 0) == lp(ZZ, {{0, 2}, {1, -1}}));
    CHECK_FALSE(validate_complex(t));

    const auto id = mapping_torus(point(F(3)), scalar_map(point(F(3)), 1));
    CHECK(id.d(-1)(0, 0) == lp(F(3), {{0, 1}, {1, 2}}));

    const auto inv = mapping_torus(point(ZZ), scalar_map(point(ZZ), 2), TorusVar::ZInv);
    CHECK(inv.d(-1)(0, 0) == lp(ZZ, {{-1, -1}, {0, 2}}));

    CHECK_THROWS_AS(mapping_torus(point(ZZ), scalar_map(point(ZZ, 1), 2)), DomainError);
    CHECK(parse_var("zinv") == TorusVar::ZInv);
    CHECK_THROWS_AS(parse_var("w"), ParseError);
}

TEST_CASE("novikov_cohomology_field examples") {
    const auto b = mapping_torus(point(F(3)), scalar_map(point(F(3)), 0));
    CHECK(novikov_cohomology_field(b, SeriesDir::Lt).is_zero());
    CHECK(novikov_cohomology_field(b, SeriesDir::Rt).is_zero());
    const LaurentComplex free(QQ, 0, {1});
    CHECK(novikov_cohomology_field(free, SeriesDir::Lt).dim(0) == 1);
    CHECK_THROWS_AS(novikov_cohomology_field(mapping_torus(point(ZZ), scalar_map(point(ZZ), 2)), SeriesDir::Lt),
                    DomainError);
}

TEST_CASE("field mapping tori have vanishing Novikov cohomology, same in both directions") {
    fuzz::Rng rng(55);
    for (int t = 0; t < 20; ++t) {
        const auto c = fuzz::random_complex(rng, F(5), -2, 2, 3);
        const auto h = fuzz::random_chain_map(rng, c);
        const auto b = mapping_torus(c, h);
        const auto lt = novikov_cohomology_field(b, SeriesDir::Lt);
        CHECK(lt == novikov_cohomology_field(b, SeriesDir::Rt));
        CHECK(lt.is_zero());
        // Evaluation oracle: at z = pt with every h^n - pt invertible, T(h) becomes
        // Cone(h - pt) over F5, which is acyclic.
        for (long pt = 0; pt < 5; ++pt) {
            bool invertible = true;
            for (int n = c.lo(); n <= c.hi(); ++n) {
                const auto m = h.comp(n) - ScalarMatrix::identity(F(5), c.rank(n)).scaled(Scalar(F(5), pt));
                invertible = invertible && rank_field(m) == c.rank(n);
            }
            std::vector<std::size_t> ranks;
            for (int n = b.lo(); n <= b.hi(); ++n) ranks.push_back(b.rank(n));
            Complex e(F(5), b.lo(), ranks);
            for (int n = b.lo(); n < b.hi(); ++n) e.set_d(n, evaluate(b.d(n), Scalar(F(5), pt)));
            CHECK_FALSE(validate_complex(e));
            if (invertible) CHECK(cohomology_field(e).is_zero());
        }
    }
}

TEST_CASE("novikov_verdict_int examples") {
    const auto b = mapping_torus(point(ZZ), scalar_map(point(ZZ), 2));
    const auto rt = novikov_verdict_int(b, SeriesDir::Rt);
    CHECK(rt.acyclic());
    REQUIRE(rt.degrees.at(0).units.size() == 1);
    CHECK(rt.degrees.at(0).units[0].det == lp(ZZ, {{0, 2}, {1, -1}}));
    CHECK(rt.degrees.at(0).units[0].pivot_coeff == s(ZZ, -1));
    const auto lt = novikov_verdict_int(b, SeriesDir::Lt);
    CHECK_FALSE(lt.acyclic());
    CHECK(lt.degrees.at(0).status == VerdictStatus::NonAcyclic);
    CHECK(lt.degrees.at(0).presentation == "ZZ((z))/(2 - z)");
    CHECK(lt.degrees.at(-1).status == VerdictStatus::Acyclic);

    const auto one = mapping_torus(point(ZZ), scalar_map(point(ZZ), 1));
    CHECK(novikov_verdict_int(one, SeriesDir::Lt).acyclic());

    // 2 x 2 permutation: det(h - z) = z^2 - 1.
    const Complex c(ZZ, 0, {2});
    Map perm(c, c);
    perm.set_comp(0, mat(ZZ, {{0, 1}, {1, 0}}));
    const auto pt = mapping_torus(c, perm);
    CHECK(novikov_verdict_int(pt, SeriesDir::Lt).acyclic());
    CHECK(novikov_verdict_int(pt, SeriesDir::Rt).acyclic());

    // Zero differentials on a free module.
    const LaurentComplex free(ZZ, 0, {2});
    const auto v = novikov_verdict_int(free, SeriesDir::Lt);
    CHECK(v.degrees.at(0).status == VerdictStatus::NonAcyclic);

    CHECK(novikov_verdict_int(LaurentComplex(ZZ, 0, {}), SeriesDir::Lt).acyclic());
    CHECK_THROWS_AS(novikov_verdict_int(LaurentComplex(QQ, 0, {1}), SeriesDir::Lt), DomainError);
}

TEST_CASE("variant duality: the z^-1 torus swaps the pattern") {
    const auto b = mapping_torus(point(ZZ), scalar_map(point(ZZ), 2), TorusVar::ZInv);
    CHECK(novikov_verdict_int(b, SeriesDir::Lt).acyclic());
    CHECK_FALSE(novikov_verdict_int(b, SeriesDir::Rt).acyclic());
}

TEST_CASE("unimodular chain isomorphisms: acyclic both ways through cone certificates") {
    fuzz::Rng rng(66);
    int inconclusive = 0;
    for (int t = 0; t < 20; ++t) {
        const auto sample = fuzz::random_unimodular_iso(rng, -2, 2, 4);
        CHECK_FALSE(validate_chain_map(sample.h));
        const auto b = mapping_torus(sample.c, sample.h);
        for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
            const auto v = novikov_verdict_int(b, dir, torus_layout(sample.c));
            CHECK(v.acyclic());
            inconclusive += v.any(VerdictStatus::Inconclusive) ? 1 : 0;
            for (const auto& [n, dv] : v.degrees) {
                for (const auto& u : dv.units) CHECK(novikov_unit(u.det, dir).unit);
            }
        }
    }
    CHECK(inconclusive == 0);
}

TEST_CASE("without a layout general complexes stay inconclusive") {
    Complex c(ZZ, 0, {1, 1});
    c.set_d(0, mat(ZZ, {{1}}));
    const auto b = mapping_torus(c, Map::identity(c));
    const auto v = novikov_verdict_int(b, SeriesDir::Lt);
    CHECK(v.any(VerdictStatus::Inconclusive));
    CHECK(novikov_verdict_int(b, SeriesDir::Lt, torus_layout(c)).acyclic());
    // A layout that does not describe the complex is ignored.
    ConeLayout wrong;
    wrong.x_ranks[-1] = 2;
    CHECK(novikov_verdict_int(b, SeriesDir::Lt, wrong).any(VerdictStatus::Inconclusive));
}

TEST_CASE("ranicki_check examples") {
    const auto r = ranicki_check(mapping_torus(point(ZZ), scalar_map(point(ZZ), 2)));
    CHECK_FALSE(r.pos.acyclic());
    CHECK(r.neg.acyclic());
    CHECK_FALSE(r.finitely_dominated_possible);

    fuzz::Rng rng(3);
    const auto c = fuzz::random_complex(rng, F(5), -1, 1, 3);
    const auto f = ranicki_check(mapping_torus(c, fuzz::random_chain_map(rng, c)));
    CHECK(f.pos.acyclic());
    CHECK(f.neg.acyclic());
    CHECK(f.finitely_dominated_possible);

    const auto q = ranicki_check(LaurentComplex(QQ, 0, {1}));
    CHECK(q.pos.degrees.at(0).status == VerdictStatus::NonAcyclic);
    CHECK(q.neg.degrees.at(0).status == VerdictStatus::NonAcyclic);
    CHECK_FALSE(q.finitely_dominated_possible);
}

TEST_CASE("phi_free examples and round trip") {
    const auto x = std::vector<TensorTerm>{{0, window_of(ZZ, SeriesDir::Lt, 0, {1, 1})},
                                           {1, window_of(ZZ, SeriesDir::Lt, 0, {0, 1})}};
    const auto out = phi_free(2, x);
    CHECK(out.coeff(0) == vec(ZZ, {1, 0}));
    CHECK(out.coeff(1) == vec(ZZ, {1, 1}));
    CHECK(phi_free(2, phi_free_inverse(out)) == out);

    const auto zero = phi_free(3, {{0, SeriesWindow(ZZ, SeriesDir::Rt, -2, 0)}});
    for (long e = -2; e <= 0; ++e) CHECK(zero.coeff(e) == vec(ZZ, {0, 0, 0}));

    const auto w = window_of(ZZ, SeriesDir::Rt, -3, {4, 5, 6});
    const auto one = phi_free(1, {{0, w}});
    for (long e = -3; e <= -1; ++e) CHECK(one.coeff(e)[0] == w.coeff(e));

    CHECK_THROWS_AS(phi_free(2, {{0, w}, {1, window_of(ZZ, SeriesDir::Lt, 0, {1})}}), DomainError);
    CHECK_THROWS_AS(phi_free(1, {{1, w}}), DomainError);
}

TEST_CASE("FpPresentation canonical coordinates") {
    const FpPresentation z4(mat(ZZ, {{4}}));
    CHECK(z4.summand_orders() == std::vector<mpz_class>{4});
    CHECK(z4.canonical(vec(ZZ, {6})) == vec(ZZ, {2}));
    CHECK(z4.canonical(vec(ZZ, {-1})) == vec(ZZ, {3}));

    const FpPresentation free(ScalarMatrix(ZZ, 0, 1), 1);
    CHECK(free.summand_orders() == std::vector<mpz_class>{0});

    const FpPresentation trivial(mat(ZZ, {{1}}));
    CHECK(trivial.summand_orders().empty());
    CHECK(trivial.canonical(vec(ZZ, {7})).empty());

    // coker [[2,1],[0,3]] has order 6, so it is cyclic of order 6.
    const FpPresentation c6(mat(ZZ, {{2, 1}, {0, 3}}));
    CHECK(c6.summand_orders() == std::vector<mpz_class>{6});
    CHECK(c6.canonical(vec(ZZ, {2, 1})) == c6.canonical(vec(ZZ, {0, 0})));
    CHECK(c6.canonical(vec(ZZ, {0, 3})) == c6.canonical(vec(ZZ, {0, 0})));

    CHECK_THROWS_AS(FpPresentation(mat(ZZ, {{1, 2}}), 3), DomainError);
    CHECK_THROWS_AS(FpPresentation(mat(QQ, {{1}})), DomainError);
}

TEST_CASE("phi_fp examples") {
    const FpPresentation z4(mat(ZZ, {{4}}));
    const auto x = std::vector<ModuleTensorTerm>{{vec(ZZ, {1}), window_of(ZZ, SeriesDir::Lt, 0, {2, 4})}};
    const auto c = canonical_series(z4, phi_fp(z4, x, SeriesDir::Lt));
    CHECK(c.coeff(0) == vec(ZZ, {2}));
    CHECK(c.coeff(1) == vec(ZZ, {0}));

    const FpPresentation zz(ScalarMatrix(ZZ, 0, 1), 1);
    const auto w = window_of(ZZ, SeriesDir::Rt, -2, {3, -1, 5});
    const auto viafp = canonical_series(zz, phi_fp(zz, {{vec(ZZ, {1}), w}}, SeriesDir::Rt));
    CHECK(viafp == phi_free(1, {{0, w}}));

    const FpPresentation trivial(mat(ZZ, {{1}}));
    const auto t = canonical_series(trivial, phi_fp(trivial, {{vec(ZZ, {5}), w}}, SeriesDir::Rt));
    CHECK(t.dim() == 0);
    CHECK_THROWS_AS(phi_fp(z4, {{vec(ZZ, {1, 2}), w}}, SeriesDir::Rt), DomainError);
}

TEST_CASE("phi_fp round trips on canonical forms") {
    fuzz::Rng rng(101);
    const std::vector<FpPresentation> modules{
        FpPresentation(ScalarMatrix(ZZ, 0, 1), 1), FpPresentation(mat(ZZ, {{4}})),
        FpPresentation(mat(ZZ, {{0, 4, 0}, {0, 0, 6}}), 3), FpPresentation(mat(ZZ, {{2, 1}, {0, 3}}))};
    for (const auto& m : modules) {
        for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
            for (int t = 0; t < 25; ++t) {
                std::vector<ModuleTensorTerm> x;
                const long lo = fuzz::draw_range(rng, -5, 5);
                for (int k = 0; k < 3; ++k) {
                    Vector rep;
                    for (std::size_t j = 0; j < m.generators(); ++j) rep.push_back(fuzz::random_scalar(rng, ZZ, 9));
                    x.push_back({rep, random_window(rng, dir, lo, 8)});
                }
                const auto c = canonical_series(m, phi_fp(m, x, dir));
                const auto back = phi_fp_inverse(m, c);
                CHECK(canonical_series(m, phi_fp(m, back, dir)) == c);
                // Generators map to unit vectors.
                for (std::size_t k = 0; k < m.summand_orders().size(); ++k) {
                    const auto g = m.canonical(m.generator(k));
                    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == s(ZZ, i == k ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("phi_fp is compatible with the Smith change of basis") {
    // Two presentations of ZZ/2 + ZZ/4 related by a unimodular change of generators.
    const FpPresentation a(mat(ZZ, {{2, 0}, {0, 4}}));
    // New generators are the columns of g = [[1, 1], [0, 1]]; coordinates change by g^-1.
    const auto g_inv = mat(ZZ, {{1, -1}, {0, 1}});
    const FpPresentation b(mat(ZZ, {{2, 0}, {0, 4}}) * g_inv.transposed());
    CHECK(a.summand_orders() == b.summand_orders());
    fuzz::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const Vector rep{fuzz::random_scalar(rng, ZZ, 9), fuzz::random_scalar(rng, ZZ, 9)};
        // The same element written in either basis has the same order data.
        const auto in_b = g_inv.apply(rep);
        const bool zero_a = a.canonical(rep) == Vector(2, s(ZZ, 0));
        const bool zero_b = b.canonical(in_b) == Vector(2, s(ZZ, 0));
        CHECK(zero_a == zero_b);
    }
}

}  // TEST_SUITE
