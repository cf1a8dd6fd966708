// One PASS/FAIL line per acceptance criterion.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "novcoh/fuzz.hpp"
#include "support.hpp"

using namespace test;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// Tot_sum(d)(y) restricted to column p, from the assembled total matrix.
Vector tot_column(const DoubleComplexWindow& d, const Complex& tot, const Witness& w, int p) {
    const int n = w.n;
    Vector y;
    for (int j = d.p_lo(); j <= d.p_hi(); ++j) {
        auto it = w.terms.find(j);
        for (std::size_t k = 0; k < d.rank(j, n - 1 - j); ++k)
            y.push_back(it == w.terms.end() ? Scalar::zero(d.ring()) : it->second[k]);
    }
    const Vector dy = tot.d(n - 1).apply(y);
    const auto off = static_cast<std::ptrdiff_t>(tot_offset(d, n, p));
    return Vector(dy.begin() + off, dy.begin() + off + static_cast<std::ptrdiff_t>(d.rank(p, n - p)));
}

bool witness_holds(const DoubleComplexWindow& d, const TotCocycle& x, const Witness& w) {
    if (recheck_witness(d, x, w)) return false;
    const Complex tot = totalise(d, TotChoice::Sum);
    for (int p = w.verified_lo; p <= w.verified_hi; ++p) {
        auto it = x.comps.find(p);
        const Vector want = it == x.comps.end() ? Vector(d.rank(p, x.n - p), Scalar::zero(d.ring())) : it->second;
        if (tot_column(d, tot, w, p) != want) return false;
    }
    return true;
}

// dim H^n by enumerating F_p^k.
std::size_t brute_force_dim(const Complex& c, int n) {
    const unsigned p = c.ring().characteristic();
    auto each = [&](std::size_t k, const std::function<void(const Vector&)>& f) {
        Vector v(k, Scalar::zero(c.ring()));
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= p;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t r = code;
            for (std::size_t i = 0; i < k; ++i, r /= p) v[i] = Scalar(c.ring(), static_cast<long>(r % p));
            f(v);
        }
    };
    auto log_p = [&](std::size_t count) {
        std::size_t e = 0;
        for (; count > 1; count /= p) ++e;
        return e;
    };
    std::size_t kernel = 0;
    const Vector zero(c.rank(n + 1), Scalar::zero(c.ring()));
    each(c.rank(n), [&](const Vector& v) { kernel += c.d(n).apply(v) == zero ? 1 : 0; });
    std::set<std::string> images;
    each(c.rank(n - 1), [&](const Vector& v) {
        std::string key;
        for (const auto& s : c.d(n - 1).apply(v)) key += s.to_string() + ",";
        images.insert(key);
    });
    return log_p(kernel) - log_p(images.size());
}

Outcome times2_torus() {
    Outcome o;
    const auto t = mapping_torus(point(ZZ), scalar_map(point(ZZ), 2));
    const auto f = lp(ZZ, {{0, 2}, {1, -1}});
    const auto neg = novikov_verdict_int(t, SeriesDir::Rt);
    const auto pos = novikov_verdict_int(t, SeriesDir::Lt);
    o.require(neg.acyclic(), "negative verdict is not Acyclic");
    const auto& cert = neg.degrees.at(-1).units;
    o.require(!cert.empty() && cert[0].det == f, "negative certificate det != 2 - z");
    o.require(!cert.empty() && cert[0].pivot_coeff == s(ZZ, -1) && cert[0].unit, "negative pivot is not the unit -1");
    const auto& d0 = pos.degrees.at(0);
    o.require(d0.status == VerdictStatus::NonAcyclic, "positive verdict in degree 0 is not NonAcyclic");
    o.require(!d0.units.empty() && d0.units[0].pivot_coeff == s(ZZ, 2) && !d0.units[0].unit, "positive pivot is not 2");
    o.require(d0.presentation == "ZZ((z))/(2 - z)", "presentation is '" + d0.presentation + "'");
    o.require(!f.is_unit(), "2 - z reported as a unit of ZZ[z, z^-1]");
    // Finite piece of Tot_sum: the bidiagonal window has H^0 = ZZ/32.
    const auto h0 = cohomology_int(totalise(torus_bicomplex(point(ZZ), scalar_map(point(ZZ), 2), 0, 4), TotChoice::Sum));
    o.require(h0.degrees.at(0).torsion == std::vector<mpz_class>{32}, "window H^0 is not ZZ/32");
    return o;
}

Outcome series_inversion() {
    Outcome o;
    const auto f = lp(ZZ, {{0, 2}, {1, -1}});
    const auto inv = series_invert(f, SeriesDir::Rt, 10);
    o.require(inv.hi() == -1 && inv.lo() == -10, "window is not [-10, -1]");
    long pow = 1;
    for (long e = -1; e >= -10; --e, pow *= 2) o.require(inv.coeff(e) == s(ZZ, -pow), "coefficient at " + std::to_string(e));
    const auto back = series_arith(SeriesWindow::from_poly(f, SeriesDir::Rt, inv.lo(), 1), inv, SeriesOp::Mul);
    o.require(back.is_one_on_window(), "f * f^-1 != 1 on the determined window");
    o.require(back.hi() == 0 && back.lo() <= -9, "product window too small");
    return o;
}

Outcome field_vanishing(int& count) {
    Outcome o;
    for (unsigned p : {2u, 5u}) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const auto sample = fuzz::generate(seed, fuzz::Params{RingTag{F(p), false}, -3, 3, 4});
            for (auto var : {TorusVar::Z, TorusVar::ZInv}) {
                const auto t = mapping_torus(sample.c, sample.h, var);
                for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
                    o.require(novikov_cohomology_field(t, dir).is_zero(),
                              "F" + std::to_string(p) + " seed " + std::to_string(seed));
                }
            }
            ++count;
        }
    }
    o.require(count >= 100, "too few samples");
    return o;
}

Outcome integral_isos(int& count) {
    Outcome o;
    fuzz::Rng rng(4);
    for (; count < 25; ++count) {
        const auto sample = fuzz::random_unimodular_iso(rng, -2, 2, 3);
        const auto t = mapping_torus(sample.c, sample.h);
        for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
            const auto v = novikov_verdict_int(t, dir, torus_layout(sample.c));
            o.require(v.acyclic(), "sample " + std::to_string(count) + " not Acyclic");
            o.require(!v.any(VerdictStatus::Inconclusive), "sample " + std::to_string(count) + " Inconclusive");
        }
    }
    return o;
}

Outcome witnesses(int& count) {
    Outcome o;
    fuzz::Rng rng(5);
    for (int t = 0; t < 50; ++t, ++count) {
        const auto c = fuzz::random_complex(rng, F(5), -1, 1, 3);
        const auto h = fuzz::random_quasi_iso(rng, c);
        const auto d = torus_bicomplex(c, h, 0, 7);
        const int n = static_cast<int>(fuzz::draw_range(rng, c.lo() - 1, c.hi()));
        const auto x = fuzz::random_tot_cocycle(rng, d, n);
        const auto w = contract_lt(d, x);
        o.require(w.verified_lo == 0 && w.verified_hi >= 6, "lt sample " + std::to_string(t) + " range");
        o.require(witness_holds(d, x, w), "lt sample " + std::to_string(t) + " fails Tot recheck");
    }
    for (auto ring : {ZZ, F(2)}) {
        for (int t = 0; t < 25; ++t, ++count) {
            const auto c = fuzz::random_complex(rng, ring, -1, 1, 3);
            const auto h = fuzz::random_chain_map(rng, c);
            const int n = static_cast<int>(fuzz::draw_range(rng, c.lo() - 1, c.hi()));
            // Column 8 of the wider window is forced to zero, so dh(x_7) = 0.
            auto x = fuzz::random_tot_cocycle(rng, torus_bicomplex(c, h, 0, 8), n, {8});
            x.comps.erase(8);
            const auto d = torus_bicomplex(c, h, 0, 7);
            const auto w = contract_rt(d, x);
            o.require(w.verified_lo == 1 && w.verified_hi == 7, "rt sample " + std::to_string(t) + " range");
            o.require(witness_holds(d, x, w), "rt " + ring.name() + " sample " + std::to_string(t) + " fails Tot recheck");
        }
    }
    return o;
}

Outcome identification(int& count) {
    Outcome o;
    fuzz::Rng rng(6);
    for (auto ring : {ZZ, QQ, F(2), F(5)}) {
        for (int t = 0; t < 6; ++t, ++count) {
            const auto c = fuzz::random_complex(rng, ring, -2, 2, 3);
            const auto h = fuzz::random_chain_map(rng, c);
            const auto bad = check_tot_sum_is_torus(c, h, 0, 3);
            o.require(!bad, ring.name() + " sample " + std::to_string(t) + " mismatch");
        }
    }
    return o;
}

Outcome module_round_trips(int& count) {
    Outcome o;
    fuzz::Rng rng(7);
    const std::vector<FpPresentation> modules{
        FpPresentation(ScalarMatrix(ZZ, 0, 1), 1), FpPresentation(mat(ZZ, {{4}})),
        FpPresentation(mat(ZZ, {{0, 4, 0}, {0, 0, 6}}), 3), FpPresentation(mat(ZZ, {{2, 1}, {0, 3}}))};
    for (std::size_t mi = 0; mi < modules.size(); ++mi) {
        const auto& m = modules[mi];
        const auto& orders = m.summand_orders();
        for (auto dir : {SeriesDir::Lt, SeriesDir::Rt}) {
            for (int t = 0; t < 100; ++t, ++count) {
                const long lo = fuzz::draw_range(rng, -6, 6);
                // Tensor side: sum of m_j (x) f_j.
                std::vector<ModuleTensorTerm> x;
                for (int k = 0; k < 3; ++k) {
                    Vector rep;
                    for (std::size_t j = 0; j < m.generators(); ++j) rep.push_back(fuzz::random_scalar(rng, ZZ, 9));
                    SeriesWindow f(ZZ, dir, lo, lo + 7);
                    for (long e = lo; e <= lo + 7; ++e) f.set_coeff(e, fuzz::random_scalar(rng, ZZ, 20));
                    x.push_back({rep, f});
                }
                const auto image = canonical_series(m, phi_fp(m, x, dir));
                o.require(canonical_series(m, phi_fp(m, phi_fp_inverse(m, image), dir)) == image,
                          "module " + std::to_string(mi) + " tensor side");
                // Series side: canonical coordinates drawn directly.
                VectorSeries c(ZZ, dir, lo, lo + 7, orders.size());
                for (long e = lo; e <= lo + 7; ++e) {
                    for (std::size_t k = 0; k < orders.size(); ++k) {
                        const long bound = orders[k] == 0 ? 40 : orders[k].get_si();
                        const long v = orders[k] == 0 ? fuzz::draw_range(rng, -20, 20) : fuzz::draw_range(rng, 0, bound - 1);
                        c.coeff(e)[k] = s(ZZ, v);
                    }
                }
                o.require(canonical_series(m, phi_fp(m, phi_fp_inverse(m, c), dir)) == c,
                          "module " + std::to_string(mi) + " series side");
            }
        }
    }
    return o;
}

Outcome brute_force(int& count) {
    Outcome o;
    fuzz::Rng rng(8);
    for (int tries = 0; count < 30 && tries < 500; ++tries) {
        const auto ring = tries % 2 == 0 ? F(2) : F(3);
        const auto c = fuzz::random_complex(rng, ring, -1, 2, 3);
        if (c.total_rank() > 10) continue;
        const auto rep = cohomology_field(c);
        for (int n = c.lo(); n <= c.hi(); ++n) o.require(rep.dim(n) == brute_force_dim(c, n), "complex " + std::to_string(count));
        ++count;
    }
    o.require(count >= 30, "too few complexes");
    return o;
}

Outcome negative_control() {
    Outcome o;
    const auto h = scalar_map(point(ZZ), 2);
    o.require(!cohomology_int(cone(h)).is_zero(), "x2 is a quasi-isomorphism over ZZ");
    const auto t = mapping_torus(point(ZZ), h);
    const auto pos = novikov_verdict_int(t, SeriesDir::Lt, torus_layout(point(ZZ)));
    o.require(pos.any(VerdictStatus::NonAcyclic), "positive verdict is not NonAcyclic");
    o.require(!ranicki_check(t).finitely_dominated_possible, "ranicki check did not flag the torus");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome(int&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "x2 torus: Rt acyclic with det 2 - z, Lt non-acyclic", 1.0, [](int&) { return times2_torus(); }},
        {2, "series_invert(2 - z, Rt, 10) and product back to 1", 1.0, [](int&) { return series_inversion(); }},
        {3, "field mapping tori vanish in both directions", 60.0, field_vanishing},
        {4, "ZZ unimodular isomorphisms: Acyclic by certificates", 10.0, integral_isos},
        {5, "contraction witnesses rechecked through Tot", 60.0, witnesses},
        {6, "Tot_sum of the torus bicomplex equals T(h)", 10.0, identification},
        {7, "module tensor round trips", 10.0, module_round_trips},
        {8, "cohomology_field against brute force", 30.0, brute_force},
        {9, "negative control: x2 over ZZ", 1.0, [](int&) { return negative_control(); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        int samples = 0;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(samples);
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.limit_s) o = Outcome{false, "over the time limit"};
        failures += o.ok ? 0 : 1;
        std::printf("%s  %d  %-52s %7.3f s / %5.1f s", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s);
        if (samples > 0) std::printf("  samples=%d", samples);
        if (!o.ok) std::printf("  (%s)", o.detail.c_str());
        std::printf("\n");
    }
    return failures;
}
