#include "novcoh/novikov.hpp"

#include <algorithm>

namespace novcoh {

std::string to_string(TorusVar v) { return v == TorusVar::Z ? "z" : "zinv"; }

TorusVar parse_var(std::string_view text) {
    if (text == "z") return TorusVar::Z;
    if (text == "zinv") return TorusVar::ZInv;
    throw ParseError("variable must be 'z' or 'zinv', got '" + std::string(text) + "'");
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Acyclic: return "acyclic";
        case VerdictStatus::NonAcyclic: return "non-acyclic";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

LaurentComplex mapping_torus(const Complex& c, const Map& h, TorusVar var) {
    if (!(h.source() == c) || !(h.target() == c)) throw DomainError("mapping_torus: h is not an endomorphism of C");
    if (auto v = validate_chain_map(h)) throw DomainError("mapping_torus: degree " + std::to_string(v->degree) + ": " + v->what);
    const LaurentComplex lc = to_laurent(c);
    const auto z = LaurentPoly::monomial(Scalar::one(c.ring()), var == TorusVar::Z ? 1 : -1);
    LaurentMap f(lc, lc);
    for (int n = c.lo(); n <= c.hi(); ++n) {
        f.set_comp(n, to_laurent(h.comp(n)) - LaurentMatrix::identity(c.ring(), c.rank(n)).scaled(z));
    }
    return cone(f);
}

std::size_t ConeLayout::x_rank(int n) const {
    auto it = x_ranks.find(n);
    return it == x_ranks.end() ? 0 : it->second;
}

ConeLayout torus_layout(const Complex& c) {
    ConeLayout layout;
    for (int n = c.lo() - 1; n <= c.hi(); ++n) {
        if (c.rank(n + 1) > 0) layout.x_ranks[n] = c.rank(n + 1);
    }
    return layout;
}

namespace {

std::vector<std::size_t> fraction_ranks(const LaurentComplex& b) {
    std::vector<std::size_t> r;
    for (int n = b.lo() - 1; n <= b.hi(); ++n) r.push_back(rank_laurent_fraction(b.d(n)));
    return r;
}

std::string novikov_ring_name(const BaseRing& base, SeriesDir dir) {
    return base.name() + (dir == SeriesDir::Lt ? "((z))" : "((z^-1))");
}

}  // namespace

CohomologyReport novikov_cohomology_field(const LaurentComplex& b, SeriesDir /*dir*/) {
    if (!b.ring().is_field()) throw DomainError("novikov_cohomology_field needs a field base, got " + b.ring().name());
    const auto r = fraction_ranks(b);
    CohomologyReport rep;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        const auto k = static_cast<std::size_t>(n - b.lo());
        rep.degrees[n].free_rank = b.rank(n) - r[k + 1] - r[k];
    }
    return rep;
}

bool NovikovVerdict::acyclic() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const auto& kv) { return kv.second.status == VerdictStatus::Acyclic; });
}

bool NovikovVerdict::any(VerdictStatus s) const {
    return std::any_of(degrees.begin(), degrees.end(), [s](const auto& kv) { return kv.second.status == s; });
}

NovikovVerdict novikov_verdict_field(const LaurentComplex& b, SeriesDir dir) {
    if (!b.ring().is_field()) throw DomainError("novikov_verdict_field needs a field base, got " + b.ring().name());
    const auto r = fraction_ranks(b);
    NovikovVerdict v;
    v.dir = dir;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        const auto k = static_cast<std::size_t>(n - b.lo());
        DegreeVerdict dv;
        dv.ranks = RankCertificate{b.rank(n), r[k], r[k + 1]};
        const auto dim = b.rank(n) - r[k] - r[k + 1];
        if (dim == 0) {
            dv.status = VerdictStatus::Acyclic;
            dv.reason = "rank C^n = rank d^{n-1} + rank d^n over the fraction field";
        } else {
            dv.status = VerdictStatus::NonAcyclic;
            dv.reason = "cohomology of dimension " + std::to_string(dim);
            dv.presentation = novikov_ring_name(b.ring(), dir) + "^" + std::to_string(dim);
        }
        v.degrees[n] = std::move(dv);
    }
    return v;
}

namespace {

UnitCertificate certify(int degree, const LaurentMatrix& a, SeriesDir dir) {
    LaurentPoly det = det_laurent(a);
    if (det.is_zero()) return UnitCertificate{degree, det, 0, Scalar::zero(a.ring()), false};
    auto u = novikov_unit(det, dir);
    return UnitCertificate{degree, det, u.pivot_exp, u.pivot_coeff, u.unit};
}

// Certificates for B = Cone(g) read off a layout, or nullopt when the layout does not
// describe B or some g is not square with unit determinant.
std::optional<std::map<int, UnitCertificate>> cone_certificates(const LaurentComplex& b, const ConeLayout& layout,
                                                                SeriesDir dir) {
    std::map<int, UnitCertificate> certs;
    for (int n = b.lo() - 1; n <= b.hi(); ++n) {
        const auto x0 = layout.x_rank(n);
        const auto x1 = layout.x_rank(n + 1);
        if (x0 > b.rank(n) || x1 > b.rank(n + 1)) return std::nullopt;
        const auto y1 = b.rank(n + 1) - x1;
        const LaurentMatrix dn = b.d(n);
        if (!dn.block(0, x0, x1, b.rank(n) - x0).is_zero()) return std::nullopt;
        if (y1 != x0) return std::nullopt;
        if (x0 == 0) continue;
        // g^{n+1} : X^{n+1} -> Y^{n+1}
        auto cert = certify(n + 1, dn.block(x1, 0, y1, x0), dir);
        if (!cert.unit) return std::nullopt;
        certs.emplace(n + 1, std::move(cert));
    }
    return certs;
}

}  // namespace

NovikovVerdict novikov_verdict_int(const LaurentComplex& b, SeriesDir dir, const std::optional<ConeLayout>& layout) {
    if (b.ring().kind() != BaseRing::Kind::ZZ) throw DomainError("novikov_verdict_int needs base ZZ, got " + b.ring().name());
    const std::string ring = novikov_ring_name(b.ring(), dir);
    NovikovVerdict v;
    v.dir = dir;
    std::vector<int> support;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        DegreeVerdict dv;
        if (b.rank(n) == 0) {
            dv.status = VerdictStatus::Acyclic;
            dv.reason = "zero module";
        } else {
            dv.reason = "no certificate applies";
            support.push_back(n);
        }
        v.degrees[n] = std::move(dv);
    }
    if (support.empty()) return v;

    // (a) two-term complex with a square differential: exact decision.
    if (support.size() == 2 && support[1] == support[0] + 1 && b.rank(support[0]) == b.rank(support[1])) {
        const int k = support[0];
        const LaurentMatrix a = b.d(k);
        const auto cert = certify(k, a, dir);
        auto& lower = v.degrees[k];
        auto& upper = v.degrees[k + 1];
        lower.units = upper.units = {cert};
        const std::string coker =
            a.rows() == 1 ? ring + "/(" + cert.det.to_string() + ")" : "coker of d^" + std::to_string(k) + " over " + ring;
        if (cert.det.is_zero()) {
            lower.status = upper.status = VerdictStatus::NonAcyclic;
            lower.reason = upper.reason = "det d^" + std::to_string(k) + " = 0";
            lower.presentation = "ker of d^" + std::to_string(k) + " over " + ring;
            upper.presentation = coker;
        } else if (cert.unit) {
            lower.status = upper.status = VerdictStatus::Acyclic;
            lower.reason = upper.reason = "det d^" + std::to_string(k) + " is a unit of " + ring;
        } else {
            lower.status = VerdictStatus::Acyclic;
            lower.reason = "det d^" + std::to_string(k) + " != 0, so d^" + std::to_string(k) + " is injective";
            upper.status = VerdictStatus::NonAcyclic;
            upper.reason = "det d^" + std::to_string(k) + " is not a unit of " + ring + " (pivot coefficient " +
                           cert.pivot_coeff.to_string() + ")";
            upper.presentation = coker;
        }
        return v;
    }

    // (b) cone of a degreewise isomorphism.
    if (layout) {
        if (auto certs = cone_certificates(b, *layout, dir)) {
            for (int n : support) {
                auto& dv = v.degrees[n];
                dv.status = VerdictStatus::Acyclic;
                dv.reason = "cone of a map with unit determinants in every degree";
                for (int m : {n, n + 1}) {
                    auto it = certs->find(m);
                    if (it != certs->end()) dv.units.push_back(it->second);
                }
            }
            return v;
        }
    }

    // (c) free summands with zero differentials on both sides.
    for (int n : support) {
        if (b.d(n - 1).is_zero() && b.d(n).is_zero()) {
            auto& dv = v.degrees[n];
            dv.status = VerdictStatus::NonAcyclic;
            dv.reason = "both differentials vanish on a nonzero free module";
            dv.presentation = ring + "^" + std::to_string(b.rank(n));
        }
    }
    return v;
}

RanickiResult ranicki_check(const LaurentComplex& b, const std::optional<ConeLayout>& layout) {
    RanickiResult r;
    if (b.ring().kind() == BaseRing::Kind::ZZ) {
        r.pos = novikov_verdict_int(b, SeriesDir::Lt, layout);
        r.neg = novikov_verdict_int(b, SeriesDir::Rt, layout);
    } else {
        r.pos = novikov_verdict_field(b, SeriesDir::Lt);
        r.neg = novikov_verdict_field(b, SeriesDir::Rt);
    }
    r.finitely_dominated_possible = !r.pos.any(VerdictStatus::NonAcyclic) && !r.neg.any(VerdictStatus::NonAcyclic);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

template <class Term>
std::pair<LaurentPoly::Exponent, LaurentPoly::Exponent> common_window(const std::vector<Term>& x, SeriesDir dir) {
    if (x.empty()) throw DomainError("empty tensor: the window is undetermined");
    auto lo = x.front().series.lo();
    auto hi = x.front().series.hi();
    for (const auto& t : x) {
        if (t.series.dir() != dir) throw DomainError("series of mixed directions");
        if (dir == SeriesDir::Lt) {
            lo = std::min(lo, t.series.lo());
            hi = std::min(hi, t.series.hi());
        } else {
            lo = std::max(lo, t.series.lo());
            hi = std::max(hi, t.series.hi());
        }
    }
    return {lo, hi};
}

}  // namespace

VectorSeries phi_free(std::size_t rank, const std::vector<TensorTerm>& x) {
    const SeriesDir dir = x.empty() ? SeriesDir::Lt : x.front().series.dir();
    const auto [lo, hi] = common_window(x, dir);
    const BaseRing ring = x.front().series.ring();
    VectorSeries out(ring, dir, lo, hi, rank);
    for (const auto& t : x) {
        if (t.basis_index >= rank) throw DomainError("basis index " + std::to_string(t.basis_index) + " out of range");
        for (auto e = lo; e <= hi; ++e) out.coeff(e)[t.basis_index] += t.series.coeff(e);
    }
    return out;
}

std::vector<TensorTerm> phi_free_inverse(const VectorSeries& s) {
    std::vector<TensorTerm> x;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        SeriesWindow f(s.ring(), s.dir(), s.lo(), s.hi());
        for (auto e = s.lo(); e <= s.hi(); ++e) f.set_coeff(e, s.coeff(e)[j]);
        x.push_back(TensorTerm{j, std::move(f)});
    }
    return x;
}

FpPresentation::FpPresentation(ScalarMatrix relations, std::size_t generators)
    : relations_(std::move(relations)), generators_(generators), snf_{ScalarMatrix(BaseRing::integers(), 0, 0),
                                                                     ScalarMatrix(BaseRing::integers(), 0, 0),
                                                                     ScalarMatrix(BaseRing::integers(), 0, 0),
                                                                     ScalarMatrix(BaseRing::integers(), 0, 0),
                                                                     ScalarMatrix(BaseRing::integers(), 0, 0)} {
    if (relations_.ring().kind() != BaseRing::Kind::ZZ) throw DomainError("presentations are over ZZ");
    if (generators_ == 0) throw DomainError("a presentation needs at least one generator");
    if (relations_.cols() != generators_) {
        throw DomainError("relation matrix has " + std::to_string(relations_.cols()) + " columns for " +
                          std::to_string(generators_) + " generators");
    }
    // Relations are rows, so G -> F is the transpose in the column convention.
    snf_ = smith_normal_form(relations_.transposed());
    const auto diag = snf_.diagonal();
    for (std::size_t i = 0; i < generators_; ++i) {
        mpz_class d = i < diag.size() ? diag[i] : mpz_class(0);
        if (d == 1) continue;
        summand_rows_.push_back(i);
        orders_.push_back(d);
    }
}

FpPresentation::FpPresentation(ScalarMatrix relations) : FpPresentation(relations, relations.cols()) {}

Vector FpPresentation::canonical(const Vector& rep) const {
    if (rep.size() != generators_) throw DomainError("representative has the wrong length");
    const auto w = snf_.u.apply(rep);
    Vector out;
    for (std::size_t k = 0; k < summand_rows_.size(); ++k) {
        const mpz_class& x = w[summand_rows_[k]].numerator();
        if (orders_[k] == 0) {
            out.emplace_back(BaseRing::integers(), x);
        } else {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), orders_[k].get_mpz_t());
            out.emplace_back(BaseRing::integers(), r);
        }
    }
    return out;
}

Vector FpPresentation::generator(std::size_t k) const {
    if (k >= summand_rows_.size()) throw DomainError("summand index out of range");
    Vector g;
    for (std::size_t i = 0; i < generators_; ++i) g.push_back(snf_.u_inv(i, summand_rows_[k]));
    return g;
}

VectorSeries phi_fp(const FpPresentation& m, const std::vector<ModuleTensorTerm>& x, SeriesDir dir) {
    const auto [lo, hi] = common_window(x, dir);
    VectorSeries out(BaseRing::integers(), dir, lo, hi, m.generators());
    for (const auto& t : x) {
        if (t.rep.size() != m.generators()) throw DomainError("representative has the wrong length");
        for (auto e = lo; e <= hi; ++e) {
            const Scalar r = t.series.coeff(e);
            if (r.is_zero()) continue;
            auto& c = out.coeff(e);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += t.rep[i] * r;
        }
    }
    return out;
}

VectorSeries canonical_series(const FpPresentation& m, const VectorSeries& reps) {
    VectorSeries out(reps.ring(), reps.dir(), reps.lo(), reps.hi(), m.summand_orders().size());
    for (auto e = reps.lo(); e <= reps.hi(); ++e) out.coeff(e) = m.canonical(reps.coeff(e));
    return out;
}

std::vector<ModuleTensorTerm> phi_fp_inverse(const FpPresentation& m, const VectorSeries& canonical) {
    if (canonical.dim() != m.summand_orders().size()) throw DomainError("series is not in canonical coordinates of M");
    std::vector<ModuleTensorTerm> x;
    for (std::size_t k = 0; k < canonical.dim(); ++k) {
        SeriesWindow f(canonical.ring(), canonical.dir(), canonical.lo(), canonical.hi());
        for (auto e = canonical.lo(); e <= canonical.hi(); ++e) f.set_coeff(e, canonical.coeff(e)[k]);
        x.push_back(ModuleTensorTerm{m.generator(k), std::move(f)});
    }
    if (x.empty()) {
        // Zero module: 0 (x) 0 keeps the window.
        x.push_back(ModuleTensorTerm{Vector(m.generators(), Scalar::zero(BaseRing::integers())),
                                     SeriesWindow(canonical.ring(), canonical.dir(), canonical.lo(), canonical.hi())});
    }
    return x;
}

}  // namespace novcoh
