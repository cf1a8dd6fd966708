#include "novcoh/series.hpp"

#include <algorithm>

namespace novcoh {

SeriesWindow::SeriesWindow(BaseRing ring, SeriesDir dir, Exponent lo, Exponent hi)
    : ring_(ring), dir_(dir), lo_(lo), hi_(hi) {
    if (lo > hi) throw DomainError("empty series window");
    coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Scalar::zero(ring));
}

SeriesWindow SeriesWindow::from_poly(const LaurentPoly& f, SeriesDir dir, Exponent lo, Exponent hi) {
    SeriesWindow w(f.ring(), dir, lo, hi);
    if (!f.is_zero()) {
        if (dir == SeriesDir::Lt && f.lo_deg() < lo) {
            throw DomainError("polynomial has terms below the window of an Lt series");
        }
        if (dir == SeriesDir::Rt && f.hi_deg() > hi) {
            throw DomainError("polynomial has terms above the window of an Rt series");
        }
    }
    for (const auto& [e, c] : f.terms()) {
        if (e >= lo && e <= hi) w.set_coeff(e, c);
    }
    return w;
}

Scalar SeriesWindow::coeff(Exponent e) const {
    if (e >= lo_ && e <= hi_) return coeffs_[static_cast<std::size_t>(e - lo_)];
    if ((dir_ == SeriesDir::Lt && e < lo_) || (dir_ == SeriesDir::Rt && e > hi_)) return Scalar::zero(ring_);
    throw DomainError("coefficient z^" + std::to_string(e) + " is not determined by the window");
}

void SeriesWindow::set_coeff(Exponent e, const Scalar& c) {
    if (e < lo_ || e > hi_) throw DomainError("exponent outside series window");
    if (!(c.ring() == ring_)) throw RingMismatch(ring_.name() + " vs " + c.ring().name());
    coeffs_[static_cast<std::size_t>(e - lo_)] = c;
}

LaurentPoly SeriesWindow::truncation() const {
    LaurentPoly f(ring_);
    for (Exponent e = lo_; e <= hi_; ++e) f.set_coeff(e, coeffs_[static_cast<std::size_t>(e - lo_)]);
    return f;
}

bool SeriesWindow::is_one_on_window() const {
    for (Exponent e = lo_; e <= hi_; ++e) {
        const auto& c = coeffs_[static_cast<std::size_t>(e - lo_)];
        if (e == 0 ? !c.is_one() : !c.is_zero()) return false;
    }
    // For Lt the zero region below lo must not hide the constant term, and vice versa.
    if (dir_ == SeriesDir::Lt && lo_ > 0) return false;
    if (dir_ == SeriesDir::Rt && hi_ < 0) return false;
    return true;
}

SeriesWindow SeriesWindow::restricted(Exponent lo, Exponent hi) const {
    if (lo < lo_ || hi > hi_) throw DomainError("restriction exceeds the determined window");
    if (dir_ == SeriesDir::Lt && lo != lo_) {
        // Raising lo would claim the dropped coefficients are zero.
        for (Exponent e = lo_; e < lo; ++e) {
            if (!coeff(e).is_zero()) throw DomainError("restriction would drop known nonzero terms");
        }
    }
    if (dir_ == SeriesDir::Rt && hi != hi_) {
        for (Exponent e = hi + 1; e <= hi_; ++e) {
            if (!coeff(e).is_zero()) throw DomainError("restriction would drop known nonzero terms");
        }
    }
    SeriesWindow r(ring_, dir_, lo, hi);
    for (Exponent e = lo; e <= hi; ++e) r.set_coeff(e, coeff(e));
    return r;
}

SeriesWindow SeriesWindow::operator-() const {
    SeriesWindow r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

SeriesWindow SeriesWindow::scaled(const Scalar& c) const {
    SeriesWindow r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

SeriesWindow series_arith(const SeriesWindow& a, const SeriesWindow& b, SeriesOp op) {
    if (a.dir() != b.dir()) throw DomainError("series of different directions");
    if (!(a.ring() == b.ring())) throw RingMismatch(a.ring().name() + " vs " + b.ring().name());
    using E = SeriesWindow::Exponent;
    const bool lt = a.dir() == SeriesDir::Lt;
    E lo = 0;
    E hi = 0;
    if (op == SeriesOp::Add) {
        lo = lt ? std::min(a.lo(), b.lo()) : std::max(a.lo(), b.lo());
        hi = lt ? std::min(a.hi(), b.hi()) : std::max(a.hi(), b.hi());
    } else if (lt) {
        lo = a.lo() + b.lo();
        hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
    } else {
        lo = std::max(a.lo() + b.hi(), b.lo() + a.hi());
        hi = a.hi() + b.hi();
    }
    if (lo > hi) throw DomainError("no coefficient of the result is determined");
    SeriesWindow r(a.ring(), a.dir(), lo, hi);
    for (E e = lo; e <= hi; ++e) {
        Scalar c = Scalar::zero(a.ring());
        if (op == SeriesOp::Add) {
            c = a.coeff(e) + b.coeff(e);
        } else {
            // Only pairs with both factors inside their windows contribute; the rest are zero.
            for (E i = a.lo(); i <= a.hi(); ++i) {
                E j = e - i;
                if (j < b.lo() || j > b.hi()) continue;
                c += a.coeff(i) * b.coeff(j);
            }
        }
        r.set_coeff(e, c);
    }
    return r;
}

namespace {

// Lt inverse of a unit f; see series_invert for the window convention.
SeriesWindow invert_lt(const LaurentPoly& f, std::int64_t order) {
    const auto piv = novikov_unit(f, SeriesDir::Lt);
    if (!piv.unit) throw DomainError(f.to_string() + " is not a unit of " + f.ring().name() + "((z))");
    const BaseRing ring = f.ring();
    const Scalar c_inv = piv.pivot_coeff.inverse();
    const auto lo = -piv.pivot_exp;
    const auto hi = std::max<std::int64_t>(order, lo + order - 1);
    const auto terms = hi - lo;  // highest relative exponent needed

    // f = c z^v (1 - u) with u supported in positive exponents.
    LaurentPoly u(ring);
    for (const auto& [e, coef] : f.terms()) {
        if (e == piv.pivot_exp) continue;
        u.set_coeff(e - piv.pivot_exp, -(coef * c_inv));
    }
    auto truncate = [terms](LaurentPoly p) {
        LaurentPoly r(p.ring());
        for (const auto& [e, c] : p.terms()) {
            if (e <= terms) r.set_coeff(e, c);
        }
        return r;
    };
    LaurentPoly sum = LaurentPoly::one(ring);
    LaurentPoly power = LaurentPoly::one(ring);
    // u has valuation >= 1, so u^k contributes nothing below z^k.
    for (std::int64_t k = 1; k <= terms; ++k) {
        power = truncate(power * u);
        if (power.is_zero()) break;
        sum += power;
    }
    return SeriesWindow::from_poly(truncate(sum).shifted(lo) * LaurentPoly(c_inv), SeriesDir::Lt, lo, hi);
}

}  // namespace

SeriesWindow series_invert(const LaurentPoly& f, SeriesDir dir, std::int64_t order) {
    if (order < 1) throw DomainError("series_invert needs order >= 1");
    if (f.is_zero()) throw DomainError("0 is never a unit of a Novikov ring");
    if (dir == SeriesDir::Lt) return invert_lt(f, order);
    // Rt inversion is Lt inversion of f(z^-1), mirrored back.
    auto mirrored = invert_lt(f.inverted_variable(), order);
    SeriesWindow r(f.ring(), SeriesDir::Rt, -mirrored.hi(), -mirrored.lo());
    for (auto e = mirrored.lo(); e <= mirrored.hi(); ++e) r.set_coeff(-e, mirrored.coeff(e));
    return r;
}

VectorSeries::VectorSeries(BaseRing ring, SeriesDir dir, Exponent lo, Exponent hi, std::size_t dim)
    : ring_(ring), dir_(dir), lo_(lo), hi_(hi), dim_(dim) {
    if (lo > hi) throw DomainError("empty series window");
    coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), std::vector<Scalar>(dim, Scalar::zero(ring)));
}

const std::vector<Scalar>& VectorSeries::coeff(Exponent e) const {
    if (e < lo_ || e > hi_) throw DomainError("exponent outside series window");
    return coeffs_[static_cast<std::size_t>(e - lo_)];
}

std::vector<Scalar>& VectorSeries::coeff(Exponent e) {
    if (e < lo_ || e > hi_) throw DomainError("exponent outside series window");
    return coeffs_[static_cast<std::size_t>(e - lo_)];
}

}  // namespace novcoh
