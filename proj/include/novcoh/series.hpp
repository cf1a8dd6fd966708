#pragma once

#include <cstdint>
#include <vector>

#include "novcoh/laurent.hpp"

namespace novcoh {

/// Truncated representative of an element of R((z)) or R((z^-1)).
///
/// For Lt the element is exactly zero below `lo`, its coefficients on [lo, hi] are
/// known and everything above `hi` is unknown.  For Rt the roles of the two ends are
/// swapped: zero above `hi`, unknown below `lo`.  Arithmetic never reports a
/// coefficient that is not determined by its inputs.
class SeriesWindow {
public:
    using Exponent = LaurentPoly::Exponent;

    /// All-zero window.  Throws DomainError when lo > hi.
    SeriesWindow(BaseRing ring, SeriesDir dir, Exponent lo, Exponent hi);

    /// The polynomial f viewed as a series known on [lo, hi].  f must vanish on the
    /// side the direction asserts to be zero (below lo for Lt, above hi for Rt).
    static SeriesWindow from_poly(const LaurentPoly& f, SeriesDir dir, Exponent lo, Exponent hi);

    const BaseRing& ring() const { return ring_; }
    SeriesDir dir() const { return dir_; }
    Exponent lo() const { return lo_; }
    Exponent hi() const { return hi_; }
    std::size_t length() const { return coeffs_.size(); }

    /// Throws DomainError outside the determined window, except on the side the
    /// direction asserts to be zero where 0 is returned.
    Scalar coeff(Exponent e) const;
    void set_coeff(Exponent e, const Scalar& c);

    /// Known part as a Laurent polynomial.
    LaurentPoly truncation() const;
    /// True iff the window equals the constant 1 on [lo, hi].
    bool is_one_on_window() const;
    /// Restriction to a sub-window; throws if [lo, hi] is not contained in the current one.
    SeriesWindow restricted(Exponent lo, Exponent hi) const;

    SeriesWindow operator-() const;
    SeriesWindow scaled(const Scalar& c) const;

    friend bool operator==(const SeriesWindow&, const SeriesWindow&) = default;

private:
    BaseRing ring_;
    SeriesDir dir_;
    Exponent lo_;
    Exponent hi_;
    std::vector<Scalar> coeffs_;
};

enum class SeriesOp { Add, Mul };

/// Sum or product of two windows of the same direction and ring.  The result window
/// is the largest interval on which every coefficient is determined.
SeriesWindow series_arith(const SeriesWindow& a, const SeriesWindow& b, SeriesOp op);

/// Inverse of a Novikov unit as a truncated series.  The pivot monomial is factored
/// out and (1 - u)^-1 is expanded as a geometric series.  For Lt the window starts at
/// the inverse's valuation and reaches exponent max(order, valuation + order - 1); Rt
/// is the mirror image.  Throws DomainError when f is not a unit or order < 1.
SeriesWindow series_invert(const LaurentPoly& f, SeriesDir dir, std::int64_t order);

/// Series whose coefficients are vectors in R^dim (an element of F((z)) for F free).
class VectorSeries {
public:
    using Exponent = LaurentPoly::Exponent;

    VectorSeries(BaseRing ring, SeriesDir dir, Exponent lo, Exponent hi, std::size_t dim);

    const BaseRing& ring() const { return ring_; }
    SeriesDir dir() const { return dir_; }
    Exponent lo() const { return lo_; }
    Exponent hi() const { return hi_; }
    std::size_t dim() const { return dim_; }

    const std::vector<Scalar>& coeff(Exponent e) const;
    std::vector<Scalar>& coeff(Exponent e);

    friend bool operator==(const VectorSeries&, const VectorSeries&) = default;

private:
    BaseRing ring_;
    SeriesDir dir_;
    Exponent lo_;
    Exponent hi_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> coeffs_;
};

}  // namespace novcoh
