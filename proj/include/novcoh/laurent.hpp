#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "novcoh/scalar.hpp"

namespace novcoh {

/// Tag for the ring a matrix or complex lives over: R itself or R[z, z^-1].
/// Laurent-over-Laurent cannot be expressed.
struct RingTag {
    BaseRing base;
    bool laurent = false;

    /// "ZZ", "F5", "Laurent(ZZ)", ...
    static RingTag parse(std::string_view text);
    std::string name() const;

    friend bool operator==(const RingTag&, const RingTag&) = default;
};

/// Direction of a Novikov ring: Lt is R((z)) (bounded below), Rt is R((z^-1)) (bounded above).
enum class SeriesDir { Lt, Rt };

std::string to_string(SeriesDir dir);
SeriesDir parse_dir(std::string_view text);
inline SeriesDir opposite(SeriesDir d) { return d == SeriesDir::Lt ? SeriesDir::Rt : SeriesDir::Lt; }

/// Element of R[z, z^-1] in sparse canonical form: no stored coefficient is zero.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Scalar>;

    explicit LaurentPoly(BaseRing ring) : ring_(ring) {}
    /// Constant polynomial.
    explicit LaurentPoly(const Scalar& c);
    LaurentPoly(BaseRing ring, const std::vector<std::pair<Exponent, long>>& terms);

    static LaurentPoly zero(BaseRing ring) { return LaurentPoly(ring); }
    static LaurentPoly one(BaseRing ring) { return LaurentPoly(Scalar::one(ring)); }
    static LaurentPoly monomial(const Scalar& c, Exponent e);

    const BaseRing& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    /// Unit of R[z, z^-1].  R is a domain here, so the units are u z^k with u a unit of R.
    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->second.is_unit(); }

    /// Lowest / highest exponent.  Throws DomainError on the zero polynomial.
    Exponent lo_deg() const;
    Exponent hi_deg() const;
    Scalar coeff(Exponent e) const;

    /// Sets coefficient e (erasing it when c is zero).
    void set_coeff(Exponent e, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Multiplication by z^k.
    LaurentPoly shifted(Exponent k) const;
    /// f(z) -> f(z^-1).
    LaurentPoly inverted_variable() const;
    /// Value at z = c; c must be a unit when negative exponents occur.
    Scalar evaluate(const Scalar& c) const;
    /// Coefficientwise canonical map to another base ring.
    LaurentPoly mapped(BaseRing target) const;

    /// Exact quotient in R[z, z^-1]; throws DomainError if b does not divide a.
    friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Human-readable form such as "2 - z" or "-z^-1 + 3z^2".
    std::string to_string() const;

private:
    void check_same(const LaurentPoly& o) const;

    BaseRing ring_;
    Terms terms_;
};

/// Result of the unit test for a Laurent polynomial in a Novikov ring.
struct NovikovUnit {
    bool unit = false;
    LaurentPoly::Exponent pivot_exp = 0;
    Scalar pivot_coeff;
};

/// f is a unit of R((z)) iff its lowest coefficient is a unit of R, and a unit of
/// R((z^-1)) iff its highest coefficient is.  Throws DomainError for f = 0.
NovikovUnit novikov_unit(const LaurentPoly& f, SeriesDir dir);

}  // namespace novcoh
