#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "novcoh/error.hpp"

namespace novcoh {

/// Coefficient ring R: the integers, the rationals or a prime field.
class BaseRing {
public:
    enum class Kind { ZZ, QQ, Fp };

    static BaseRing integers() { return BaseRing(Kind::ZZ, 0); }
    static BaseRing rationals() { return BaseRing(Kind::QQ, 0); }
    /// Throws DomainError unless p is prime.
    static BaseRing prime_field(std::uint32_t p);

    /// Accepts "ZZ", "QQ" and "F<p>" (e.g. "F5").
    static BaseRing parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_field() const { return kind_ != Kind::ZZ; }
    std::string name() const;

    friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
    BaseRing(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a BaseRing.  Rationals are kept in lowest terms with positive
/// denominator, integers have denominator one, residues are reduced into [0, p).
class Scalar {
public:
    explicit Scalar(BaseRing ring) : ring_(ring) {}
    Scalar(BaseRing ring, long value);
    Scalar(BaseRing ring, const mpz_class& value);
    Scalar(BaseRing ring, const mpq_class& value);

    static Scalar zero(BaseRing ring) { return Scalar(ring); }
    static Scalar one(BaseRing ring) { return Scalar(ring, 1L); }
    static Scalar parse(BaseRing ring, std::string_view text);

    const BaseRing& ring() const { return ring_; }
    const mpq_class& value() const { return v_; }
    /// Numerator of the canonical representative; the whole value over ZZ and Fp.
    const mpz_class& numerator() const { return v_.get_num(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    /// Unit of the base ring: +-1 over ZZ, any nonzero element over a field.
    bool is_unit() const;
    /// Throws DomainError on non-units.
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Exact quotient a/b.  Over ZZ the division must leave no remainder.
    friend Scalar exact_div(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ring_ == b.ring_ && a.v_ == b.v_;
    }

    std::string to_string() const;

private:
    void normalize();
    void check_same(const Scalar& o) const;

    BaseRing ring_;
    mpq_class v_;
};

/// Image of an integer-ring scalar under the canonical map ZZ -> target (identity otherwise).
Scalar map_scalar(const Scalar& s, BaseRing target);

/// Whether a canonical coefficient map from -> to exists (ZZ->QQ, ZZ->Fp, identity).
bool has_canonical_map(BaseRing from, BaseRing to);

}  // namespace novcoh
