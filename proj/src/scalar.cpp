#include "novcoh/scalar.hpp"

#include <charconv>
#include <limits>

namespace novcoh {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

BaseRing BaseRing::prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("F" + std::to_string(p) + ": characteristic is not prime");
    return BaseRing(Kind::Fp, p);
}

BaseRing BaseRing::parse(std::string_view text) {
    if (text == "ZZ") return integers();
    if (text == "QQ") return rationals();
    if (text.size() >= 2 && text.front() == 'F') {
        std::uint32_t p = 0;
        auto digits = text.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
    }
    throw ParseError("unknown base ring '" + std::string(text) + "'");
}

std::string BaseRing::name() const {
    switch (kind_) {
        case Kind::ZZ: return "ZZ";
        case Kind::QQ: return "QQ";
        case Kind::Fp: return "F" + std::to_string(p_);
    }
    return "?";
}

Scalar::Scalar(BaseRing ring, long value) : ring_(ring), v_(value) { normalize(); }
Scalar::Scalar(BaseRing ring, const mpz_class& value) : ring_(ring), v_(value) { normalize(); }
Scalar::Scalar(BaseRing ring, const mpq_class& value) : ring_(ring), v_(value) {
    v_.canonicalize();
    if (ring_.kind() == BaseRing::Kind::ZZ && v_.get_den() != 1) {
        throw DomainError("non-integral value " + v_.get_str() + " over ZZ");
    }
    if (ring_.kind() == BaseRing::Kind::Fp && v_.get_den() != 1) {
        mpz_class p = ring_.characteristic();
        mpz_class den = v_.get_den() % p;
        mpz_class inv;
        if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
            throw DomainError("denominator vanishes in " + ring_.name());
        }
        v_ = mpq_class(mpz_class(v_.get_num() * inv));
    }
    normalize();
}

void Scalar::normalize() {
    if (ring_.kind() == BaseRing::Kind::Fp) {
        mpz_class p = ring_.characteristic();
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
        v_ = r;
    } else {
        v_.canonicalize();
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch(ring_.name() + " vs " + o.ring_.name());
}

Scalar Scalar::parse(BaseRing ring, std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("bad " + ring.name() + " scalar '" + s + "'"); };
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    auto to_mpz = [](std::string_view t) {
        if (!t.empty() && t.front() == '+') t.remove_prefix(1);
        return mpz_class(std::string(t));
    };
    switch (ring.kind()) {
        case BaseRing::Kind::ZZ:
            if (!valid_int(s, true)) throw bad();
            return Scalar(ring, to_mpz(s));
        case BaseRing::Kind::QQ: {
            auto slash = s.find('/');
            if (slash == std::string::npos) {
                if (!valid_int(s, true)) throw bad();
                return Scalar(ring, to_mpz(s));
            }
            std::string_view num(s.data(), slash);
            std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
            if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
            mpz_class d = to_mpz(den);
            if (d == 0) throw bad();
            return Scalar(ring, mpq_class(to_mpz(num), d));
        }
        case BaseRing::Kind::Fp: {
            if (!valid_int(s, false)) throw bad();
            mpz_class v = to_mpz(s);
            if (v >= ring.characteristic()) throw bad();
            return Scalar(ring, v);
        }
    }
    throw bad();
}

bool Scalar::is_unit() const {
    if (ring_.kind() == BaseRing::Kind::ZZ) return v_ == 1 || v_ == -1;
    return !is_zero();
}

Scalar Scalar::inverse() const {
    if (!is_unit()) throw DomainError(to_string() + " is not a unit of " + ring_.name());
    if (ring_.kind() == BaseRing::Kind::Fp) {
        mpz_class p = ring_.characteristic();
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
        return Scalar(ring_, inv);
    }
    return Scalar(ring_, mpq_class(1 / v_));
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    v_ += o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    v_ -= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    v_ *= o.v_;
    normalize();
    return *this;
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.ring_.kind() == BaseRing::Kind::ZZ) {
        if (!mpz_divisible_p(a.numerator().get_mpz_t(), b.numerator().get_mpz_t())) {
            throw DomainError(b.to_string() + " does not divide " + a.to_string() + " in ZZ");
        }
        return Scalar(a.ring_, mpz_class(a.numerator() / b.numerator()));
    }
    return a * b.inverse();
}

std::string Scalar::to_string() const { return v_.get_str(); }

bool has_canonical_map(BaseRing from, BaseRing to) {
    return from == to || from.kind() == BaseRing::Kind::ZZ;
}

Scalar map_scalar(const Scalar& s, BaseRing target) {
    if (!has_canonical_map(s.ring(), target)) {
        throw DomainError("no canonical map " + s.ring().name() + " -> " + target.name());
    }
    return Scalar(target, s.value());
}

}  // namespace novcoh
