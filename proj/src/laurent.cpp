#include "novcoh/laurent.hpp"

#include <sstream>

namespace novcoh {

RingTag RingTag::parse(std::string_view text) {
    constexpr std::string_view prefix = "Laurent(";
    if (text.substr(0, prefix.size()) == prefix && text.back() == ')') {
        auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        return RingTag{BaseRing::parse(inner), true};
    }
    return RingTag{BaseRing::parse(text), false};
}

std::string RingTag::name() const { return laurent ? "Laurent(" + base.name() + ")" : base.name(); }

std::string to_string(SeriesDir dir) { return dir == SeriesDir::Lt ? "lt" : "rt"; }

SeriesDir parse_dir(std::string_view text) {
    if (text == "lt") return SeriesDir::Lt;
    if (text == "rt") return SeriesDir::Rt;
    throw ParseError("direction must be 'lt' or 'rt', got '" + std::string(text) + "'");
}

LaurentPoly::LaurentPoly(const Scalar& c) : ring_(c.ring()) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(BaseRing ring, const std::vector<std::pair<Exponent, long>>& terms) : ring_(ring) {
    for (const auto& [e, c] : terms) *this += monomial(Scalar(ring, c), e);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, Exponent e) {
    LaurentPoly r(c.ring());
    if (!c.is_zero()) r.terms_.emplace(e, c);
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

LaurentPoly::Exponent LaurentPoly::lo_deg() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::hi_deg() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

Scalar LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void LaurentPoly::set_coeff(Exponent e, const Scalar& c) {
    if (!(c.ring() == ring_)) throw RingMismatch(ring_.name() + " vs " + c.ring().name());
    if (c.is_zero()) {
        terms_.erase(e);
    } else {
        terms_.insert_or_assign(e, c);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch(ring_.name() + " vs " + o.ring_.name());
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.ring_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(ea + eb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(Exponent k) const {
    LaurentPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Scalar LaurentPoly::evaluate(const Scalar& c) const {
    Scalar sum = Scalar::zero(ring_);
    if (is_zero()) return sum;
    auto power = [&](Scalar base, Exponent e) {
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        Scalar r = Scalar::one(ring_);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    };
    for (const auto& [e, coef] : terms_) sum += coef * power(c, e);
    return sum;
}

LaurentPoly LaurentPoly::mapped(BaseRing target) const {
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) r.set_coeff(e, map_scalar(c, target));
    return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    LaurentPoly q(a.ring_);
    if (a.is_zero()) return q;
    const auto b_hi = b.hi_deg();
    const auto b_lo = b.lo_deg();
    const Scalar& lead = b.terms_.rbegin()->second;
    // Any exact quotient has exponents in [a.lo - b.lo, a.hi - b.hi].
    const auto q_lo = a.lo_deg() - b_lo;
    LaurentPoly r = a;
    while (!r.is_zero()) {
        auto e = r.hi_deg() - b_hi;
        if (e < q_lo) throw DomainError(b.to_string() + " does not divide " + a.to_string());
        auto t = LaurentPoly::monomial(exact_div(r.terms_.rbegin()->second, lead), e);
        r -= t * b;
        q += t;
    }
    return q;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string v = c.to_string();
        bool neg = !v.empty() && v.front() == '-';
        if (neg) v.erase(0, 1);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << v;
            continue;
        }
        if (v != "1") os << v;
        os << 'z';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

NovikovUnit novikov_unit(const LaurentPoly& f, SeriesDir dir) {
    if (f.is_zero()) throw DomainError("0 is never a unit of a Novikov ring");
    auto e = dir == SeriesDir::Lt ? f.lo_deg() : f.hi_deg();
    Scalar c = f.coeff(e);
    return NovikovUnit{c.is_unit(), e, c};
}

}  // namespace novcoh
