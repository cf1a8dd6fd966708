#include "novcoh/complex.hpp"

#include <algorithm>

namespace novcoh {

template <class E>
CochainComplex<E>::CochainComplex(BaseRing ring, int lo, std::vector<std::size_t> ranks)
    : ring_(ring), lo_(lo), ranks_(std::move(ranks)) {
    for (std::size_t k = 0; k + 1 < ranks_.size(); ++k) diffs_.emplace_back(ring_, ranks_[k + 1], ranks_[k]);
}

template <class E>
std::size_t CochainComplex<E>::rank(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return ranks_[static_cast<std::size_t>(n - lo_)];
}

template <class E>
std::size_t CochainComplex<E>::total_rank() const {
    std::size_t t = 0;
    for (auto r : ranks_) t += r;
    return t;
}

template <class E>
Matrix<E> CochainComplex<E>::d(int n) const {
    if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
    return Matrix<E>(ring_, rank(n + 1), rank(n));
}

template <class E>
void CochainComplex<E>::set_d(int n, Matrix<E> m) {
    if (!(m.ring() == ring_)) throw RingMismatch("differential over " + m.ring().name() + " in a complex over " + ring_.name());
    if (m.rows() != rank(n + 1) || m.cols() != rank(n)) {
        throw DomainError("d^" + std::to_string(n) + " must be " + std::to_string(rank(n + 1)) + "x" +
                          std::to_string(rank(n)) + ", got " + m.shape());
    }
    if (n >= lo_ && n < hi()) {
        diffs_[static_cast<std::size_t>(n - lo_)] = std::move(m);
    } else if (!m.is_zero()) {
        throw DomainError("d^" + std::to_string(n) + " lies outside the complex");
    }
}

template <class E>
ChainMap<E>::ChainMap(CochainComplex<E> source, CochainComplex<E> target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw RingMismatch("chain map between complexes over different rings");
}

template <class E>
Matrix<E> ChainMap<E>::comp(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return Matrix<E>(ring(), target_.rank(n), source_.rank(n));
}

template <class E>
void ChainMap<E>::set_comp(int n, Matrix<E> m) {
    if (!(m.ring() == ring())) throw RingMismatch("chain map component over the wrong ring");
    if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n)) {
        throw DomainError("component " + std::to_string(n) + " must be " + std::to_string(target_.rank(n)) + "x" +
                          std::to_string(source_.rank(n)) + ", got " + m.shape());
    }
    if (m.empty()) return;
    comps_.insert_or_assign(n, std::move(m));
}

template <class E>
ChainMap<E> ChainMap<E>::identity(const CochainComplex<E>& c) {
    return scalar(c, E::one(c.ring()));
}

template <class E>
ChainMap<E> ChainMap<E>::scalar(const CochainComplex<E>& c, const E& factor) {
    ChainMap f(c, c);
    for (int n = c.lo(); n <= c.hi(); ++n) f.set_comp(n, Matrix<E>::identity(c.ring(), c.rank(n)).scaled(factor));
    return f;
}

template <class E>
std::optional<Violation> validate_complex(const CochainComplex<E>& c) {
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const auto dn = c.d(n);
        if (dn.rows() != c.rank(n + 1) || dn.cols() != c.rank(n)) {
            return Violation{n, "d^" + std::to_string(n) + " has shape " + dn.shape()};
        }
    }
    for (int n = c.lo(); n < c.hi(); ++n) {
        if (!(c.d(n + 1) * c.d(n)).is_zero()) {
            return Violation{n, "d^" + std::to_string(n + 1) + " * d^" + std::to_string(n) + " != 0"};
        }
    }
    return std::nullopt;
}

template <class E>
std::optional<Violation> validate_chain_map(const ChainMap<E>& f) {
    if (auto v = validate_complex(f.source())) return Violation{v->degree, "source: " + v->what};
    if (auto v = validate_complex(f.target())) return Violation{v->degree, "target: " + v->what};
    for (int n = f.lo() - 1; n <= f.hi(); ++n) {
        if (!(f.target().d(n) * f.comp(n) == f.comp(n + 1) * f.source().d(n))) {
            return Violation{n, "map does not commute with d^" + std::to_string(n)};
        }
    }
    return std::nullopt;
}

template <class E>
CochainComplex<E> shift(const CochainComplex<E>& c, int k) {
    std::vector<std::size_t> ranks;
    for (int n = c.lo(); n <= c.hi(); ++n) ranks.push_back(c.rank(n));
    CochainComplex<E> s(c.ring(), c.lo() - k, ranks);
    for (int n = s.lo(); n < s.hi(); ++n) {
        auto m = c.d(n + k);
        s.set_d(n, k % 2 == 0 ? m : -m);
    }
    return s;
}

template <class E>
CochainComplex<E> cone(const ChainMap<E>& f) {
    const auto& x = f.source();
    const auto& y = f.target();
    const int lo = std::min(x.lo() - 1, y.lo());
    const int hi = std::max(x.hi() - 1, y.hi());
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(x.rank(n + 1) + y.rank(n));
    CochainComplex<E> c(f.ring(), lo, ranks);
    for (int n = lo; n < hi; ++n) {
        Matrix<E> m(f.ring(), c.rank(n + 1), c.rank(n));
        m.set_block(0, 0, -x.d(n + 1));
        m.set_block(x.rank(n + 2), 0, f.comp(n + 1));
        m.set_block(x.rank(n + 2), x.rank(n + 1), y.d(n));
        c.set_d(n, std::move(m));
    }
    return c;
}

template <class E>
CochainComplex<E> direct_sum(const CochainComplex<E>& a, const CochainComplex<E>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("direct sum of complexes over different rings");
    if (a.total_rank() == 0) return b;
    if (b.total_rank() == 0) return a;
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(a.rank(n) + b.rank(n));
    CochainComplex<E> s(a.ring(), lo, ranks);
    for (int n = lo; n < hi; ++n) {
        Matrix<E> m(a.ring(), s.rank(n + 1), s.rank(n));
        m.set_block(0, 0, a.d(n));
        m.set_block(a.rank(n + 1), a.rank(n), b.d(n));
        s.set_d(n, std::move(m));
    }
    return s;
}

template <class E>
ChainMap<E> compose(const ChainMap<E>& g, const ChainMap<E>& f) {
    if (!(f.target() == g.source())) throw DomainError("compose: target of f is not the source of g");
    ChainMap<E> h(f.source(), g.target());
    for (int n = std::min(f.lo(), g.lo()); n <= std::max(f.hi(), g.hi()); ++n) h.set_comp(n, g.comp(n) * f.comp(n));
    return h;
}

template <class E>
ChainMap<E> operator+(const ChainMap<E>& f, const ChainMap<E>& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) throw DomainError("sum of maps with different ends");
    ChainMap<E> h(f.source(), f.target());
    for (int n = f.lo(); n <= f.hi(); ++n) h.set_comp(n, f.comp(n) + g.comp(n));
    return h;
}

bool CohomologyReport::is_zero() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::size_t CohomologyReport::dim(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? 0 : it->second.free_rank;
}

CohomologyReport cohomology_field(const Complex& c) {
    if (!c.ring().is_field()) throw DomainError("cohomology_field needs a field, got " + c.ring().name());
    CohomologyReport rep;
    std::map<int, std::size_t> ranks;
    for (int n = c.lo() - 1; n <= c.hi(); ++n) ranks[n] = rank_field(c.d(n));
    for (int n = c.lo(); n <= c.hi(); ++n) rep.degrees[n].free_rank = c.rank(n) - ranks[n] - ranks[n - 1];
    return rep;
}

CohomologyReport cohomology_int(const Complex& c) {
    if (c.ring().kind() != BaseRing::Kind::ZZ) throw RingMismatch("cohomology_int needs ZZ, got " + c.ring().name());
    CohomologyReport rep;
    rep.over_field = false;
    std::map<int, std::vector<mpz_class>> diag;
    for (int n = c.lo() - 1; n <= c.hi(); ++n) diag[n] = smith_normal_form(c.d(n)).diagonal();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto& h = rep.degrees[n];
        h.free_rank = c.rank(n) - diag[n].size() - diag[n - 1].size();
        for (const auto& d : diag[n - 1]) {
            if (d > 1) h.torsion.push_back(d);
        }
    }
    return rep;
}

bool is_quasi_iso(const Map& h) {
    if (!h.ring().is_field()) {
        throw DomainError("quasi-isomorphism test over " + h.ring().name() + " is unsupported (fields only)");
    }
    return cohomology_field(cone(h)).is_zero();
}

bool is_exact_at(const ScalarMatrix& incoming, const ScalarMatrix& outgoing) {
    if (incoming.rows() != outgoing.cols()) throw DomainError("exactness test on non-composable maps");
    if (incoming.ring().is_field()) return rank_field(incoming) + rank_field(outgoing) == incoming.rows();
    const auto in = smith_normal_form(incoming).diagonal();
    const auto out = smith_normal_form(outgoing).diagonal();
    if (in.size() + out.size() != incoming.rows()) return false;
    return std::all_of(in.begin(), in.end(), [](const mpz_class& d) { return d == 1; });
}

long euler_characteristic(const Complex& c) {
    long chi = 0;
    for (int n = c.lo(); n <= c.hi(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(n));
    return chi;
}

namespace {

template <class E, class F>
auto map_entries(const CochainComplex<E>& c, BaseRing ring, F&& fn) {
    using Out = decltype(fn(c.d(c.lo())));
    using OutE = std::conditional_t<std::is_same_v<Out, LaurentMatrix>, LaurentPoly, Scalar>;
    std::vector<std::size_t> ranks;
    for (int n = c.lo(); n <= c.hi(); ++n) ranks.push_back(c.rank(n));
    CochainComplex<OutE> r(ring, c.lo(), ranks);
    for (int n = c.lo(); n < c.hi(); ++n) r.set_d(n, fn(c.d(n)));
    return r;
}

}  // namespace

Complex base_change(const Complex& c, BaseRing target) {
    if (!has_canonical_map(c.ring(), target)) throw DomainError("no canonical map " + c.ring().name() + " -> " + target.name());
    return map_entries(c, target, [&](const ScalarMatrix& m) { return map_base(m, target); });
}

LaurentComplex base_change(const LaurentComplex& c, BaseRing target) {
    if (!has_canonical_map(c.ring(), target)) throw DomainError("no canonical map " + c.ring().name() + " -> " + target.name());
    return map_entries(c, target, [&](const LaurentMatrix& m) { return map_base(m, target); });
}

Map base_change(const Map& f, BaseRing target) {
    Map g(base_change(f.source(), target), base_change(f.target(), target));
    for (int n = f.lo(); n <= f.hi(); ++n) g.set_comp(n, map_base(f.comp(n), target));
    return g;
}

LaurentComplex to_laurent(const Complex& c) {
    return map_entries(c, c.ring(), [](const ScalarMatrix& m) { return novcoh::to_laurent(m); });
}

LaurentMap to_laurent(const Map& f) {
    LaurentMap g(to_laurent(f.source()), to_laurent(f.target()));
    for (int n = f.lo(); n <= f.hi(); ++n) g.set_comp(n, novcoh::to_laurent(f.comp(n)));
    return g;
}

RingTag tag_of(const AnyComplex& c) {
    return std::visit([](const auto& x) { return x.tag(); }, c);
}

AnyComplex base_change(const AnyComplex& c, RingTag target) {
    if (const auto* laurent = std::get_if<LaurentComplex>(&c)) {
        if (!target.laurent) throw DomainError("no canonical map from a Laurent ring to " + target.name());
        return base_change(*laurent, target.base);
    }
    const auto& plain = std::get<Complex>(c);
    Complex mapped = base_change(plain, target.base);
    if (target.laurent) return to_laurent(mapped);
    return mapped;
}

#define NOVCOH_INSTANTIATE(E)                                                                   \
    template class CochainComplex<E>;                                                           \
    template class ChainMap<E>;                                                                 \
    template std::optional<Violation> validate_complex(const CochainComplex<E>&);               \
    template std::optional<Violation> validate_chain_map(const ChainMap<E>&);                   \
    template CochainComplex<E> shift(const CochainComplex<E>&, int);                            \
    template CochainComplex<E> cone(const ChainMap<E>&);                                        \
    template CochainComplex<E> direct_sum(const CochainComplex<E>&, const CochainComplex<E>&);  \
    template ChainMap<E> compose(const ChainMap<E>&, const ChainMap<E>&);                       \
    template ChainMap<E> operator+(const ChainMap<E>&, const ChainMap<E>&);

NOVCOH_INSTANTIATE(Scalar)
NOVCOH_INSTANTIATE(LaurentPoly)

#undef NOVCOH_INSTANTIATE

}  // namespace novcoh
