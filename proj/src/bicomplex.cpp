#include "novcoh/bicomplex.hpp"

#include <algorithm>

#include "novcoh/novikov.hpp"

namespace novcoh {

std::size_t TorusLayout::c_rank(int m) const {
    if (m < c_lo || m >= c_lo + static_cast<int>(c_ranks.size())) return 0;
    return c_ranks[static_cast<std::size_t>(m - c_lo)];
}

DoubleComplexWindow::DoubleComplexWindow(BaseRing ring, int p_lo, int p_hi, int q_lo, int q_hi)
    : ring_(ring), p_lo_(p_lo), p_hi_(p_hi), q_lo_(q_lo), q_hi_(q_hi) {
    if (p_lo > p_hi || q_lo > q_hi) throw DomainError("empty double complex window");
}

std::size_t DoubleComplexWindow::rank(int p, int q) const {
    auto it = ranks_.find({p, q});
    return it == ranks_.end() ? 0 : it->second;
}

void DoubleComplexWindow::set_rank(int p, int q, std::size_t r) {
    if (!contains(p, q)) throw DomainError("(" + std::to_string(p) + "," + std::to_string(q) + ") outside the window");
    if (r == 0) {
        ranks_.erase({p, q});
    } else {
        ranks_[{p, q}] = r;
    }
    dh_.erase({p, q});
    dh_.erase({p - 1, q});
    dv_.erase({p, q});
    dv_.erase({p, q - 1});
}

ScalarMatrix DoubleComplexWindow::dh(int p, int q) const {
    auto it = dh_.find({p, q});
    if (it != dh_.end()) return it->second;
    return ScalarMatrix(ring_, contains(p + 1, q) ? rank(p + 1, q) : 0, rank(p, q));
}

ScalarMatrix DoubleComplexWindow::dv(int p, int q) const {
    auto it = dv_.find({p, q});
    if (it != dv_.end()) return it->second;
    return ScalarMatrix(ring_, contains(p, q + 1) ? rank(p, q + 1) : 0, rank(p, q));
}

void DoubleComplexWindow::set_dh(int p, int q, ScalarMatrix m) {
    if (!contains(p, q) || !contains(p + 1, q)) throw DomainError("dh out of the window");
    if (m.rows() != rank(p + 1, q) || m.cols() != rank(p, q)) throw DomainError("dh has shape " + m.shape());
    if (m.is_zero()) {
        dh_.erase({p, q});
    } else {
        dh_.insert_or_assign({p, q}, std::move(m));
    }
}

void DoubleComplexWindow::set_dv(int p, int q, ScalarMatrix m) {
    if (!contains(p, q) || !contains(p, q + 1)) throw DomainError("dv out of the window");
    if (m.rows() != rank(p, q + 1) || m.cols() != rank(p, q)) throw DomainError("dv has shape " + m.shape());
    if (m.is_zero()) {
        dv_.erase({p, q});
    } else {
        dv_.insert_or_assign({p, q}, std::move(m));
    }
}

namespace {

std::optional<std::string> check_square(const DoubleComplexWindow& d, int p, int q) {
    if (!(d.dh(p + 1, q) * d.dh(p, q)).is_zero()) return "dh o dh != 0";
    if (!(d.dv(p, q + 1) * d.dv(p, q)).is_zero()) return "dv o dv != 0";
    if (!(d.dv(p + 1, q) * d.dh(p, q) + d.dh(p, q + 1) * d.dv(p, q)).is_zero()) return "dh o dv != -dv o dh";
    return std::nullopt;
}

}  // namespace

namespace serial {

std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d) {
    for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
        for (int q = d.q_lo(); q <= d.q_hi(); ++q) {
            if (auto what = check_square(d, p, q)) return SquareViolation{p, q, *what};
        }
    }
    return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d) {
    const int width = d.p_hi() - d.p_lo() + 1;
    const int height = d.q_hi() - d.q_lo() + 1;
    const int cells = width * height;
    std::vector<std::optional<std::string>> found(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < cells; ++k) {
        found[static_cast<std::size_t>(k)] = check_square(d, d.p_lo() + k / height, d.q_lo() + k % height);
    }
    for (int k = 0; k < cells; ++k) {
        if (found[static_cast<std::size_t>(k)]) {
            return SquareViolation{d.p_lo() + k / height, d.q_lo() + k % height, *found[static_cast<std::size_t>(k)]};
        }
    }
    return std::nullopt;
}

}  // namespace parallel

std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d) {
    const long cells = static_cast<long>(d.p_hi() - d.p_lo() + 1) * (d.q_hi() - d.q_lo() + 1);
    return cells >= 64 ? parallel::check_laws(d) : serial::check_laws(d);
}

DoubleComplexWindow from_columns(const std::map<int, Complex>& cols, const std::map<std::pair<int, int>, ScalarMatrix>& dh) {
    if (cols.empty()) throw DomainError("from_columns needs at least one column");
    const BaseRing ring = cols.begin()->second.ring();
    int q_lo = cols.begin()->second.lo();
    int q_hi = cols.begin()->second.hi();
    for (const auto& [p, c] : cols) {
        if (!(c.ring() == ring)) throw RingMismatch("columns over different rings");
        if (auto v = validate_complex(c)) throw DomainError("column " + std::to_string(p) + ": " + v->what);
        q_lo = std::min(q_lo, c.lo());
        q_hi = std::max(q_hi, c.hi());
    }
    q_hi = std::max(q_hi, q_lo);
    DoubleComplexWindow d(ring, cols.begin()->first, cols.rbegin()->first, q_lo, q_hi);
    for (const auto& [p, c] : cols) {
        for (int q = q_lo; q <= q_hi; ++q) d.set_rank(p, q, c.rank(q));
    }
    for (const auto& [p, c] : cols) {
        for (int q = q_lo; q < q_hi; ++q) {
            auto m = c.d(q);
            d.set_dv(p, q, p % 2 == 0 ? m : -m);
        }
    }
    for (const auto& [key, m] : dh) d.set_dh(key.first, key.second, m);
    if (auto v = check_laws(d)) {
        throw DomainError("square (" + std::to_string(v->p) + "," + std::to_string(v->q) + "): " + v->what);
    }
    return d;
}

std::string to_string(TotChoice c) {
    switch (c) {
        case TotChoice::Sum: return "sum";
        case TotChoice::Prod: return "prod";
        case TotChoice::Lt: return "lt";
        case TotChoice::Rt: return "rt";
    }
    return "?";
}

std::size_t tot_offset(const DoubleComplexWindow& d, int n, int p) {
    std::size_t off = 0;
    for (int j = d.p_lo(); j < p; ++j) off += d.rank(j, n - j);
    return off;
}

Complex totalise(const DoubleComplexWindow& d, TotChoice /*choice*/) {
    const int lo = d.p_lo() + d.q_lo();
    const int hi = d.p_hi() + d.q_hi();
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(tot_offset(d, n, d.p_hi() + 1));
    Complex tot(d.ring(), lo, ranks);
    for (int n = lo; n < hi; ++n) {
        ScalarMatrix m(d.ring(), tot.rank(n + 1), tot.rank(n));
        for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
            const int q = n - p;
            if (d.rank(p, q) == 0) continue;
            const auto col = tot_offset(d, n, p);
            if (d.contains(p, q + 1)) m.set_block(tot_offset(d, n + 1, p), col, d.dv(p, q));
            if (d.contains(p + 1, q)) m.set_block(tot_offset(d, n + 1, p + 1), col, d.dh(p, q));
        }
        tot.set_d(n, std::move(m));
    }
    return tot;
}

DoubleComplexWindow torus_bicomplex(const Complex& c, const Map& h, int p_lo, int p_hi) {
    if (!(h.source() == c) || !(h.target() == c)) throw DomainError("torus_bicomplex: h is not an endomorphism of C");
    if (auto v = validate_chain_map(h)) throw DomainError("torus_bicomplex: degree " + std::to_string(v->degree) + ": " + v->what);
    const BaseRing ring = c.ring();
    // D^{p,q} is nonzero only for C.lo - 1 <= p + q <= C.hi.
    DoubleComplexWindow d(ring, p_lo, p_hi, c.lo() - 1 - p_hi, std::max(c.hi() - p_lo, c.lo() - 1 - p_hi));
    for (int p = p_lo; p <= p_hi; ++p) {
        for (int q = d.q_lo(); q <= d.q_hi(); ++q) d.set_rank(p, q, c.rank(p + q + 1) + c.rank(p + q));
    }
    const Complex cone_h = cone(h);
    for (int p = p_lo; p <= p_hi; ++p) {
        for (int q = d.q_lo(); q <= d.q_hi(); ++q) {
            const int m = p + q;
            if (d.rank(p, q) == 0) continue;
            if (p < p_hi) {
                ScalarMatrix hm(ring, d.rank(p + 1, q), d.rank(p, q));
                hm.set_block(c.rank(m + 2), 0, -ScalarMatrix::identity(ring, c.rank(m + 1)));
                d.set_dh(p, q, std::move(hm));
            }
            // Column p is Cone(h) re-indexed by p, with the cone's own differential.
            if (q < d.q_hi()) d.set_dv(p, q, cone_h.d(m));
        }
    }
    TorusLayout layout;
    layout.c_lo = c.lo();
    for (int m = c.lo(); m <= c.hi(); ++m) layout.c_ranks.push_back(c.rank(m));
    d.set_torus(std::move(layout));
    return d;
}

namespace {

Vector zeros(const BaseRing& ring, std::size_t n) { return Vector(n, Scalar::zero(ring)); }

Vector component(const TotCocycle& x, const DoubleComplexWindow& d, int p) {
    const auto want = d.rank(p, x.n - p);
    auto it = x.comps.find(p);
    if (it == x.comps.end()) return zeros(d.ring(), want);
    if (it->second.size() != want) {
        throw DomainError("cocycle column " + std::to_string(p) + " has length " + std::to_string(it->second.size()) +
                          ", expected " + std::to_string(want));
    }
    return it->second;
}

Vector add(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vector sub(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<Vector> preimage(const ScalarMatrix& a, const Vector& b) {
    if (a.ring().is_field()) return solve_field(a, b);
    return solve_int(a, b);
}

// Component of d(x) in D^{i, n-i+1}: dv(x_i) + dh(x_{i-1}).
Vector coboundary_at(const DoubleComplexWindow& d, const TotCocycle& x, int i) {
    const int q = x.n - i;
    Vector r = zeros(d.ring(), d.contains(i, q + 1) ? d.rank(i, q + 1) : 0);
    if (d.contains(i, q + 1)) {
        r = d.dv(i, q).apply(component(x, d, i));
        if (i - 1 >= d.p_lo()) r = add(r, d.dh(i - 1, q + 1).apply(component(x, d, i - 1)));
    }
    return r;
}

Vector witness_term(const Witness& w, const DoubleComplexWindow& d, int p) {
    auto it = w.terms.find(p);
    if (it == w.terms.end()) return zeros(d.ring(), d.rank(p, w.n - 1 - p));
    return it->second;
}

std::string at(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

void check_columns(const DoubleComplexWindow& d, const TotCocycle& x) {
    for (const auto& [p, v] : x.comps) {
        if (p < d.p_lo() || p > d.p_hi()) throw DomainError("cocycle has a column outside the window: " + std::to_string(p));
        component(x, d, p);
        for (const auto& s : v) {
            if (!(s.ring() == d.ring())) throw RingMismatch("cocycle over " + s.ring().name());
        }
    }
}

}  // namespace

Witness contract_lt(const DoubleComplexWindow& d, const TotCocycle& x) {
    check_columns(d, x);
    const int n = x.n;
    for (int i = d.p_lo(); i <= d.p_hi(); ++i) {
        if (!is_zero(coboundary_at(d, x, i))) {
            throw ContractionError(ContractionError::Reason::NotCocycle, i,
                                   "x is not a cocycle: dv(x_i) + dh(x_{i-1}) != 0 at column " + std::to_string(i));
        }
    }
    Witness w{n, {}, d.p_lo(), d.p_hi()};
    Vector prev = zeros(d.ring(), 0);  // y_{p_lo - 1} = 0
    for (int i = d.p_lo(); i <= d.p_hi(); ++i) {
        const int q = n - i;
        Vector residual = component(x, d, i);
        if (i > d.p_lo()) residual = sub(residual, d.dh(i - 1, q).apply(prev));
        const ScalarMatrix dv = d.dv(i, q - 1);
        auto y = preimage(dv, residual);
        const bool edge = i == d.p_hi();
        if (!y) {
            if (edge) {
                w.verified_hi = i - 1;
                break;
            }
            if (!is_exact_at(dv, d.dv(i, q))) {
                throw ContractionError(ContractionError::Reason::NotExact, i, "column " + std::to_string(i) +
                                                                                  " is not exact at " + at(i, q));
            }
            throw ContractionError(ContractionError::Reason::NoPreimage, i,
                                   "residual at " + at(i, q) + " has no preimage under dv over " + d.ring().name());
        }
        if (!is_zero(*y)) w.terms[i] = *y;
        prev = std::move(*y);
    }
    if (auto bad = recheck_witness(d, x, w)) {
        throw ContractionError(ContractionError::Reason::NoPreimage, *bad, "witness failed its recheck");
    }
    return w;
}

Witness contract_rt(const DoubleComplexWindow& d, const TotCocycle& x) {
    check_columns(d, x);
    const int n = x.n;
    for (int i = d.p_lo() + 1; i <= d.p_hi(); ++i) {
        if (!is_zero(coboundary_at(d, x, i))) {
            throw ContractionError(ContractionError::Reason::NotCocycle, i,
                                   "x is not a cocycle: dv(x_i) + dh(x_{i-1}) != 0 at column " + std::to_string(i));
        }
    }
    Witness w{n, {}, d.p_lo() + 1, d.p_hi()};
    Vector next = zeros(d.ring(), d.rank(d.p_hi(), n - 1 - d.p_hi()));  // y_{p_hi} = 0
    for (int i = d.p_hi(); i > d.p_lo(); --i) {
        const int q = n - i;
        // dh(y_{i-1}) = x_i - dv(y_i), with y_{i-1} in D^{i-1, q}.
        Vector target = sub(component(x, d, i), d.dv(i, q - 1).apply(next));
        const ScalarMatrix dh = d.dh(i - 1, q);
        std::optional<Vector> y;
        if (const auto& layout = d.torus()) {
            // D^{i,q} = C^{n+1} + C^n and dh(a, b) = (0, -a).
            const std::size_t top = layout->c_rank(n + 1);
            bool ok = true;
            for (std::size_t k = 0; k < top; ++k) ok = ok && target[k].is_zero();
            if (ok) {
                Vector pre = zeros(d.ring(), d.rank(i - 1, q));
                for (std::size_t k = 0; k < layout->c_rank(n); ++k) pre[k] = -target[top + k];
                y = std::move(pre);
            }
        } else {
            y = preimage(dh, target);
        }
        if (!y || !(dh.apply(*y) == target)) {
            if (i == d.p_hi()) {
                throw ContractionError(ContractionError::Reason::NotCocycle, i,
                                       "x_" + std::to_string(i) + " is not in the kernel of dh at the window edge");
            }
            if (d.contains(i + 1, q) && !is_exact_at(dh, d.dh(i, q))) {
                throw ContractionError(ContractionError::Reason::NotExact, i, "row " + std::to_string(q) +
                                                                                  " is not exact at " + at(i, q));
            }
            throw ContractionError(ContractionError::Reason::NoPreimage, i,
                                   "residual at " + at(i, q) + " has no preimage under dh over " + d.ring().name());
        }
        if (!is_zero(*y)) w.terms[i - 1] = *y;
        next = std::move(*y);
    }
    if (auto bad = recheck_witness(d, x, w)) {
        throw ContractionError(ContractionError::Reason::NoPreimage, *bad, "witness failed its recheck");
    }
    return w;
}

std::optional<int> recheck_witness(const DoubleComplexWindow& d, const TotCocycle& x, const Witness& w) {
    for (int i = w.verified_lo; i <= w.verified_hi; ++i) {
        const int q = x.n - i;
        Vector lhs = d.dv(i, q - 1).apply(witness_term(w, d, i));
        if (i - 1 >= d.p_lo()) lhs = add(lhs, d.dh(i - 1, q).apply(witness_term(w, d, i - 1)));
        if (!(lhs == component(x, d, i))) return i;
    }
    return std::nullopt;
}

std::optional<BlockMismatch> compare_with_expansion(const DoubleComplexWindow& d, const LaurentComplex& t) {
    if (!(d.ring() == t.ring())) throw RingMismatch("expansion over a different base ring");
    const Complex tot = totalise(d, TotChoice::Sum);
    for (int n = t.lo() - 1; n <= t.hi() + 1; ++n) {
        for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
            if (d.rank(p, n - p) != t.rank(n)) {
                return BlockMismatch{n, p, p, "D^{p,n-p} has rank " + std::to_string(d.rank(p, n - p)) + ", T^n has " +
                                                  std::to_string(t.rank(n))};
            }
        }
    }
    for (int n = t.lo() - 1; n <= t.hi(); ++n) {
        const ScalarMatrix dn = tot.d(n);
        const LaurentMatrix tn = t.d(n);
        for (int from = d.p_lo(); from <= d.p_hi(); ++from) {
            for (int to = d.p_lo(); to <= d.p_hi(); ++to) {
                const ScalarMatrix expected = coefficient(tn, to - from);
                const ScalarMatrix actual =
                    dn.block(tot_offset(d, n + 1, to), tot_offset(d, n, from), t.rank(n + 1), t.rank(n));
                if (!(expected == actual)) {
                    return BlockMismatch{n, from, to, "block differs from the z^" + std::to_string(to - from) + " coefficient"};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<BlockMismatch> check_tot_sum_is_torus(const Complex& c, const Map& h, int p_lo, int p_hi) {
    return compare_with_expansion(torus_bicomplex(c, h, p_lo, p_hi), mapping_torus(c, h, TorusVar::Z));
}

}  // namespace novcoh
