#include "novcoh/fuzz.hpp"

#include "novcoh/linalg.hpp"

namespace novcoh::fuzz {

std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

long draw_range(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar random_scalar(Rng& rng, const BaseRing& ring, long bound) {
    if (ring.kind() == BaseRing::Kind::Fp) return Scalar(ring, static_cast<long>(draw(rng, ring.characteristic())));
    return Scalar(ring, draw_range(rng, -bound, bound));
}

ScalarMatrix random_matrix(Rng& rng, const BaseRing& ring, std::size_t rows, std::size_t cols, long bound) {
    ScalarMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, ring, bound);
    return m;
}

Invertible random_invertible(Rng& rng, const BaseRing& ring, std::size_t n, std::size_t steps) {
    Invertible out{ScalarMatrix::identity(ring, n), ScalarMatrix::identity(ring, n)};
    if (n == 0) return out;
    if (steps == 0) steps = 3 * n;
    auto& p = out.p;
    auto& q = out.p_inv;
    for (std::size_t s = 0; s < steps; ++s) {
        const auto kind = draw(rng, 3);
        const auto i = static_cast<std::size_t>(draw(rng, n));
        if (kind == 0 && n > 1) {
            // row_i += c row_j on P; col_j -= c col_i on P^-1
            auto j = static_cast<std::size_t>(draw(rng, n - 1));
            if (j >= i) ++j;
            Scalar c(ring, draw_range(rng, 1, 2) * (draw(rng, 2) ? 1 : -1));
            if (c.is_zero()) c = Scalar::one(ring);
            for (std::size_t k = 0; k < n; ++k) {
                p(i, k) += c * p(j, k);
                q(k, j) -= c * q(k, i);
            }
        } else if (kind == 1 && n > 1) {
            auto j = static_cast<std::size_t>(draw(rng, n - 1));
            if (j >= i) ++j;
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(p(i, k), p(j, k));
                std::swap(q(k, i), q(k, j));
            }
        } else {
            Scalar c = ring.is_field() ? random_scalar(rng, ring) : Scalar(ring, -1L);
            if (c.is_zero()) c = Scalar(ring, -1L);
            const Scalar ci = c.inverse();
            for (std::size_t k = 0; k < n; ++k) {
                p(i, k) *= c;
                q(k, i) *= ci;
            }
        }
    }
    return out;
}

namespace {

std::size_t idx(int n, int lo) { return static_cast<std::size_t>(n - lo); }

void conjugate(Rng& rng, Complex& c, Map* h) {
    std::vector<Invertible> ps;
    for (int n = c.lo(); n <= c.hi(); ++n) ps.push_back(random_invertible(rng, c.ring(), c.rank(n)));
    for (int n = c.lo(); n < c.hi(); ++n) {
        c.set_d(n, ps[idx(n + 1, c.lo())].p * c.d(n) * ps[idx(n, c.lo())].p_inv);
    }
    if (!h) return;
    Map out(c, c);
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const auto& pn = ps[idx(n, c.lo())];
        out.set_comp(n, pn.p * h->comp(n) * pn.p_inv);
    }
    *h = std::move(out);
}

// Integer basis of the rational nullspace (columns scaled to clear denominators).
ScalarMatrix nullspace_any(const ScalarMatrix& a) {
    if (a.ring().is_field()) return nullspace_field(a);
    const ScalarMatrix q = nullspace_field(map_base(a, BaseRing::rationals()));
    ScalarMatrix out(a.ring(), q.rows(), q.cols());
    for (std::size_t j = 0; j < q.cols(); ++j) {
        mpz_class l = 1;
        for (std::size_t i = 0; i < q.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q(i, j).value().get_den_mpz_t());
        for (std::size_t i = 0; i < q.rows(); ++i) {
            const mpq_class v = q(i, j).value() * l;
            out(i, j) = Scalar(a.ring(), mpz_class(v.get_num()));
        }
    }
    return out;
}

Vector random_combination(Rng& rng, const ScalarMatrix& basis) {
    Vector v(basis.rows(), Scalar::zero(basis.ring()));
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        const Scalar c = random_scalar(rng, basis.ring(), 1);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < basis.rows(); ++i) v[i] += c * basis(i, j);
    }
    return v;
}

}  // namespace

Complex random_complex(Rng& rng, const BaseRing& ring, int lo, int hi, std::size_t max_rank) {
    if (hi < lo) return Complex(ring, lo, {});
    const auto count = idx(hi, lo) + 1;
    std::vector<std::size_t> used(count, 0);
    struct Piece {
        int n;
        std::size_t col;
        std::size_t row;
        ScalarMatrix a;
    };
    std::vector<Piece> pieces;
    for (int n = lo; n < hi; ++n) {
        const auto a = static_cast<std::size_t>(draw(rng, max_rank - used[idx(n, lo)] + 1));
        const auto b = static_cast<std::size_t>(draw(rng, max_rank - used[idx(n + 1, lo)] + 1));
        pieces.push_back(Piece{n, used[idx(n, lo)], used[idx(n + 1, lo)], random_matrix(rng, ring, b, a)});
        used[idx(n, lo)] += a;
        used[idx(n + 1, lo)] += b;
    }
    for (auto& u : used) u += static_cast<std::size_t>(draw(rng, max_rank - u + 1));
    Complex c(ring, lo, used);
    for (int n = lo; n < hi; ++n) {
        ScalarMatrix d(ring, c.rank(n + 1), c.rank(n));
        for (const auto& piece : pieces) {
            if (piece.n == n) d.set_block(piece.row, piece.col, piece.a);
        }
        c.set_d(n, std::move(d));
    }
    conjugate(rng, c, nullptr);
    return c;
}

Map random_chain_map(Rng& rng, const Complex& c) {
    const BaseRing ring = c.ring();
    std::map<int, std::size_t> offset;
    std::size_t unknowns = 0;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        offset[n] = unknowns;
        unknowns += c.rank(n) * c.rank(n);
    }
    std::size_t equations = 0;
    for (int n = c.lo(); n < c.hi(); ++n) equations += c.rank(n + 1) * c.rank(n);
    // d^n h^n - h^{n+1} d^n = 0, one row per entry.
    ScalarMatrix a(ring, equations, unknowns);
    std::size_t row = 0;
    for (int n = c.lo(); n < c.hi(); ++n) {
        const auto d = c.d(n);
        const auto r0 = c.rank(n);
        const auto r1 = c.rank(n + 1);
        for (std::size_t i = 0; i < r1; ++i) {
            for (std::size_t k = 0; k < r0; ++k, ++row) {
                for (std::size_t j = 0; j < r0; ++j) a(row, offset[n] + j * r0 + k) += d(i, j);
                for (std::size_t j = 0; j < r1; ++j) a(row, offset[n + 1] + i * r1 + j) -= d(j, k);
            }
        }
    }
    const Vector v = random_combination(rng, nullspace_any(a));
    Map h(c, c);
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const auto r = c.rank(n);
        ScalarMatrix m(ring, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = v[offset[n] + i * r + j];
        h.set_comp(n, std::move(m));
    }
    return h;
}

Map random_quasi_iso(Rng& rng, const Complex& c) {
    if (!c.ring().is_field()) throw DomainError("random_quasi_iso needs a field");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Map h = random_chain_map(rng, c) + Map::scalar(c, random_scalar(rng, c.ring()));
        if (is_quasi_iso(h)) return h;
    }
    return Map::identity(c);
}

Sample random_unimodular_iso(Rng& rng, int lo, int hi, std::size_t max_rank) {
    const BaseRing zz = BaseRing::integers();
    const std::size_t m = max_rank >= 2 ? 1 + static_cast<std::size_t>(draw(rng, 2)) : 1;
    const Complex x = random_complex(rng, zz, lo, hi, max_rank / m);
    const ScalarMatrix g = m == 1 ? ScalarMatrix::identity(zz, 1).scaled(Scalar(zz, draw(rng, 2) ? 1L : -1L))
                                  : random_invertible(rng, zz, m).p;
    std::vector<std::size_t> ranks;
    for (int n = x.lo(); n <= x.hi(); ++n) ranks.push_back(m * x.rank(n));
    Complex c(zz, x.lo(), ranks);
    for (int n = x.lo(); n < x.hi(); ++n) {
        ScalarMatrix d(zz, c.rank(n + 1), c.rank(n));
        for (std::size_t k = 0; k < m; ++k) d.set_block(k * x.rank(n + 1), k * x.rank(n), x.d(n));
        c.set_d(n, std::move(d));
    }
    Map h(c, c);
    for (int n = x.lo(); n <= x.hi(); ++n) {
        const auto r = x.rank(n);
        ScalarMatrix hn(zz, m * r, m * r);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t j = 0; j < r; ++j) hn(k * r + j, l * r + j) = g(k, l);
        h.set_comp(n, std::move(hn));
    }
    conjugate(rng, c, &h);
    return Sample{std::move(c), std::move(h)};
}

Sample generate(std::uint64_t seed, const Params& params) {
    if (params.ring.laurent) throw DomainError("the generator works over base rings only, not " + params.ring.name());
    if (params.hi < params.lo) throw DomainError("empty degree window");
    Rng rng(seed);
    Complex c = random_complex(rng, params.ring.base, params.lo, params.hi, params.max_rank);
    Map h = random_chain_map(rng, c);
    return Sample{std::move(c), std::move(h)};
}

TotCocycle random_tot_cocycle(Rng& rng, const DoubleComplexWindow& d, int n, const std::set<int>& zero_cols) {
    const Complex tot = totalise(d, TotChoice::Sum);
    const ScalarMatrix dn = tot.d(n);
    std::size_t extra = 0;
    for (int p : zero_cols) extra += d.rank(p, n - p);
    ScalarMatrix a(d.ring(), dn.rows() + extra, tot.rank(n));
    a.set_block(0, 0, dn);
    std::size_t row = dn.rows();
    for (int p : zero_cols) {
        const auto off = tot_offset(d, n, p);
        for (std::size_t k = 0; k < d.rank(p, n - p); ++k, ++row) a(row, off + k) = Scalar::one(d.ring());
    }
    const Vector v = random_combination(rng, nullspace_any(a));
    TotCocycle x;
    x.n = n;
    for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
        const auto r = d.rank(p, n - p);
        if (r == 0) continue;
        const auto off = tot_offset(d, n, p);
        x.comps[p] = Vector(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + r));
    }
    return x;
}

}  // namespace novcoh::fuzz
