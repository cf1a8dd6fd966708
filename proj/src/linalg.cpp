#include "novcoh/linalg.hpp"

#include <algorithm>
#include <exception>

namespace novcoh {

namespace {

void require_field(const BaseRing& ring, const char* op) {
    if (!ring.is_field()) throw DomainError(std::string(op) + " needs a field, got " + ring.name());
}

// Eliminates column `col` from every row except `pivot_row`, whose pivot is already 1.
void eliminate_row(ScalarMatrix& m, std::size_t i, std::size_t pivot_row, std::size_t col) {
    if (i == pivot_row || m(i, col).is_zero()) return;
    const Scalar factor = m(i, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
    }
}

template <bool Parallel>
Echelon row_reduce_impl(const ScalarMatrix& a) {
    require_field(a.ring(), "row_reduce");
    Echelon out{a, {}};
    ScalarMatrix& m = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        const auto rows = static_cast<std::ptrdiff_t>(m.rows());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = 0; i < rows; ++i) eliminate_row(m, static_cast<std::size_t>(i), r, c);
        } else {
            for (std::ptrdiff_t i = 0; i < rows; ++i) eliminate_row(m, static_cast<std::size_t>(i), r, c);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

template <bool Parallel>
std::size_t bareiss_rank_impl(LaurentMatrix m) {
    std::size_t r = 0;
    LaurentPoly prev = LaurentPoly::one(m.ring());
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const auto first = static_cast<std::ptrdiff_t>(r + 1);
        const auto rows = static_cast<std::ptrdiff_t>(m.rows());
        auto update = [&](std::size_t i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
            }
            m(i, c) = LaurentPoly::zero(m.ring());
        };
        if constexpr (Parallel) {
            std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = first; i < rows; ++i) {
                try {
                    update(static_cast<std::size_t>(i));
                } catch (...) {
#pragma omp critical
                    failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
        } else {
            for (std::ptrdiff_t i = first; i < rows; ++i) update(static_cast<std::size_t>(i));
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

constexpr std::size_t kParallelEliminationCells = 4096;

}  // namespace

namespace serial {
Echelon row_reduce(const ScalarMatrix& a) { return row_reduce_impl<false>(a); }
std::size_t bareiss_rank(const LaurentMatrix& a) { return bareiss_rank_impl<false>(a); }
}  // namespace serial

namespace parallel {
Echelon row_reduce(const ScalarMatrix& a) { return row_reduce_impl<true>(a); }
std::size_t bareiss_rank(const LaurentMatrix& a) { return bareiss_rank_impl<true>(a); }
}  // namespace parallel

Echelon row_reduce(const ScalarMatrix& a) {
    if (a.rows() * a.cols() >= kParallelEliminationCells) return parallel::row_reduce(a);
    return serial::row_reduce(a);
}

std::size_t rank_field(const ScalarMatrix& a) { return row_reduce(a).rank(); }

std::optional<std::vector<Scalar>> solve_field(const ScalarMatrix& a, std::span<const Scalar> b) {
    require_field(a.ring(), "solve_field");
    if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
    ScalarMatrix aug(a.ring(), a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    const Echelon e = row_reduce(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.ring()));
    for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivot_cols[k]] = e.reduced(k, a.cols());
    return x;
}

ScalarMatrix nullspace_field(const ScalarMatrix& a) {
    const Echelon e = row_reduce(a);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0, k = 0; c < a.cols(); ++c) {
        if (k < e.rank() && e.pivot_cols[k] == c) {
            ++k;
        } else {
            free_cols.push_back(c);
        }
    }
    ScalarMatrix basis(a.ring(), a.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        basis(free_cols[f], f) = Scalar::one(a.ring());
        for (std::size_t k = 0; k < e.rank(); ++k) basis(e.pivot_cols[k], f) = -e.reduced(k, free_cols[f]);
    }
    return basis;
}

std::size_t rank_laurent_fraction(const LaurentMatrix& a) {
    if (!a.ring().is_field()) {
        throw DomainError("rank over the fraction field of Laurent(" + a.ring().name() +
                          ") would hide torsion; use the integral verdicts instead");
    }
    if (a.rows() * a.cols() >= kParallelEliminationCells) return parallel::bareiss_rank(a);
    return serial::bareiss_rank(a);
}

namespace {

LaurentPoly cofactor_det(const LaurentMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return LaurentPoly::one(a.ring());
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    LaurentPoly det(a.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        LaurentMatrix minor(a.ring(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t k = 0, col = 0; k < n; ++k) {
                if (k != j) minor(i - 1, col++) = a(i, k);
            }
        }
        LaurentPoly term = a(0, j) * cofactor_det(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

LaurentPoly bareiss_det(LaurentMatrix m) {
    const std::size_t n = m.rows();
    LaurentPoly prev = LaurentPoly::one(m.ring());
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return LaurentPoly::zero(m.ring());
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            }
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

LaurentPoly det_laurent(const LaurentMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of non-square " + a.shape() + " matrix");
    return a.rows() <= 4 ? cofactor_det(a) : bareiss_det(a);
}

std::size_t SmithForm::rank() const { return diagonal().size(); }

std::vector<mpz_class> SmithForm::diagonal() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) {
        if (s(i, i).is_zero()) break;
        d.push_back(s(i, i).numerator());
    }
    return d;
}

namespace {

class SmithWork {
public:
    SmithWork(const ScalarMatrix& a)
        : m_(a.rows()), n_(a.cols()), a_(m_ * n_), u_(identity(m_)), uinv_(identity(m_)), v_(identity(n_)),
          vinv_(identity(n_)) {
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = a(i, j).numerator();
        }
    }

    void run() {
        const std::size_t diag = std::min(m_, n_);
        for (std::size_t t = 0; t < diag; ++t) {
            if (!move_smallest_to(t)) break;
            while (true) {
                bool clear = true;
                for (std::size_t i = t + 1; i < m_; ++i) {
                    if (at(i, t) == 0) continue;
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), at(t, t).get_mpz_t());
                    if (q != 0) row_add(i, t, -q);
                    if (at(i, t) != 0) clear = false;
                }
                for (std::size_t j = t + 1; j < n_; ++j) {
                    if (at(t, j) == 0) continue;
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), at(t, t).get_mpz_t());
                    if (q != 0) col_add(j, t, -q);
                    if (at(t, j) != 0) clear = false;
                }
                if (!clear) {
                    move_smallest_to(t);
                    continue;
                }
                std::size_t bad_row = m_;
                for (std::size_t i = t + 1; i < m_ && bad_row == m_; ++i) {
                    for (std::size_t j = t + 1; j < n_; ++j) {
                        if (!mpz_divisible_p(at(i, j).get_mpz_t(), at(t, t).get_mpz_t())) {
                            bad_row = i;
                            break;
                        }
                    }
                }
                if (bad_row == m_) break;
                row_add(t, bad_row, 1);
            }
            if (at(t, t) < 0) row_neg(t);
        }
    }

    SmithForm result(BaseRing ring) const {
        return SmithForm{to_matrix(u_, m_, m_, ring), to_matrix(a_, m_, n_, ring), to_matrix(v_, n_, n_, ring),
                         to_matrix(uinv_, m_, m_, ring), to_matrix(vinv_, n_, n_, ring)};
    }

private:
    static std::vector<mpz_class> identity(std::size_t n) {
        std::vector<mpz_class> id(n * n);
        for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
        return id;
    }

    static ScalarMatrix to_matrix(const std::vector<mpz_class>& g, std::size_t r, std::size_t c, BaseRing ring) {
        ScalarMatrix m(ring, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(ring, g[i * c + j]);
        }
        return m;
    }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    // Smallest |entry| of the block [t.., t..] moved to (t, t); false if the block is zero.
    bool move_smallest_to(std::size_t t) {
        std::size_t bi = m_;
        std::size_t bj = n_;
        for (std::size_t i = t; i < m_; ++i) {
            for (std::size_t j = t; j < n_; ++j) {
                if (at(i, j) == 0) continue;
                if (bi == m_ || mpz_cmpabs(at(i, j).get_mpz_t(), at(bi, bj).get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == m_) return false;
        if (bi != t) row_swap(bi, t);
        if (bj != t) col_swap(bj, t);
        return true;
    }

    // Row operations act on A and U from the left and on U^-1 from the right.
    void row_add(std::size_t i, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] += q * a_[src * n_ + j];
        for (std::size_t j = 0; j < m_; ++j) u_[i * m_ + j] += q * u_[src * m_ + j];
        for (std::size_t k = 0; k < m_; ++k) uinv_[k * m_ + src] -= q * uinv_[k * m_ + i];
    }
    void row_swap(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(a_[i * n_ + j], a_[k * n_ + j]);
        for (std::size_t j = 0; j < m_; ++j) std::swap(u_[i * m_ + j], u_[k * m_ + j]);
        for (std::size_t r = 0; r < m_; ++r) std::swap(uinv_[r * m_ + i], uinv_[r * m_ + k]);
    }
    void row_neg(std::size_t i) {
        for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = -a_[i * n_ + j];
        for (std::size_t j = 0; j < m_; ++j) u_[i * m_ + j] = -u_[i * m_ + j];
        for (std::size_t r = 0; r < m_; ++r) uinv_[r * m_ + i] = -uinv_[r * m_ + i];
    }
    // Column operations act on A and V from the right and on V^-1 from the left.
    void col_add(std::size_t j, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < m_; ++i) a_[i * n_ + j] += q * a_[i * n_ + src];
        for (std::size_t i = 0; i < n_; ++i) v_[i * n_ + j] += q * v_[i * n_ + src];
        for (std::size_t k = 0; k < n_; ++k) vinv_[src * n_ + k] -= q * vinv_[j * n_ + k];
    }
    void col_swap(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < m_; ++i) std::swap(a_[i * n_ + j], a_[i * n_ + k]);
        for (std::size_t i = 0; i < n_; ++i) std::swap(v_[i * n_ + j], v_[i * n_ + k]);
        for (std::size_t c = 0; c < n_; ++c) std::swap(vinv_[j * n_ + c], vinv_[k * n_ + c]);
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<mpz_class> a_;
    std::vector<mpz_class> u_;
    std::vector<mpz_class> uinv_;
    std::vector<mpz_class> v_;
    std::vector<mpz_class> vinv_;
};

}  // namespace

SmithForm smith_normal_form(const ScalarMatrix& a) {
    if (a.ring().kind() != BaseRing::Kind::ZZ) throw RingMismatch("smith_normal_form needs ZZ, got " + a.ring().name());
    SmithWork w(a);
    w.run();
    return w.result(a.ring());
}

std::optional<std::vector<Scalar>> solve_int(const ScalarMatrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
    const SmithForm snf = smith_normal_form(a);
    const auto ub = snf.u.apply(b);
    const auto d = snf.diagonal();
    std::vector<Scalar> y(a.cols(), Scalar::zero(a.ring()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < d.size()) {
            if (!mpz_divisible_p(ub[i].numerator().get_mpz_t(), d[i].get_mpz_t())) return std::nullopt;
            y[i] = Scalar(a.ring(), mpz_class(ub[i].numerator() / d[i]));
        } else if (!ub[i].is_zero()) {
            return std::nullopt;
        }
    }
    return snf.v.apply(y);
}

ScalarMatrix nullspace_int(const ScalarMatrix& a) {
    const SmithForm snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    return snf.v.block(0, r, a.cols(), a.cols() - r);
}

}  // namespace novcoh
