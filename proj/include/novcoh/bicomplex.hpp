#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novcoh/complex.hpp"

namespace novcoh {

/// How D^{p,q} = C^{p+q+1} + C^{p+q} splits when the window came from a mapping torus.
struct TorusLayout {
    int c_lo = 0;
    std::vector<std::size_t> c_ranks;

    std::size_t c_rank(int m) const;
    friend bool operator==(const TorusLayout&, const TorusLayout&) = default;
};

/// Finite window [p_lo, p_hi] x [q_lo, q_hi] of a double complex over a base ring.
/// dh(p, q) : D^{p,q} -> D^{p+1,q}, dv(p, q) : D^{p,q} -> D^{p,q+1}; maps leaving the
/// window have zero rows. Zero blocks are not stored, so == compares content.
class DoubleComplexWindow {
public:
    DoubleComplexWindow(BaseRing ring, int p_lo, int p_hi, int q_lo, int q_hi);

    const BaseRing& ring() const { return ring_; }
    int p_lo() const { return p_lo_; }
    int p_hi() const { return p_hi_; }
    int q_lo() const { return q_lo_; }
    int q_hi() const { return q_hi_; }
    bool contains(int p, int q) const { return p >= p_lo_ && p <= p_hi_ && q >= q_lo_ && q <= q_hi_; }

    std::size_t rank(int p, int q) const;
    /// Resets the differentials touching (p, q).
    void set_rank(int p, int q, std::size_t r);
    ScalarMatrix dh(int p, int q) const;
    ScalarMatrix dv(int p, int q) const;
    void set_dh(int p, int q, ScalarMatrix m);
    void set_dv(int p, int q, ScalarMatrix m);

    const std::optional<TorusLayout>& torus() const { return torus_; }
    void set_torus(TorusLayout layout) { torus_ = std::move(layout); }

    friend bool operator==(const DoubleComplexWindow&, const DoubleComplexWindow&) = default;

private:
    using Key = std::pair<int, int>;

    BaseRing ring_;
    int p_lo_;
    int p_hi_;
    int q_lo_;
    int q_hi_;
    std::map<Key, std::size_t> ranks_;
    std::map<Key, ScalarMatrix> dh_;
    std::map<Key, ScalarMatrix> dv_;
    std::optional<TorusLayout> torus_;
};

/// Offending square or position of a double-complex law.
struct SquareViolation {
    int p;
    int q;
    std::string what;
};

namespace serial {
std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d);
}
namespace parallel {
/// Same verdict as serial::check_laws (first violation in (p, q) order); squares are
/// checked concurrently.
std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d);
}

/// dh o dh = 0, dv o dv = 0 and dh o dv = -dv o dh everywhere in the window.
std::optional<SquareViolation> check_laws(const DoubleComplexWindow& d);

/// Builds a double complex from columns, multiplying the differential of column p by
/// (-1)^p.  `dh` maps (p, q) to D^{p,q} -> D^{p+1,q} and must commute with the untwisted
/// column differentials.  Throws DomainError naming the first bad square.
DoubleComplexWindow from_columns(const std::map<int, Complex>& cols, const std::map<std::pair<int, int>, ScalarMatrix>& dh);

enum class TotChoice { Sum, Prod, Lt, Rt };

std::string to_string(TotChoice c);

/// (Tot D)^n = sum over p of D^{p, n-p} inside the window, blocks ordered by p, with
/// d = dh + dv.  On a finite window all four choices give the same complex; the tag
/// only says how the window edges are read.
Complex totalise(const DoubleComplexWindow& d, TotChoice choice);

/// Offset of the D^{p, n-p} block inside (Tot D)^n.
std::size_t tot_offset(const DoubleComplexWindow& d, int n, int p);

/// Double complex D^{p,q} = C^{p+q+1} + C^{p+q} with dh(x, y) = (0, -x) and
/// dv(x, y) = (-d x, h x + d y), on columns [p_lo, p_hi] and every row where it is
/// nonzero.  Throws DomainError unless h is a chain endomorphism of c.
DoubleComplexWindow torus_bicomplex(const Complex& c, const Map& h, int p_lo, int p_hi);

/// Element of (Tot D)^n given column by column; absent columns are zero.
struct TotCocycle {
    int n = 0;
    std::map<int, Vector> comps;

    friend bool operator==(const TotCocycle&, const TotCocycle&) = default;
};

/// y with d(y) = x, as constructed column by column.  `verified_lo..verified_hi` are
/// the columns i at which dv(y_i) + dh(y_{i-1}) = x_i was re-checked.
struct Witness {
    int n = 0;  // degree of the cocycle; terms live in degree n - 1
    std::map<int, Vector> terms;
    int verified_lo = 0;
    int verified_hi = -1;

    friend bool operator==(const Witness&, const Witness&) = default;
};

class ContractionError : public DomainError {
public:
    enum class Reason { NotCocycle, NotExact, NoPreimage };

    ContractionError(Reason reason, int column, const std::string& what)
        : DomainError(what), reason_(reason), column_(column) {}

    Reason reason() const { return reason_; }
    int column() const { return column_; }

private:
    Reason reason_;
    int column_;
};

/// Contraction for exact columns, read as a left truncated product: x
/// vanishes left of the window.  Solves dv(y_i) = x_i - dh(y_{i-1}) for increasing i.
/// Over a field preimages come from solve_field; over ZZ from Smith-form solving.
/// The rightmost column is attempted but is allowed to fail silently (truncation);
/// every other failure throws ContractionError.
Witness contract_lt(const DoubleComplexWindow& d, const TotCocycle& x);

/// Dual contraction for exact rows, read as a right truncated product: x vanishes
/// right of the window, y_{p_hi} = 0, and dh(y_{i-1}) = x_i - dv(y_i) is solved for
/// decreasing i.  Torus windows use the closed-form preimage (a, b) -> (-b, 0).
/// Verified on [p_lo + 1, p_hi].
Witness contract_rt(const DoubleComplexWindow& d, const TotCocycle& x);

/// Recomputes dv(y_i) + dh(y_{i-1}) - x_i on every column of the verified range with
/// plain matrix products; returns the first failing column.
std::optional<int> recheck_witness(const DoubleComplexWindow& d, const TotCocycle& x, const Witness& w);

/// First block where Tot D disagrees with the z-expansion of a Laurent complex.
struct BlockMismatch {
    int n;
    int from_p;
    int to_p;
    std::string what;
};

/// Compares totalise(d) against t, whose z^k coefficient must appear as the block from
/// column p to column p + k, for every degree and every pair of columns in the window.
std::optional<BlockMismatch> compare_with_expansion(const DoubleComplexWindow& d, const LaurentComplex& t);

/// Tot_sum of torus_bicomplex(c, h, window) against the mapping torus T(h).
std::optional<BlockMismatch> check_tot_sum_is_torus(const Complex& c, const Map& h, int p_lo, int p_hi);

}  // namespace novcoh
