#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "novcoh/linalg.hpp"

namespace novcoh {

/// Bounded cochain complex of finitely generated free modules with chosen bases.
/// Degrees outside [lo, hi] are zero.  d(n) is the matrix of d^n : C^n -> C^{n+1}.
template <class E>
class CochainComplex {
public:
    /// Complex with the given ranks in degrees lo, lo+1, ... and zero differentials.
    CochainComplex(BaseRing ring, int lo, std::vector<std::size_t> ranks);
    /// The zero complex.
    explicit CochainComplex(BaseRing ring) : CochainComplex(ring, 0, {}) {}

    const BaseRing& ring() const { return ring_; }
    RingTag tag() const { return RingTag{ring_, is_laurent_v<E>}; }
    int lo() const { return lo_; }
    /// lo() - 1 for the zero complex.
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }

    std::size_t rank(int n) const;
    std::size_t total_rank() const;
    /// Zero matrix of the right shape outside the stored range.
    Matrix<E> d(int n) const;
    /// Throws DomainError when n is out of range or the shape does not match.
    void set_d(int n, Matrix<E> m);

    friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

private:
    BaseRing ring_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<Matrix<E>> diffs_;  // d^lo .. d^(hi-1)
};

using Complex = CochainComplex<Scalar>;
using LaurentComplex = CochainComplex<LaurentPoly>;

/// Cochain map source -> target, one matrix per degree.
template <class E>
class ChainMap {
public:
    ChainMap(CochainComplex<E> source, CochainComplex<E> target);

    const CochainComplex<E>& source() const { return source_; }
    const CochainComplex<E>& target() const { return target_; }
    const BaseRing& ring() const { return source_.ring(); }

    /// Zero matrix of the right shape where nothing was set.
    Matrix<E> comp(int n) const;
    void set_comp(int n, Matrix<E> m);
    int lo() const { return std::min(source_.lo(), target_.lo()); }
    int hi() const { return std::max(source_.hi(), target_.hi()); }

    static ChainMap identity(const CochainComplex<E>& c);
    /// c * id.
    static ChainMap scalar(const CochainComplex<E>& c, const E& factor);

private:
    CochainComplex<E> source_;
    CochainComplex<E> target_;
    std::map<int, Matrix<E>> comps_;
};

using Map = ChainMap<Scalar>;
using LaurentMap = ChainMap<LaurentPoly>;

/// First failing degree and what failed.
struct Violation {
    int degree;
    std::string what;
};

template <class E>
std::optional<Violation> validate_complex(const CochainComplex<E>& c);

/// Checks target.d(n) * f(n) == f(n+1) * source.d(n) in every degree.
template <class E>
std::optional<Violation> validate_chain_map(const ChainMap<E>& f);

/// (C[k])^n = C^{n+k} with differential (-1)^k d.
template <class E>
CochainComplex<E> shift(const CochainComplex<E>& c, int k);

/// Cone(f)^n = X^{n+1} + Y^n with differential [[-d_X, 0], [f, d_Y]].
template <class E>
CochainComplex<E> cone(const ChainMap<E>& f);

template <class E>
CochainComplex<E> direct_sum(const CochainComplex<E>& a, const CochainComplex<E>& b);

template <class E>
ChainMap<E> compose(const ChainMap<E>& g, const ChainMap<E>& f);

template <class E>
ChainMap<E> operator+(const ChainMap<E>& f, const ChainMap<E>& g);

/// Cohomology in one degree: free rank plus invariant factors > 1 (only over ZZ).
struct DegreeCohomology {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const DegreeCohomology&, const DegreeCohomology&) = default;
};

struct CohomologyReport {
    bool over_field = true;
    std::map<int, DegreeCohomology> degrees;  // covers [lo, hi] of the complex

    bool is_zero() const;
    std::size_t dim(int n) const;
    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/// dim H^n = rank C^n - rank d^n - rank d^{n-1}.  Throws DomainError off a field.
CohomologyReport cohomology_field(const Complex& c);

/// Free rank and torsion of each H^n from Smith forms of the differentials.
CohomologyReport cohomology_int(const Complex& c);

/// Acyclicity of cone(h).  Over ZZ this is not decided and DomainError is thrown.
bool is_quasi_iso(const Map& h);

long euler_characteristic(const Complex& c);

/// Exactness of X -(incoming)-> Y -(outgoing)-> Z at Y.  Over a field by ranks, over
/// ZZ additionally requiring the image of `incoming` to be saturated (all invariant
/// factors 1).  Assumes outgoing * incoming = 0.
bool is_exact_at(const ScalarMatrix& incoming, const ScalarMatrix& outgoing);

Complex base_change(const Complex& c, BaseRing target);
LaurentComplex base_change(const LaurentComplex& c, BaseRing target);
Map base_change(const Map& f, BaseRing target);
/// - (x) R[z, z^-1]: entries become constant Laurent polynomials.
LaurentComplex to_laurent(const Complex& c);
LaurentMap to_laurent(const Map& f);

/// A complex over either kind of ring, as read from a file.
using AnyComplex = std::variant<Complex, LaurentComplex>;

RingTag tag_of(const AnyComplex& c);
/// Applies the canonical map to `target`: ZZ -> QQ, ZZ -> Fp, R -> R[z, z^-1] and
/// the same maps on Laurent coefficients.  Throws DomainError when none exists.
AnyComplex base_change(const AnyComplex& c, RingTag target);

}  // namespace novcoh
