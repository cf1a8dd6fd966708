#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novcoh/complex.hpp"
#include "novcoh/series.hpp"

namespace novcoh {

/// Which variable the torus uses: h - z (the usual torus) or h - z^-1 (the mirror).
enum class TorusVar { Z, ZInv };

std::string to_string(TorusVar v);
TorusVar parse_var(std::string_view text);

/// T(h) = Cone(h (x) id - id (x) z) over R[z, z^-1]; T(h)^n = C^{n+1} + C^n with
/// differential [[-d, 0], [h - z, d]].  Throws DomainError unless h is a chain
/// endomorphism of c.
LaurentComplex mapping_torus(const Complex& c, const Map& h, TorusVar var = TorusVar::Z);

/// For a complex known to be a cone: in degree n the first x_rank(n) basis vectors
/// belong to the source summand X^{n+1}.
struct ConeLayout {
    std::map<int, std::size_t> x_ranks;

    std::size_t x_rank(int n) const;
    friend bool operator==(const ConeLayout&, const ConeLayout&) = default;
};

/// Layout of mapping_torus(c, h, *): x_rank(n) = rank C^{n+1}.
ConeLayout torus_layout(const Complex& c);

/// Cohomology over k((z)) or k((z^-1)) for k a field.  Ranks are fraction-field ranks,
/// so the report does not depend on `dir`.
CohomologyReport novikov_cohomology_field(const LaurentComplex& b, SeriesDir dir);

enum class VerdictStatus { Acyclic, NonAcyclic, Inconclusive };

std::string to_string(VerdictStatus s);

/// det of one degreewise map and its pivot in the chosen Novikov ring.
struct UnitCertificate {
    int degree;
    LaurentPoly det;
    LaurentPoly::Exponent pivot_exp;
    Scalar pivot_coeff;
    bool unit;
};

/// Field route: rank of the incoming and outgoing differential at this degree.
struct RankCertificate {
    std::size_t module_rank;
    std::size_t rank_in;
    std::size_t rank_out;
};

struct DegreeVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::string reason;
    std::vector<UnitCertificate> units;
    std::optional<RankCertificate> ranks;
    /// For NonAcyclic degrees: the nonzero cohomology, e.g. "ZZ((z))/(2 - z)".
    std::string presentation;
};

struct NovikovVerdict {
    SeriesDir dir = SeriesDir::Lt;
    std::map<int, DegreeVerdict> degrees;

    bool acyclic() const;
    bool any(VerdictStatus s) const;
};

/// Certified acyclicity over ZZ((z)) (Lt) or ZZ((z^-1)) (Rt).
///   (a) Two-term complexes with a square differential A are decided exactly: acyclic
///       iff det A is a unit of the Novikov ring.
///   (b) With a cone layout whose degreewise maps g are square with unit determinant,
///       the complex is the cone of an isomorphism and hence acyclic.
///   (c) Degrees carrying a free summand with zero differentials on both sides are
///       non-acyclic.
/// Everything else is Inconclusive.
NovikovVerdict novikov_verdict_int(const LaurentComplex& b, SeriesDir dir,
                                   const std::optional<ConeLayout>& layout = std::nullopt);

/// Field route: Acyclic or NonAcyclic per degree with rank certificates.
NovikovVerdict novikov_verdict_field(const LaurentComplex& b, SeriesDir dir);

struct RanickiResult {
    NovikovVerdict pos;  // over R((z))
    NovikovVerdict neg;  // over R((z^-1))
    /// False iff some degree is NonAcyclic in either direction.  Vanishing is only a
    /// necessary condition for finite domination; true never confirms it.
    bool finitely_dominated_possible;
};

RanickiResult ranicki_check(const LaurentComplex& b, const std::optional<ConeLayout>& layout = std::nullopt);

// ---------------------------------------------------------------------------
// M (x)_R R((z)) -> M((z)) for free and finitely presented M over ZZ.

/// e_j (x) f_j.
struct TensorTerm {
    std::size_t basis_index;
    SeriesWindow series;
};

/// Sum of the terms reassembled coefficientwise: z^i -> (r_{i1}, ..., r_{it}).
VectorSeries phi_free(std::size_t rank, const std::vector<TensorTerm>& x);

/// Coordinate projection; inverse of phi_free.
std::vector<TensorTerm> phi_free_inverse(const VectorSeries& s);

/// M = ZZ^t / (row space of an s x t relation matrix).
class FpPresentation {
public:
    FpPresentation(ScalarMatrix relations, std::size_t generators);
    explicit FpPresentation(ScalarMatrix relations);

    const ScalarMatrix& relations() const { return relations_; }
    std::size_t generators() const { return generators_; }

    /// Orders of the cyclic summands: invariant factors > 1 then 0 for each free summand.
    const std::vector<mpz_class>& summand_orders() const { return orders_; }

    /// Canonical coordinates of the class of a representative in ZZ^t: one entry per
    /// summand, torsion entries reduced into [0, d).
    Vector canonical(const Vector& rep) const;
    /// Representative in ZZ^t of the k-th summand generator.
    Vector generator(std::size_t k) const;

private:
    ScalarMatrix relations_;
    std::size_t generators_;
    SmithForm snf_;
    std::vector<std::size_t> summand_rows_;  // Smith coordinate of each summand
    std::vector<mpz_class> orders_;
};

/// m_j (x) f_j with m_j given by a representative in ZZ^t.
struct ModuleTensorTerm {
    Vector rep;
    SeriesWindow series;
};

/// Sum_j m_j r_{ij} per exponent, as representatives in ZZ^t.
VectorSeries phi_fp(const FpPresentation& m, const std::vector<ModuleTensorTerm>& x, SeriesDir dir);

/// Coefficientwise canonical coordinates.
VectorSeries canonical_series(const FpPresentation& m, const VectorSeries& reps);

/// Element of M (x) ZZ((z)) mapping to a series given in canonical coordinates:
/// generator_k (x) (k-th coordinate series).
std::vector<ModuleTensorTerm> phi_fp_inverse(const FpPresentation& m, const VectorSeries& canonical);

}  // namespace novcoh
