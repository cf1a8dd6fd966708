#pragma once

#include <optional>
#include <vector>

#include "novcoh/matrix.hpp"

namespace novcoh {

/// Reduced row echelon form over a field with the pivot columns that produced it.
/// Pivots are chosen by smallest row index within the leftmost usable column.
struct Echelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

namespace serial {
Echelon row_reduce(const ScalarMatrix& a);
std::size_t bareiss_rank(const LaurentMatrix& a);
}  // namespace serial

namespace parallel {
/// Same result as serial::row_reduce; the elimination of each pivot column runs
/// row-parallel.
Echelon row_reduce(const ScalarMatrix& a);
std::size_t bareiss_rank(const LaurentMatrix& a);
}  // namespace parallel

/// Dispatches to the parallel kernel for large inputs.  Throws DomainError unless the
/// ring is a field.
Echelon row_reduce(const ScalarMatrix& a);

std::size_t rank_field(const ScalarMatrix& a);

/// Some x with A x = b, free variables zeroed, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_field(const ScalarMatrix& a, std::span<const Scalar> b);

/// Basis of ker A as the columns of a cols x nullity matrix.
ScalarMatrix nullspace_field(const ScalarMatrix& a);

/// Rank over the fraction field of k[z, z^-1] for k a field.  Because every minor is a
/// Laurent polynomial and a nonzero polynomial stays nonzero in k((z)) and k((z^-1)),
/// this is also the rank over both Novikov fields.
std::size_t rank_laurent_fraction(const LaurentMatrix& a);

/// Exact determinant: cofactor expansion up to 4 x 4, fraction-free elimination above.
LaurentPoly det_laurent(const LaurentMatrix& a);

/// U * A * V = S with U, V unimodular and S = diag(d1 | d2 | ... | dr, 0, ...).
struct SmithForm {
    ScalarMatrix u;
    ScalarMatrix s;
    ScalarMatrix v;
    ScalarMatrix u_inv;
    ScalarMatrix v_inv;

    std::size_t rank() const;
    /// Nonzero diagonal entries in order.
    std::vector<mpz_class> diagonal() const;
};

/// Smith normal form over ZZ.  Pivot rule: smallest absolute nonzero entry of the
/// remaining block, first in row-major order among ties.
SmithForm smith_normal_form(const ScalarMatrix& a);

/// Integer solution of A x = b with free coordinates (in Smith coordinates) zeroed.
std::optional<std::vector<Scalar>> solve_int(const ScalarMatrix& a, std::span<const Scalar> b);

/// Z-basis of ker A as the columns of a matrix.
ScalarMatrix nullspace_int(const ScalarMatrix& a);

}  // namespace novcoh
