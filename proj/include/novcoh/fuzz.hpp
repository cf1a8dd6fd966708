#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "novcoh/bicomplex.hpp"
#include "novcoh/complex.hpp"

namespace novcoh::fuzz {

/// std::mt19937_64 is fully specified; draws below avoid the library distributions,
/// whose output is implementation-defined.
using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t n);  // uniform-ish in [0, n)
long draw_range(Rng& rng, long lo, long hi);    // [lo, hi]
Scalar random_scalar(Rng& rng, const BaseRing& ring, long bound = 3);
ScalarMatrix random_matrix(Rng& rng, const BaseRing& ring, std::size_t rows, std::size_t cols, long bound = 3);

/// P and P^-1 built from random elementary operations (unimodular over ZZ).
struct Invertible {
    ScalarMatrix p;
    ScalarMatrix p_inv;
};
Invertible random_invertible(Rng& rng, const BaseRing& ring, std::size_t n, std::size_t steps = 0);

struct Params {
    RingTag ring{BaseRing::prime_field(5), false};
    int lo = -2;
    int hi = 2;
    std::size_t max_rank = 3;
};

/// Direct sum of two-term pieces R^a -> R^b and zero summands, conjugated degreewise by
/// random invertible matrices.
Complex random_complex(Rng& rng, const BaseRing& ring, int lo, int hi, std::size_t max_rank);

/// Random element of the module of chain endomorphisms: a small combination of a basis of
/// the solutions of d h = h d.
Map random_chain_map(Rng& rng, const Complex& c);

/// Field only: h + c id for random h and c, resampled until it is a quasi-isomorphism.
Map random_quasi_iso(Rng& rng, const Complex& c);

struct Sample {
    Complex c;
    Map h;
};

/// ZZ: C = X^{+m} with h = M (x) id for M in GL_m(ZZ), then conjugated by unimodular
/// matrices.  Every component of h has determinant +-1.
Sample random_unimodular_iso(Rng& rng, int lo, int hi, std::size_t max_rank);

/// Deterministic (complex, endomorphism) pair for a seed.  Throws DomainError for
/// Laurent rings and inverted windows.
Sample generate(std::uint64_t seed, const Params& params);

/// Random cocycle of Tot D in degree n whose columns in `zero_cols` vanish.
TotCocycle random_tot_cocycle(Rng& rng, const DoubleComplexWindow& d, int n, const std::set<int>& zero_cols = {});

}  // namespace novcoh::fuzz
