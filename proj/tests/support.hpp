#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "novcoh/bicomplex.hpp"
#include "novcoh/complex.hpp"
#include "novcoh/linalg.hpp"
#include "novcoh/novikov.hpp"
#include "novcoh/series.hpp"

namespace test {

using namespace novcoh;

inline const BaseRing ZZ = BaseRing::integers();
inline const BaseRing QQ = BaseRing::rationals();
inline BaseRing F(unsigned p) { return BaseRing::prime_field(p); }

inline Scalar s(const BaseRing& r, long v) { return Scalar(r, v); }

inline ScalarMatrix mat(const BaseRing& r, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (auto row : rows) v.emplace_back(row);
    return integer_matrix(v, r);
}

inline LaurentPoly lp(const BaseRing& r, std::initializer_list<std::pair<LaurentPoly::Exponent, long>> terms) {
    return LaurentPoly(r, std::vector<std::pair<LaurentPoly::Exponent, long>>(terms));
}

inline Vector vec(const BaseRing& r, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(r, x);
    return v;
}

/// R in degree n.
inline Complex point(const BaseRing& r, int n = 0) { return Complex(r, n, {1}); }

inline Map scalar_map(const Complex& c, long k) { return Map::scalar(c, Scalar(c.ring(), k)); }

inline std::string fixture(const std::string& name) { return std::string(NOVCOH_FIXTURES) + "/" + name; }

}  // namespace test
