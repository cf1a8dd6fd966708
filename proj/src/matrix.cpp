#include "novcoh/matrix.hpp"

namespace novcoh {

LaurentMatrix to_laurent(const ScalarMatrix& m) {
    LaurentMatrix r(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = LaurentPoly(m(i, j));
    }
    return r;
}

ScalarMatrix map_base(const ScalarMatrix& m, BaseRing target) {
    ScalarMatrix r(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = map_scalar(m(i, j), target);
    }
    return r;
}

LaurentMatrix map_base(const LaurentMatrix& m, BaseRing target) {
    LaurentMatrix r(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).mapped(target);
    }
    return r;
}

ScalarMatrix evaluate(const LaurentMatrix& m, const Scalar& c) {
    ScalarMatrix r(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(c);
    }
    return r;
}

ScalarMatrix coefficient(const LaurentMatrix& m, LaurentPoly::Exponent e) {
    ScalarMatrix r(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(e);
    }
    return r;
}

ScalarMatrix integer_matrix(const std::vector<std::vector<long>>& rows, BaseRing ring) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ScalarMatrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged matrix literal");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(ring, rows[i][j]);
    }
    return m;
}

}  // namespace novcoh
