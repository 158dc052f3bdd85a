#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ufc {

// Default relative Frobenius-norm tolerance; datasets can override it.
constexpr double kDefaultTol = 1e-9;

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

// Relative Frobenius distance, guarded so exact zeros compare cleanly.
inline double rel_diff(const Mat& a, const Mat& b) {
    const double scale = std::max({a.norm(), b.norm(), 1.0});
    return (a - b).norm() / scale;
}

// Deviation of b from unitarity, normalized per dimension so a rank-1 and a
// rank-6 block report on the same scale.
inline double unitary_deviation(const Mat& b) {
    const Eigen::Index n = b.cols();
    Mat gram = b.adjoint() * b;
    gram.diagonal().array() -= 1.0;
    return gram.norm() / std::sqrt(static_cast<double>(n));
}

inline double hermitian_deviation(const Mat& m) {
    const double scale = std::max(m.norm(), 1.0);
    return (m - m.adjoint()).norm() / scale;
}

} // namespace ufc
