#pragma once

#include "linalg.hpp"

namespace ufc {

// Unique positive square root of a Hermitian positive definite matrix,
// computed by a self-adjoint eigendecomposition. Throws NumericError when the
// input is not Hermitian within tol or has an eigenvalue <= tol * ||P||.
Mat hermitian_sqrt(const Mat& p, double tol = kDefaultTol);

// Unique positive n-th root; same domain restrictions as hermitian_sqrt.
Mat positive_nth_root(const Mat& p, int n, double tol = kDefaultTol);

struct MatrixPolar {
    Mat unitary;    // u
    Mat positive;   // p = sqrt(f f^dagger)
    double residual;  // rel_diff(p * u, f)
    double condition; // singular-value condition number of the input
};

// Polar decomposition of an invertible matrix, positive factor on the left:
// f = p * u with p = hermitian_sqrt(f f^dagger) and u unitary.
MatrixPolar polar_decompose_matrix(const Mat& f, double tol = kDefaultTol);

struct TransportReport {
    bool pass;
    double residual;              // | |x| w - w |y| | relative
    double precondition_residual; // | x v - w y | relative
};

// Checks the square-root transport identity: given unitary v, w and the
// relation x v = w y, the positive parts |x| = sqrt(x x^dagger) and
// |y| = sqrt(y y^dagger) satisfy |x| w = w |y|. A violated relation x v = w y
// is a precondition error, not a failure of the identity.
TransportReport transport_check(const Mat& x, const Mat& y, const Mat& v,
                                const Mat& w, double tol = kDefaultTol);

} // namespace ufc
