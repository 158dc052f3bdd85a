#include "polar.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace ufc {

namespace {

// Shared guts of the positive p-th root family. `power` receives the
// (guaranteed positive) eigenvalues.
Mat positive_function(const Mat& p, double tol, double exponent,
                      const char* what) {
    if (p.rows() != p.cols())
        throw NumericError(std::string(what) + ": matrix is not square");
    const double herm_dev = hermitian_deviation(p);
    if (herm_dev > tol) {
        std::ostringstream os;
        os << what << ": matrix is not Hermitian (deviation " << herm_dev
           << " > tol " << tol << ")";
        throw NumericError(os.str());
    }
    const Mat sym = 0.5 * (p + p.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    if (es.info() != Eigen::Success)
        throw NumericError(std::string(what) + ": eigendecomposition failed");
    const double scale = std::max(sym.norm(), 1e-300);
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals[i] <= tol * scale) {
            std::ostringstream os;
            os << what << ": matrix is not positive definite (eigenvalue "
               << vals[i] << " <= " << tol * scale << ")";
            throw NumericError(os.str());
        }
    }
    Eigen::VectorXd powered(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        powered[i] = std::pow(vals[i], exponent);
    return es.eigenvectors() * powered.asDiagonal() *
           es.eigenvectors().adjoint();
}

} // namespace

Mat hermitian_sqrt(const Mat& p, double tol) {
    return positive_function(p, tol, 0.5, "hermitian_sqrt");
}

Mat positive_nth_root(const Mat& p, int n, double tol) {
    if (n <= 0)
        throw NumericError("positive_nth_root: n must be positive");
    return positive_function(p, tol, 1.0 / static_cast<double>(n),
                             "positive_nth_root");
}

MatrixPolar polar_decompose_matrix(const Mat& f, double tol) {
    if (f.rows() != f.cols())
        throw NumericError("polar_decompose_matrix: matrix is not square");
    Eigen::JacobiSVD<Mat> svd(f);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= tol * std::max(smax, 1e-300)) {
        std::ostringstream os;
        os << "polar_decompose_matrix: numerically singular input "
              "(condition number "
           << (smin > 0 ? smax / smin : std::numeric_limits<double>::infinity())
           << ")";
        throw NumericError(os.str());
    }
    MatrixPolar out;
    out.condition = smax / smin;
    out.positive = hermitian_sqrt(f * f.adjoint(), tol);
    out.unitary = out.positive.fullPivLu().solve(f);
    out.residual = rel_diff(out.positive * out.unitary, f);
    return out;
}

TransportReport transport_check(const Mat& x, const Mat& y, const Mat& v,
                                const Mat& w, double tol) {
    if (x.rows() != w.rows() || v.cols() != y.cols() || x.cols() != v.rows() ||
        w.cols() != y.rows())
        throw PreconditionError("transport_check: incompatible shapes");
    if (unitary_deviation(v) > tol || unitary_deviation(w) > tol)
        throw PreconditionError("transport_check: v and w must be unitary");

    TransportReport rep;
    rep.precondition_residual = rel_diff(x * v, w * y);
    if (rep.precondition_residual > 10 * tol) {
        std::ostringstream os;
        os << "transport_check: relation x v = w y does not hold (residual "
           << rep.precondition_residual << ")";
        throw PreconditionError(os.str());
    }
    const Mat ax = hermitian_sqrt(x * x.adjoint(), tol);
    const Mat ay = hermitian_sqrt(y * y.adjoint(), tol);
    rep.residual = rel_diff(ax * w, w * ay);
    rep.pass = rep.residual <= 10 * tol;
    return rep;
}

} // namespace ufc
