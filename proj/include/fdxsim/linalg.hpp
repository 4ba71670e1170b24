// Complex dense-matrix primitives shared by the whole simulator:
// SVD, Hermitian positive-definite solve, and a few scalar helpers.
// Everything is double precision; matrices are Eigen column-vector/dense types.

#ifndef FDXSIM_LINALG_HPP
#define FDXSIM_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace fdx {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Result of svd(): A = u * s.asDiagonal() * v.adjoint(), thin factors,
/// singular values sorted descending.
struct SvdResult {
    CMat u;
    RVec s;
    CMat v;
};

/// True if every entry of a has finite real and imaginary parts.
bool is_finite(const CMat& a);

/// Thin singular value decomposition. Throws std::invalid_argument on
/// non-finite input.
SvdResult svd(const CMat& a);

/// Solve a * x = b for Hermitian positive definite a via Cholesky.
/// Throws std::invalid_argument if a is not Hermitian (tolerance 1e-10
/// relative to the largest entry) and std::runtime_error if the
/// factorization fails (a not positive definite).
CMat solve_hermitian(const CMat& a, const CMat& b);

/// 10^(db/10). db = -inf maps to 0.
double db_to_linear(double db);

}  // namespace fdx

#endif
