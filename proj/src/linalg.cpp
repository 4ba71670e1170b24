#include "fdxsim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace fdx {

bool is_finite(const CMat& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const cplx& z = a(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

SvdResult svd(const CMat& a) {
    if (a.rows() < 1 || a.cols() < 1) throw std::invalid_argument("svd: empty matrix");
    if (!is_finite(a)) throw std::invalid_argument("svd: non-finite input");
    // Jacobi SVD: matrices here are small (RF-chain sized, at most the
    // antenna count), accuracy matters more than speed.
    Eigen::JacobiSVD<CMat> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

CMat solve_hermitian(const CMat& a, const CMat& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_hermitian: matrix not square");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_hermitian: dimension mismatch");
    if (!is_finite(a) || !is_finite(b)) throw std::invalid_argument("solve_hermitian: non-finite input");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("solve_hermitian: matrix not Hermitian");
    Eigen::LLT<CMat> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("solve_hermitian: Cholesky factorization failed");
    return llt.solve(b);
}

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

}  // namespace fdx
