#include "deepdual/matfun.hpp"

#include <cmath>

namespace deepdual {

SvdResult compute_svd(const Matrix& a) {
    require_finite(a, "compute_svd");
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult r;
    r.U = svd.matrixU();
    r.sigma = svd.singularValues();
    r.V = svd.matrixV();
    const double cutoff = r.sigma.size() > 0 ? kRankTol * r.sigma(0) : 0.0;
    Index rank = 0;
    for (Index i = 0; i < r.sigma.size(); ++i)
        if (r.sigma(i) > cutoff && r.sigma(i) > 0.0) ++rank;
    r.rank = rank;
    return r;
}

double schatten_quasi_norm(const Matrix& a, double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw InvalidInput("schatten_quasi_norm: p must be a positive real");
    const SvdResult svd = compute_svd(a);
    if (svd.rank == 0) return 0.0;
    double sum = 0.0;
    for (Index i = 0; i < svd.rank; ++i)
        sum += std::pow(svd.sigma(i), p);
    return std::pow(sum, 1.0 / p);
}

double nuclear_norm(const Matrix& a) { return schatten_quasi_norm(a, 1.0); }

double spectral_norm(const Matrix& a) {
    const SvdResult svd = compute_svd(a);
    return svd.sigma.size() > 0 ? svd.sigma(0) : 0.0;
}

Matrix pseudo_inverse(const Matrix& a) {
    const SvdResult svd = compute_svd(a);
    Matrix pinv = Matrix::Zero(a.cols(), a.rows());
    for (Index i = 0; i < svd.rank; ++i)
        pinv += svd.V.col(i) * (1.0 / svd.sigma(i)) * svd.U.col(i).transpose();
    return pinv;
}

Matrix positive_part(const Matrix& a) { return a.cwiseMax(0.0); }

bool diag_eig_power_inequality_check(const Matrix& a, double p) {
    require_finite(a, "diag_eig_power_inequality_check");
    if (a.rows() != a.cols())
        throw InvalidInput("diag_eig_power_inequality_check: matrix must be square");
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("diag_eig_power_inequality_check: p must lie in (0,1)");
    const Matrix sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    if (eig.info() != Eigen::Success)
        throw NumericalFailure("diag_eig_power_inequality_check: eigendecomposition failed");
    const Vector lam = eig.eigenvalues();
    if (lam.minCoeff() < -1e-8)
        throw InvalidInput("diag_eig_power_inequality_check: matrix is not PSD");
    double lhs = 0.0, rhs = 0.0;
    for (Index i = 0; i < sym.rows(); ++i)
        lhs += std::pow(std::max(sym(i, i), 0.0), p);
    for (Index i = 0; i < lam.size(); ++i)
        rhs += std::pow(std::max(lam(i), 0.0), p);
    return lhs >= rhs - 1e-10;
}

bool projection_shrinks_singvals_check(const Matrix& p, const Matrix& w) {
    require_finite(p, "projection_shrinks_singvals_check");
    require_finite(w, "projection_shrinks_singvals_check");
    if (p.rows() != p.cols())
        throw InvalidInput("projection_shrinks_singvals_check: P must be square");
    if ((p - p.transpose()).norm() > 1e-8 * std::max(1.0, p.norm()))
        throw InvalidInput("projection_shrinks_singvals_check: P must be symmetric");
    if ((p * p - p).norm() > 1e-8)
        throw InvalidInput("projection_shrinks_singvals_check: P is not idempotent");
    if (p.cols() != w.rows())
        throw InvalidInput("projection_shrinks_singvals_check: shape mismatch");
    const Vector sw = compute_svd(w).sigma;
    const Vector spw = compute_svd(p * w).sigma;
    for (Index i = 0; i < spw.size() && i < sw.size(); ++i)
        if (spw(i) > sw(i) + 1e-10) return false;
    return true;
}

} // namespace deepdual
