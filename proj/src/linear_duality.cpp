#include "deepdual/linear_duality.hpp"

#include "deepdual/matfun.hpp"

#include <cmath>

namespace deepdual {

namespace {

void require_depth(int depth) {
    if (depth < 2) throw InvalidSpec("deep linear problem: depth must be >= 2");
}

void require_scale(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidSpec("deep linear problem: scale t must be positive");
}

} // namespace

double primal_value_standard_linear(const Dataset& ds, int depth, double t) {
    require_depth(depth);
    require_scale(t);
    require_feasible(ds);
    const Matrix w = min_norm_interpolant(ds);
    return std::pow(t, -(depth - 2)) * schatten_quasi_norm(w, 2.0 / depth);
}

double dual_value_standard_linear(const Dataset& ds, int depth, double t) {
    require_depth(depth);
    require_scale(t);
    require_feasible(ds);
    return std::pow(t, -(depth - 2)) * nuclear_norm(min_norm_interpolant(ds));
}

std::pair<double, double> total_primal_standard_linear(const Dataset& ds, int depth) {
    require_depth(depth);
    require_feasible(ds);
    const double norm = schatten_quasi_norm(min_norm_interpolant(ds), 2.0 / depth);
    const double value = 0.5 * depth * std::pow(norm, 2.0 / depth);
    const double t_star = std::pow(norm, 1.0 / depth);
    return {value, t_star};
}

Factorization balanced_factorization(const Matrix& w, int depth,
                                     const std::vector<Index>& interior_widths) {
    require_depth(depth);
    require_finite(w, "balanced_factorization");
    if (interior_widths.size() != static_cast<size_t>(depth) - 1)
        throw InvalidSpec("balanced_factorization: need L-1 interior widths");

    const SvdResult svd = compute_svd(w);
    const Index r = svd.rank;
    for (Index m : interior_widths)
        if (m < r) throw InvalidSpec("balanced_factorization: width below rank of target");

    Factorization f;
    f.target = w;
    if (r == 0) {
        Index prev = w.rows();
        for (int l = 0; l < depth; ++l) {
            const Index next = l == depth - 1 ? w.cols() : interior_widths[l];
            f.weights.emplace_back(Matrix::Zero(prev, next));
            prev = next;
        }
        f.achieved_objective = 0.0;
        return f;
    }

    // Sigma^{1/L} core surrounded by orthonormal embeddings: the first
    // r coordinates of each interior space carry the factors, so every
    // layer has the same Frobenius norm ||Sigma^{1/L}||_F.
    Vector root = svd.sigma.head(r);
    for (Index i = 0; i < r; ++i) root(i) = std::pow(root(i), 1.0 / depth);
    const Matrix core = root.asDiagonal();

    auto embedding = [&](Index dim) {
        // dim x r with orthonormal columns.
        Matrix e = Matrix::Zero(dim, r);
        e.topLeftCorner(r, r) = Matrix::Identity(r, r);
        return e;
    };

    double objective = 0.0;
    Matrix left = svd.U.leftCols(r);
    for (int l = 0; l < depth; ++l) {
        const Matrix right = l == depth - 1 ? Matrix(svd.V.leftCols(r))
                                            : embedding(interior_widths[l]);
        f.weights.emplace_back(left * core * right.transpose());
        objective += f.weights.back().squaredNorm();
        left = right;
    }
    f.achieved_objective = objective;
    return f;
}

std::vector<std::pair<int, double>> staircase_values(const Dataset& ds, int depth, double t) {
    require_depth(depth);
    require_scale(t);
    require_feasible(ds);
    const Matrix w = min_norm_interpolant(ds);
    const double pre = std::pow(t, -(depth - 2));
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<size_t>(depth) - 1);
    for (int l = 0; l <= depth - 2; ++l)
        out.emplace_back(l, pre * schatten_quasi_norm(w, 2.0 / (l + 2)));
    return out;
}

double parallel_linear_value(const Dataset& ds, int depth) {
    require_depth(depth);
    require_feasible(ds);
    return 0.5 * depth * nuclear_norm(min_norm_interpolant(ds));
}

DualCertificate linear_dual_certificate(const Dataset& ds, int depth, double t) {
    require_depth(depth);
    require_scale(t);
    require_feasible(ds);
    const Matrix w = min_norm_interpolant(ds);
    const SvdResult svd = compute_svd(w);
    const double bound = std::pow(t, -(depth - 2));

    DualCertificate cert;
    cert.bound = bound;
    if (svd.rank == 0) {
        cert.lambda = Matrix::Zero(ds.Y.rows(), ds.Y.cols());
        cert.objective = 0.0;
        cert.constraint_norm = 0.0;
        cert.feasible = true;
        return cert;
    }

    // Lambda = bound * (X^+)^T U V^T aligns tr(Lambda^T Y) with the
    // singular values of X^+ Y, saturating Von Neumann's inequality;
    // U lies in the row space of X so Lambda^T X = bound * V U^T.
    const Matrix uv = svd.U.leftCols(svd.rank) * svd.V.leftCols(svd.rank).transpose();
    cert.lambda = bound * pseudo_inverse(ds.X).transpose() * uv;
    cert.objective = (cert.lambda.transpose() * ds.Y).trace();
    cert.constraint_norm = spectral_norm(cert.lambda.transpose() * ds.X);
    cert.feasible = cert.constraint_norm <= bound * (1.0 + 1e-8);
    return cert;
}

double equivalent_schatten_objective(const Dataset& ds, const Matrix& w, int depth,
                                     double beta) {
    require_depth(depth);
    if (!(beta > 0.0)) throw InvalidSpec("equivalent_schatten_objective: beta must be positive");
    require_finite(w, "equivalent_schatten_objective");
    if (ds.X.cols() != w.rows() || ds.Y.cols() != w.cols() || ds.X.rows() != ds.Y.rows())
        throw InvalidInput("equivalent_schatten_objective: shape mismatch");
    const double loss = 0.5 * (ds.X * w - ds.Y).squaredNorm();
    const double reg = 0.5 * beta * depth *
                       std::pow(schatten_quasi_norm(w, 2.0 / depth), 2.0 / depth);
    return loss + reg;
}

GapReport linear_gap_report(const Dataset& ds, int depth, double t) {
    GapReport report;
    report.primal_value = primal_value_standard_linear(ds, depth, t);
    report.dual_value = dual_value_standard_linear(ds, depth, t);
    report.gap = report.primal_value - report.dual_value;
    report.staircase = staircase_values(ds, depth, t);
    return report;
}

} // namespace deepdual
