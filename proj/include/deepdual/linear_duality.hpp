#pragma once

#include "deepdual/dataset.hpp"

#include <utility>
#include <vector>

namespace deepdual {

/// Weight matrices realizing a product (or a sum of branch products),
/// the squared-Frobenius objective they achieve, and the target.
struct Factorization {
    std::vector<Matrix> weights;
    double achieved_objective = 0.0;  ///< sum_l ||W_l||_F^2
    Matrix target;
};

/// Primal/dual optimal values with the partial-dualization staircase.
struct GapReport {
    double primal_value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;
    std::vector<std::pair<int, double>> staircase;  ///< (l, D^(l)(t))
};

/// Dual matrix with the bound its constraint must satisfy.
struct DualCertificate {
    Matrix lambda;                ///< N x K
    double bound = 0.0;           ///< limit on the constraint norm
    double objective = 0.0;       ///< tr(Lambda^T Y)
    double constraint_norm = 0.0; ///< achieved constraint value
    bool feasible = false;
};

/// Optimal value of the scaled standard deep linear problem:
/// t^{-(L-2)} ||X^+ Y||_{S_{2/L}}.
double primal_value_standard_linear(const Dataset& ds, int depth, double t);

/// Optimal value of its Lagrangian dual: t^{-(L-2)} ||X^+ Y||_*.
double dual_value_standard_linear(const Dataset& ds, int depth, double t);

/// Minimal-norm value over all scales, (L/2) ||X^+ Y||_{S_{2/L}}^{2/L},
/// and the optimal scale t* = ||X^+ Y||_{S_{2/L}}^{1/L}.
std::pair<double, double> total_primal_standard_linear(const Dataset& ds, int depth);

/// Balanced factorization W_1 ... W_L = W through the given interior
/// widths (m_1..m_{L-1}, each >= rank(W)); achieves
/// sum_l ||W_l||_F^2 = L ||W||_{S_{2/L}}^{2/L} with equal per-layer norms.
Factorization balanced_factorization(const Matrix& w, int depth,
                                     const std::vector<Index>& interior_widths);

/// Partial-dualization values D^(l)(t) = t^{-(L-2)} ||X^+ Y||_{S_{2/(l+2)}}
/// for l = 0..L-2; l = L-2 is the primal, l = 0 the dual.
std::vector<std::pair<int, double>> staircase_values(const Dataset& ds, int depth, double t);

/// Shared optimal value of the parallel deep linear primal and dual,
/// (L/2) ||X^+ Y||_*.
double parallel_linear_value(const Dataset& ds, int depth);

/// Dual certificate for the standard deep linear problem: Lambda with
/// ||Lambda^T X||_2 <= t^{-(L-2)} and tr(Lambda^T Y) equal to the dual value.
DualCertificate linear_dual_certificate(const Dataset& ds, int depth, double t);

/// l(XW, Y) + (beta L / 2) ||W||_{S_{2/L}}^{2/L} with the squared
/// Frobenius loss l = 0.5 ||XW - Y||_F^2.
double equivalent_schatten_objective(const Dataset& ds, const Matrix& w, int depth,
                                     double beta);

/// Full gap report (primal, dual, staircase) for the standard problem.
GapReport linear_gap_report(const Dataset& ds, int depth, double t);

} // namespace deepdual
