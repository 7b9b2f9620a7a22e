#pragma once

#include "deepdual/dataset.hpp"

#include <vector>

namespace deepdual {

/// Weights of a standard network: layers[l] is W_{l+1} (m_l x m_{l+1}).
struct StandardWeights {
    std::vector<Matrix> layers;
};

/// Weights of a parallel network: branch j carries L-1 matrices ending
/// in a column of width 1; output.row(j) is that branch's output row in
/// R^K, so forward(X) = sum_j branch_j(X) * output.row(j).
struct ParallelWeights {
    std::vector<std::vector<Matrix>> branches;
    Matrix output;  ///< m x K
};

Matrix apply_activation(const Matrix& z, Activation act);

/// f(X) = phi(...phi(X W_1)...W_{L-1}) W_L; no activation after the
/// last layer.
Matrix forward_standard(const Matrix& x, const StandardWeights& w, Activation act);

/// Branch feature phi(...phi(X W_{1,j})... w_{L-1,j}), an N-vector; for
/// ReLU the activation is also applied after the (L-1)-th layer.
Vector branch_feature(const Matrix& x, const std::vector<Matrix>& branch, Activation act);

Matrix forward_parallel(const Matrix& x, const ParallelWeights& w, Activation act);

} // namespace deepdual
