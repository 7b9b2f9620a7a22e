#include "deepdual/network.hpp"

namespace deepdual {

Matrix apply_activation(const Matrix& z, Activation act) {
    return act == Activation::relu ? Matrix(z.cwiseMax(0.0)) : z;
}

Matrix forward_standard(const Matrix& x, const StandardWeights& w, Activation act) {
    if (w.layers.empty()) throw InvalidSpec("forward_standard: no layers");
    Matrix a = x;
    for (size_t l = 0; l + 1 < w.layers.size(); ++l)
        a = apply_activation(a * w.layers[l], act);
    return a * w.layers.back();
}

Vector branch_feature(const Matrix& x, const std::vector<Matrix>& branch, Activation act) {
    if (branch.empty()) throw InvalidSpec("branch_feature: empty branch");
    Matrix a = x;
    for (const Matrix& w : branch)
        a = apply_activation(a * w, act);
    if (a.cols() != 1)
        throw InvalidSpec("branch_feature: branch must end in width 1");
    return a.col(0);
}

Matrix forward_parallel(const Matrix& x, const ParallelWeights& w, Activation act) {
    if (w.branches.size() != static_cast<size_t>(w.output.rows()))
        throw InvalidSpec("forward_parallel: branch count != output rows");
    Matrix out = Matrix::Zero(x.rows(), w.output.cols());
    for (size_t j = 0; j < w.branches.size(); ++j)
        out += branch_feature(x, w.branches[j], act) *
               w.output.row(static_cast<Index>(j));
    return out;
}

} // namespace deepdual
