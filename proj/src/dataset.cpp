#include "deepdual/dataset.hpp"

#include "deepdual/matfun.hpp"

#include <algorithm>
#include <cmath>

namespace deepdual {

Matrix min_norm_interpolant(const Dataset& ds) {
    if (ds.X.rows() != ds.Y.rows())
        throw InvalidInput("dataset: X and Y must have the same number of rows");
    return pseudo_inverse(ds.X) * ds.Y;
}

bool is_feasible(const Dataset& ds) {
    if (ds.X.rows() != ds.Y.rows() || ds.X.rows() < 1) return false;
    if (!ds.X.allFinite() || !ds.Y.allFinite()) return false;
    const Matrix residual = ds.Y - ds.X * min_norm_interpolant(ds);
    return residual.norm() <= 1e-8 * std::max(1.0, ds.Y.norm());
}

void require_feasible(const Dataset& ds) {
    if (!is_feasible(ds))
        throw InfeasibleData("dataset: Y != X X^+ Y, labels are not interpolable");
}

void validate(const NetSpec& spec) {
    if (spec.depth < 2) throw InvalidSpec("net spec: depth must be >= 2");
    if (spec.widths.size() != static_cast<size_t>(spec.depth) + 1)
        throw InvalidSpec("net spec: need L+1 widths m_0..m_L");
    for (Index w : spec.widths)
        if (w < 1) throw InvalidSpec("net spec: widths must be positive");
    if (!(spec.scale > 0.0)) throw InvalidSpec("net spec: scale t must be positive");
    const Index d = spec.widths.front();
    const Index k = spec.widths.back();
    if (spec.arch == Architecture::standard && spec.act == Activation::linear) {
        const Index need = std::max(d, k);
        for (int l = 1; l <= spec.depth - 1; ++l)
            if (spec.widths[l] < need)
                throw InvalidSpec("net spec: standard linear hidden widths must be >= max(d,K)");
    }
    if (spec.arch == Architecture::parallel) {
        if (spec.branches < 1) throw InvalidSpec("net spec: parallel nets need >= 1 branch");
        if (spec.widths[spec.depth - 1] != 1)
            throw InvalidSpec("net spec: parallel branches must end in width 1");
    }
}

NetSpec make_net_spec(int depth, Index d, Index k, Index width,
                      Architecture arch, Activation act, double scale,
                      int branches) {
    NetSpec spec;
    spec.depth = depth;
    spec.arch = arch;
    spec.act = act;
    spec.scale = scale;
    spec.branches = branches;
    spec.widths.assign(static_cast<size_t>(depth) + 1, width);
    spec.widths.front() = d;
    spec.widths.back() = k;
    if (arch == Architecture::parallel && depth >= 2)
        spec.widths[static_cast<size_t>(depth) - 1] = 1;
    validate(spec);
    return spec;
}

WhitenedDataset make_whitened_dataset(Matrix x, Matrix y) {
    require_finite(x, "whitened dataset X");
    require_finite(y, "whitened dataset Y");
    if (x.rows() != y.rows())
        throw InvalidInput("whitened dataset: X and Y row counts differ");
    const Index n = x.rows();
    if ((x * x.transpose() - Matrix::Identity(n, n)).norm() > 1e-8)
        throw InvalidInput("whitened dataset: X X^T != I");
    for (Index i = 0; i < y.cols(); ++i)
        for (Index j = i + 1; j < y.cols(); ++j)
            if (std::abs(y.col(i).dot(y.col(j))) >
                1e-8 * y.col(i).norm() * y.col(j).norm())
                throw InvalidInput("whitened dataset: label columns are not orthogonal");
    return WhitenedDataset{std::move(x), std::move(y)};
}

RankOneDataset make_rank_one_dataset(Vector c, Vector a0) {
    if (c.size() < 1 || a0.size() < 1 || c.norm() == 0.0 || a0.norm() == 0.0)
        throw InvalidInput("rank-one dataset: c and a0 must be nonzero");
    if (!c.allFinite() || !a0.allFinite())
        throw InvalidInput("rank-one dataset: non-finite entries");
    return RankOneDataset{std::move(c), std::move(a0)};
}

} // namespace deepdual
