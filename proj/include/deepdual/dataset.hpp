#pragma once

#include "deepdual/matrix.hpp"

#include <vector>

namespace deepdual {

enum class Activation { linear, relu };
enum class Architecture { standard, parallel };

/// Data matrix X (N x d) and label matrix Y (N x K).
struct Dataset {
    Matrix X;
    Matrix Y;

    Index samples() const { return X.rows(); }
    Index input_dim() const { return X.cols(); }
    Index output_dim() const { return Y.cols(); }
};

/// Minimal-norm interpolant X^+ Y.
Matrix min_norm_interpolant(const Dataset& ds);

/// True iff Y = X X^+ Y up to 1e-8 * max(1, ||Y||_F), i.e. the exact
/// interpolation constraint has a solution.
bool is_feasible(const Dataset& ds);

/// Throws InfeasibleData if the labels cannot be interpolated.
void require_feasible(const Dataset& ds);

/// Layer dimensions and architecture of a network. widths holds
/// m_0 .. m_L with m_0 = d and m_L = K; for parallel networks the
/// widths describe a single branch and m_{L-1} = 1.
struct NetSpec {
    int depth = 2;                     ///< L
    std::vector<Index> widths;         ///< m_0 .. m_L
    Architecture arch = Architecture::standard;
    int branches = 1;                  ///< m, parallel only
    Activation act = Activation::linear;
    double scale = 1.0;                ///< t
};

/// Validates depth/width/branch invariants; throws InvalidSpec.
void validate(const NetSpec& spec);

/// Convenience builder: interior widths all equal to `width`.
NetSpec make_net_spec(int depth, Index d, Index k, Index width,
                      Architecture arch, Activation act, double scale = 1.0,
                      int branches = 1);

/// Dataset with X X^T = I_N and mutually orthogonal label columns.
struct WhitenedDataset {
    Matrix X;
    Matrix Y;
};

/// Validates the whitened invariants; throws InvalidInput.
WhitenedDataset make_whitened_dataset(Matrix x, Matrix y);

/// Rank-one data X = c a0^T.
struct RankOneDataset {
    Vector c;
    Vector a0;

    Matrix X() const { return c * a0.transpose(); }
};

RankOneDataset make_rank_one_dataset(Vector c, Vector a0);

} // namespace deepdual
