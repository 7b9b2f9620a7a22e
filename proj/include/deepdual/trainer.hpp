#pragma once

#include "deepdual/dataset.hpp"
#include "deepdual/network.hpp"
#include "deepdual/rng.hpp"

#include <cstdint>
#include <vector>

namespace deepdual {

enum class Regularizer {
    sum_frobenius_sq,  ///< 0.5 * sum_l ||W_l||_F^2
    frobenius_pow_l,   ///< 0.5 * (sum_{l,j} ||W_{l,j}||_F^L + sum_j ||w_{L,j}^row||_2^L)
};

/// Trainable weights in a flat block layout. Standard nets hold L layer
/// matrices; parallel nets hold L-1 matrices per branch followed by the
/// m x K output matrix.
struct Weights {
    NetSpec spec;
    std::vector<Matrix> blocks;
};

Weights init_weights(const NetSpec& spec, Rng& rng);

Matrix forward(const Weights& w, const Matrix& x);

/// ||f(X) - Y||_F
double interpolation_residual(const Weights& w, const Dataset& ds);

double regularizer_value(const Weights& w, Regularizer reg);

/// reg + penalty * ||f(X) - Y||_F^2 and, if grad != nullptr, its gradient
/// in the same block layout.
double loss_and_grad(const Weights& w, const Dataset& ds, Regularizer reg,
                     double penalty, std::vector<Matrix>* grad);

/// Branch-rescaled objective (L/2) sum_j ||w_{L,j}^row||_2 * prod_l ||W_{l,j}||_F
/// of a parallel network; invariant under the positive per-branch rescaling
/// that moves the weights onto the unit-norm constraint set.
double normalized_parallel_objective(const Weights& w);

struct TrainConfig {
    NetSpec net;
    Regularizer regularizer = Regularizer::sum_frobenius_sq;
    double penalty_weight = 1.0;   ///< initial penalty; x10 per stage
    double learning_rate = 0.05;
    long steps = 3000;             ///< total gradient steps across stages
    int restarts = 8;
    std::uint64_t seed = 0;
    int stages = 5;
    double residual_threshold_factor = 1e-4;
};

struct RestartOutcome {
    double objective = 0.0;  ///< regularizer value at the final weights
    double residual = 0.0;
    bool diverged = false;
};

struct TrainResult {
    double best_objective = 0.0;
    double constraint_residual = 0.0;
    int best_restart = -1;           ///< -1 when no restart met the threshold
    std::vector<RestartOutcome> per_restart;
    Weights weights;                 ///< weights of the best restart
    double residual_threshold = 0.0;

    bool has_feasible() const { return best_restart >= 0; }
};

/// Multi-start penalty-method gradient descent; deterministic given the
/// seed (per-restart streams are derived from (seed, restart index)).
TrainResult train(const TrainConfig& config, const Dataset& ds);

/// Max relative error between analytic and central finite-difference
/// gradients at random weights; ReLU kinks are avoided by resampling
/// while any pre-activation is within 10*epsilon of zero.
double gradient_check(const TrainConfig& config, const Dataset& ds, double epsilon);

} // namespace deepdual
