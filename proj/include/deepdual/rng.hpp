#pragma once

#include "deepdual/matrix.hpp"

#include <cstdint>
#include <random>

namespace deepdual {

/// splitmix64 step; used to derive independent substreams from
/// (seed, index) pairs so results do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(mix_seed(seed, stream));
}

inline Matrix gaussian_matrix(Rng& rng, Index rows, Index cols, double stddev = 1.0) {
    std::normal_distribution<double> dist(0.0, stddev);
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline Vector gaussian_vector(Rng& rng, Index n, double stddev = 1.0) {
    return gaussian_matrix(rng, n, 1, stddev).col(0);
}

/// Uniform on the unit sphere in R^n.
inline Vector sphere_vector(Rng& rng, Index n) {
    Vector v = gaussian_vector(rng, n);
    double nrm = v.norm();
    while (nrm < 1e-12) {
        v = gaussian_vector(rng, n);
        nrm = v.norm();
    }
    return v / nrm;
}

/// Uniform on the Frobenius sphere of the given radius.
inline Matrix frobenius_sphere_matrix(Rng& rng, Index rows, Index cols, double radius) {
    Matrix m = gaussian_matrix(rng, rows, cols);
    double nrm = m.norm();
    while (nrm < 1e-12) {
        m = gaussian_matrix(rng, rows, cols);
        nrm = m.norm();
    }
    return m * (radius / nrm);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

} // namespace deepdual
