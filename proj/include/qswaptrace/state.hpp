// state.hpp
// Multipartite quantum states, partial traces, and spectral moments.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace qswaptrace {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Numerical tolerance for Hermiticity / trace / PSD checks.
inline constexpr double kStateTol = 1e-10;

// Pure state on a tensor product of subsystems. Subsystems are indexed
// 1..N; basis ordering is row-major over dims (subsystem 1 is the most
// significant index).
struct PureState {
    Vector amplitudes;
    std::vector<int> dims;

    PureState(Vector amps, std::vector<int> subsystem_dims);

    int total_dim() const { return static_cast<int>(amplitudes.size()); }
    int num_subsystems() const { return static_cast<int>(dims.size()); }
};

// Dense Hermitian, PSD, trace-1 matrix with subsystem dimensions.
struct DensityMatrix {
    Matrix entries;
    std::vector<int> dims;

    DensityMatrix(Matrix m, std::vector<int> subsystem_dims);

    int side() const { return static_cast<int>(entries.rows()); }
};

// Power traces m_k = tr(rho^k) for k = 1..K, 1-based access via m(k).
struct MomentVector {
    std::vector<double> values;
    int source_dim = 0;

    double m(int k) const { return values.at(static_cast<size_t>(k) - 1); }
    int max_order() const { return static_cast<int>(values.size()); }
};

PureState make_ghz(int num_qubits);
PureState make_w(int num_qubits);

// Haar-style random unit vector, deterministic per seed.
PureState random_pure(const std::vector<int>& dims, std::uint64_t seed);

// Random PSD trace-1 matrix of the requested numerical rank.
DensityMatrix random_mixed(int dim, int rank, std::uint64_t seed);

// Partial trace over the complement of `keep` (1-based subsystem indices).
DensityMatrix reduced_density(const PureState& state, const std::vector<int>& keep);
DensityMatrix reduced_density(const DensityMatrix& state, const std::vector<int>& keep);

// m_k = tr(dm^k) from the eigenvalue spectrum; eigenvalues in
// [-kStateTol, 0) are clamped to zero.
MomentVector moments(const DensityMatrix& dm, int k_max);

// Moments of a known spectrum (test oracle and Newton-Girard checks).
MomentVector moments_of_spectrum(const std::vector<double>& eigenvalues, int k_max);

DensityMatrix density_of(const PureState& state);

}  // namespace qswaptrace
