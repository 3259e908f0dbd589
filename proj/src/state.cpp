#include "qswaptrace/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qswaptrace {

namespace {

int product_of(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
        p *= d;
    }
    return p;
}

}  // namespace

PureState::PureState(Vector amps, std::vector<int> subsystem_dims)
    : amplitudes(std::move(amps)), dims(std::move(subsystem_dims)) {
    if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
    if (amplitudes.size() != product_of(dims))
        throw std::invalid_argument("amplitude length does not match product of dims");
    if (std::abs(amplitudes.norm() - 1.0) > kStateTol)
        throw std::invalid_argument("state is not normalized");
}

DensityMatrix::DensityMatrix(Matrix m, std::vector<int> subsystem_dims)
    : entries(std::move(m)), dims(std::move(subsystem_dims)) {
    if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
    if (entries.rows() != entries.cols())
        throw std::invalid_argument("density matrix must be square");
    if (entries.rows() != product_of(dims))
        throw std::invalid_argument("matrix side does not match product of dims");
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(entries.trace().real() - 1.0) > kStateTol ||
        std::abs(entries.trace().imag()) > kStateTol)
        throw std::invalid_argument("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kStateTol)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

PureState make_ghz(int num_qubits) {
    if (num_qubits < 2) throw std::invalid_argument("GHZ state needs at least 2 qubits");
    const int dim = 1 << num_qubits;
    Vector amps = Vector::Zero(dim);
    amps(0) = amps(dim - 1) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(amps), std::vector<int>(num_qubits, 2));
}

PureState make_w(int num_qubits) {
    if (num_qubits < 2) throw std::invalid_argument("W state needs at least 2 qubits");
    const int dim = 1 << num_qubits;
    Vector amps = Vector::Zero(dim);
    const double a = 1.0 / std::sqrt(static_cast<double>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) amps(1 << q) = a;
    return PureState(std::move(amps), std::vector<int>(num_qubits, 2));
}

PureState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
    const int dim = product_of(dims);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector amps(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        amps(i) = Complex(re, im);
    }
    amps /= amps.norm();
    return PureState(std::move(amps), dims);
}

DensityMatrix random_mixed(int dim, int rank, std::uint64_t seed) {
    if (dim < 1 || rank < 1 || rank > dim)
        throw std::invalid_argument("require 1 <= rank <= dim");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho), {dim});
}

namespace {

// Splits a row-major composite index into (kept part, traced part) strides.
struct SplitIndex {
    std::vector<int> keep_dims, rest_dims;
    std::vector<int> keep_pos;   // 0-based positions of kept subsystems
    std::vector<int> strides;    // row-major strides of the full index

    SplitIndex(const std::vector<int>& dims, const std::vector<int>& keep) {
        const int n = static_cast<int>(dims.size());
        std::vector<bool> kept(n, false);
        for (int idx : keep) {
            if (idx < 1 || idx > n) throw std::invalid_argument("subsystem index out of range");
            if (kept[idx - 1]) throw std::invalid_argument("duplicate subsystem index");
            kept[idx - 1] = true;
        }
        strides.assign(n, 1);
        for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];
        for (int i = 0; i < n; ++i) {
            if (kept[i]) {
                keep_dims.push_back(dims[i]);
                keep_pos.push_back(i);
            } else {
                rest_dims.push_back(dims[i]);
            }
        }
    }

    // Full index from (kept digits packed row-major, rest digits packed row-major).
    int full_index(int kp, int rp, const std::vector<int>& dims) const {
        const int n = static_cast<int>(dims.size());
        std::vector<bool> kept(n, false);
        for (int p : keep_pos) kept[p] = true;
        int idx = 0;
        for (int i = n - 1; i >= 0; --i) {
            int digit;
            if (kept[i]) {
                digit = kp % dims[i];
                kp /= dims[i];
            } else {
                digit = rp % dims[i];
                rp /= dims[i];
            }
            idx += digit * strides[i];
        }
        return idx;
    }
};

}  // namespace

template <typename Lookup>
static Matrix partial_trace_impl(const std::vector<int>& dims, const std::vector<int>& keep,
                                 Lookup&& entry, std::vector<int>* out_dims) {
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    // Row-major digit order must be preserved, so unpack indices digit by digit.
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    SplitIndex split(dims, keep_sorted);
    const int dk = product_of(split.keep_dims);
    const int dr = product_of(split.rest_dims);
    Matrix out = Matrix::Zero(dk, dk);
    for (int a = 0; a < dk; ++a)
        for (int ap = 0; ap < dk; ++ap) {
            Complex sum = 0.0;
            for (int b = 0; b < dr; ++b)
                sum += entry(split.full_index(a, b, dims), split.full_index(ap, b, dims));
            out(a, ap) = sum;
        }
    *out_dims = split.keep_dims;
    return out;
}

DensityMatrix reduced_density(const PureState& state, const std::vector<int>& keep) {
    std::vector<int> out_dims;
    Matrix out = partial_trace_impl(
        state.dims, keep,
        [&](int i, int j) { return state.amplitudes(i) * std::conj(state.amplitudes(j)); },
        &out_dims);
    return DensityMatrix(std::move(out), out_dims);
}

DensityMatrix reduced_density(const DensityMatrix& state, const std::vector<int>& keep) {
    std::vector<int> out_dims;
    Matrix out = partial_trace_impl(
        state.dims, keep, [&](int i, int j) { return state.entries(i, j); }, &out_dims);
    return DensityMatrix(std::move(out), out_dims);
}

MomentVector moments(const DensityMatrix& dm, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(dm.entries, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    for (double& e : eigs) {
        if (e < -kStateTol) throw std::runtime_error("non-PSD input beyond tolerance");
        if (e < 0.0) e = 0.0;
    }
    MomentVector mv = moments_of_spectrum(eigs, k_max);
    mv.source_dim = dm.side();
    mv.values[0] = 1.0;  // exact normalization
    return mv;
}

MomentVector moments_of_spectrum(const std::vector<double>& eigenvalues, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    MomentVector mv;
    mv.source_dim = static_cast<int>(eigenvalues.size());
    std::vector<double> powers = eigenvalues;
    for (int k = 1; k <= k_max; ++k) {
        double sum = 0.0;
        for (size_t i = 0; i < powers.size(); ++i) {
            if (k > 1) powers[i] *= eigenvalues[i];
            sum += powers[i];
        }
        mv.values.push_back(sum);
    }
    return mv;
}

DensityMatrix density_of(const PureState& state) {
    Matrix m = state.amplitudes * state.amplitudes.adjoint();
    return DensityMatrix(std::move(m), state.dims);
}

}  // namespace qswaptrace
