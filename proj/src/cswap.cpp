#include "qswaptrace/cswap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qswaptrace/permtrace.hpp"

namespace qswaptrace {

namespace {

constexpr double kNegativeClamp = 1e-12;

// Finalize a raw probability vector: clamp roundoff negatives, check
// normalization, renormalize.
OutcomeDistribution finalize(std::vector<double> probs, int n_controls) {
    double sum = 0.0;
    for (double& p : probs) {
        if (p < -kNegativeClamp)
            throw std::runtime_error("internal consistency: negative probability " +
                                     std::to_string(p));
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::runtime_error("internal consistency: probabilities sum to " +
                                 std::to_string(sum));
    for (double& p : probs) p /= sum;
    return OutcomeDistribution{std::move(probs), n_controls};
}

// Reverses the low `bits` bits; converts slot-bit masks (bit j <-> z_{j+1})
// to packed outcome indices (z_1 most significant) and back.
int reverse_bits(int v, int bits) {
    int out = 0;
    for (int j = 0; j < bits; ++j)
        if (v & (1 << j)) out |= 1 << (bits - 1 - j);
    return out;
}

}  // namespace

CircuitSpec CircuitSpec::make(int n_copies, std::vector<int> target,
                              std::vector<int> state_dims) {
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    CircuitSpec spec;
    spec.n_copies = n_copies;
    spec.target = std::move(target);
    spec.state_dims = std::move(state_dims);
    spec.control_qubits = n_copies - 1;
    spec.gate_count = 3 * (n_copies - 1);
    return spec;
}

OutcomeDistribution exact_distribution_moments(const MomentVector& mv, int n_copies,
                                               int copy_cap) {
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    if (n_copies > copy_cap) throw std::runtime_error("moment path copy cap exceeded");
    if (mv.max_order() < n_copies)
        throw std::invalid_argument("moment vector must cover m_1..m_n");

    const int nc = n_copies - 1;
    const int n_masks = 1 << nc;

    // Expand Kz^dag Kz = (1/4^{nc}) prod_{k=nc..1}[I+(-1)^{z_k}S_k]
    //                              prod_{k=1..nc}[I+(-1)^{z_k}S_k]
    // into 4^{nc} permutation words. Each word's trace value is the cycle
    // product of moments and its z-dependence is a parity mask, so words
    // accumulate into 2^{nc} buckets and p(z) is a signed bucket sum.
    std::vector<double> bucket(n_masks, 0.0);
    std::vector<int> perm(n_copies);
    for (int left = 0; left < n_masks; ++left) {
        for (int right = 0; right < n_masks; ++right) {
            for (int i = 0; i < n_copies; ++i) perm[i] = i + 1;
            for (int j = nc - 1; j >= 0; --j)
                if (left & (1 << j)) std::swap(perm[j], perm[j + 1]);
            for (int j = 0; j < nc; ++j)
                if (right & (1 << j)) std::swap(perm[j], perm[j + 1]);

            double value = 1.0;
            std::vector<bool> seen(n_copies, false);
            for (int start = 0; start < n_copies; ++start) {
                if (seen[start]) continue;
                int len = 0, x = start;
                while (!seen[x]) {
                    seen[x] = true;
                    ++len;
                    x = perm[x] - 1;
                }
                value *= mv.m(len);
            }
            bucket[left ^ right] += value;
        }
    }

    const double norm = std::pow(0.25, nc);
    std::vector<double> probs(n_masks, 0.0);
    for (int slotbits = 0; slotbits < n_masks; ++slotbits) {
        double p = 0.0;
        for (int mask = 0; mask < n_masks; ++mask) {
            const int parity = std::popcount(static_cast<unsigned>(mask & slotbits)) & 1;
            p += parity ? -bucket[mask] : bucket[mask];
        }
        probs[reverse_bits(slotbits, nc)] = p * norm;
    }
    return finalize(std::move(probs), nc);
}

namespace {

// Swap the digits of copies k and k+1 (1-based) in an n-digit base-d label
// with copy 1 most significant.
int swap_copy_digits(int label, int k, int n, int d) {
    std::vector<int> digits(n);
    for (int t = n - 1; t >= 0; --t) {
        digits[t] = label % d;
        label /= d;
    }
    std::swap(digits[k - 1], digits[k]);
    int out = 0;
    for (int t = 0; t < n; ++t) out = out * d + digits[t];
    return out;
}

}  // namespace

OutcomeDistribution exact_distribution_dense(const DensityMatrix& rho_x, int n_copies) {
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    const int d = rho_x.side();
    const double sized = std::pow(static_cast<double>(d), n_copies);
    if (sized > 4096.0) throw std::runtime_error("dense path size cap (d^n <= 2^12) exceeded");
    const int D = static_cast<int>(std::llround(sized));
    const int nc = n_copies - 1;

    // Row permutations for each S_k.
    std::vector<std::vector<int>> swap_rows(nc + 1);
    for (int k = 1; k <= nc; ++k) {
        swap_rows[k].resize(D);
        for (int a = 0; a < D; ++a) swap_rows[k][a] = swap_copy_digits(a, k, n_copies, d);
    }

    std::vector<int> digits_x(n_copies), digits_y(n_copies);
    std::vector<double> probs(1 << nc, 0.0);
    for (int z = 0; z < (1 << nc); ++z) {
        // Kz = [I+(-1)^{z_1}S_1] ... [I+(-1)^{z_nc}S_nc] / 2^{nc}, built by
        // left-multiplying factors from k = nc down to 1.
        Matrix a = Matrix::Identity(D, D);
        for (int k = nc; k >= 1; --k) {
            const double sign = (z >> (nc - k)) & 1 ? -1.0 : 1.0;
            Matrix permuted(D, D);
            for (int r = 0; r < D; ++r) permuted.row(r) = a.row(swap_rows[k][r]);
            a = 0.5 * (a + sign * permuted);
        }
        const Matrix c = a.adjoint() * a;
        // p = tr(C rho^{(x)n}) with the tensor-power entries formed on the fly.
        Complex p = 0.0;
        for (int x = 0; x < D; ++x) {
            int rem = x;
            for (int t = n_copies - 1; t >= 0; --t) {
                digits_x[t] = rem % d;
                rem /= d;
            }
            for (int y = 0; y < D; ++y) {
                rem = y;
                for (int t = n_copies - 1; t >= 0; --t) {
                    digits_y[t] = rem % d;
                    rem /= d;
                }
                Complex entry = 1.0;
                for (int t = 0; t < n_copies; ++t)
                    entry *= rho_x.entries(digits_y[t], digits_x[t]);
                p += c(x, y) * entry;
            }
        }
        probs[z] = p.real();
    }
    return finalize(std::move(probs), nc);
}

OutcomeDistribution exact_distribution_statevector(const PureState& state, int n_copies,
                                                   const std::vector<int>& target) {
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    if (n_copies > kStatevectorCopyCap)
        throw std::runtime_error("statevector path copy cap exceeded");
    if (target.empty()) throw std::invalid_argument("target set must be nonempty");
    const int num_sub = state.num_subsystems();
    std::vector<bool> in_target(num_sub, false);
    for (int t : target) {
        if (t < 1 || t > num_sub) throw std::invalid_argument("target index out of range");
        in_target[t - 1] = true;
    }

    const int nc = n_copies - 1;
    const long long copy_dim = state.total_dim();
    long long copies_size = 1;
    for (int c = 0; c < n_copies; ++c) {
        copies_size *= copy_dim;
        if (copies_size > (1LL << 22)) throw std::runtime_error("statevector memory cap exceeded");
    }
    const long long size = copies_size << nc;
    if (size > (1LL << 22)) throw std::runtime_error("statevector memory cap exceeded");

    // Layout: |controls> (control 1 most significant) x |copy 1> ... |copy n|.
    Vector psi = Vector::Zero(size);
    {
        // product amplitude over copies; controls all zero
        std::vector<int> pos(n_copies, 0);
        bool done = false;
        while (!done) {
            Complex amp = 1.0;
            long long offset = 0;
            for (int c = 0; c < n_copies; ++c) {
                amp *= state.amplitudes(pos[c]);
                offset = offset * copy_dim + pos[c];
            }
            psi(offset) = amp;
            int c = n_copies - 1;
            while (c >= 0 && ++pos[c] == copy_dim) pos[c--] = 0;
            done = c < 0;
        }
    }

    auto hadamard = [&](int control) {
        // control is 1-based; its bit sits above the copies with stride
        // 2^{nc-control} * copy_dim^n.
        const long long stride = copies_size << (nc - control);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (long long base = 0; base < size; base += 2 * stride)
            for (long long i = base; i < base + stride; ++i) {
                const Complex a = psi(i);
                const Complex b = psi(i + stride);
                psi(i) = (a + b) * inv_sqrt2;
                psi(i + stride) = (a - b) * inv_sqrt2;
            }
    };

    // Precompute the target-digit swap of copies k,k+1 on a copies-label.
    const int n_digits = num_sub * n_copies;
    std::vector<int> digit_dim(n_digits);
    for (int c = 0; c < n_copies; ++c)
        for (int s = 0; s < num_sub; ++s) digit_dim[c * num_sub + s] = state.dims[s];
    auto swapped_label = [&](long long label, int k) {
        std::vector<int> digits(n_digits);
        for (int t = n_digits - 1; t >= 0; --t) {
            digits[t] = static_cast<int>(label % digit_dim[t]);
            label /= digit_dim[t];
        }
        for (int s = 0; s < num_sub; ++s)
            if (in_target[s]) std::swap(digits[(k - 1) * num_sub + s], digits[k * num_sub + s]);
        long long out = 0;
        for (int t = 0; t < n_digits; ++t) out = out * digit_dim[t] + digits[t];
        return out;
    };

    auto controlled_swap = [&](int k) {
        for (long long ctrl = 0; ctrl < (1LL << nc); ++ctrl) {
            if (!((ctrl >> (nc - k)) & 1)) continue;
            const long long base = ctrl * copies_size;
            for (long long label = 0; label < copies_size; ++label) {
                const long long other = swapped_label(label, k);
                if (other > label) std::swap(psi(base + label), psi(base + other));
            }
        }
    };

    for (int c = 1; c <= nc; ++c) hadamard(c);
    for (int k = 1; k <= nc; ++k) controlled_swap(k);
    for (int c = 1; c <= nc; ++c) hadamard(c);

    std::vector<double> probs(1 << nc, 0.0);
    for (long long i = 0; i < size; ++i)
        probs[static_cast<int>(i / copies_size)] += std::norm(psi(i));
    return finalize(std::move(probs), nc);
}

ShotCounts sample(const OutcomeDistribution& dist, long long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    std::vector<double> cdf(dist.probabilities.size());
    double acc = 0.0;
    for (size_t i = 0; i < cdf.size(); ++i) {
        acc += dist.probabilities[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::vector<long long> counts(cdf.size(), 0);
    for (long long s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++counts[static_cast<size_t>(it - cdf.begin())];
    }
    return ShotCounts{std::move(counts), dist.n_controls, shots};
}

OutcomeDistribution normalize_counts(const ShotCounts& counts) {
    if (counts.total < 1) throw std::invalid_argument("empty counts");
    std::vector<double> probs(counts.counts.size());
    for (size_t i = 0; i < probs.size(); ++i)
        probs[i] = static_cast<double>(counts.counts[i]) / static_cast<double>(counts.total);
    return OutcomeDistribution{std::move(probs), counts.n_controls};
}

std::string outcome_string(int z, int n_controls) {
    std::string s(n_controls, '0');
    for (int k = 0; k < n_controls; ++k)
        if (z & (1 << (n_controls - 1 - k))) s[k] = '1';
    return s;
}

int outcome_index(const std::string& z) {
    int idx = 0;
    for (char c : z) {
        if (c != '0' && c != '1') throw std::invalid_argument("outcome string must be binary");
        idx = (idx << 1) | (c == '1');
    }
    return idx;
}

}  // namespace qswaptrace
