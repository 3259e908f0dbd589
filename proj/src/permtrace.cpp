#include "qswaptrace/permtrace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qswaptrace {

Permutation compose_word(const PermutationWord& word) {
    const int k = word.num_copies;
    if (k < 1) throw std::invalid_argument("num_copies must be >= 1");
    Permutation perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    // pi = tau_{i1} o tau_{i2} o ... o tau_{im}; scanning left to right,
    // each factor right-composes, which swaps two entries of the array.
    for (int idx : word.transpositions) {
        if (idx < 1 || idx > k - 1)
            throw std::invalid_argument("transposition index out of range");
        std::swap(perm[idx - 1], perm[idx]);
    }
    return perm;
}

CycleType cycle_type(const Permutation& perm) {
    const int k = static_cast<int>(perm.size());
    std::vector<bool> seen(k, false);
    CycleType lengths;
    for (int start = 0; start < k; ++start) {
        if (seen[start]) continue;
        int len = 0;
        int x = start;
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = perm[x] - 1;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

double eval_trace_cycles(const PermutationWord& word, const MomentVector& mv) {
    double value = 1.0;
    for (int len : cycle_type(compose_word(word))) value *= mv.m(len);
    return value;
}

double eval_trace_cycles(const PermutationWord& word, const DensityMatrix& dm) {
    return eval_trace_cycles(word, moments(dm, word.num_copies));
}

double eval_trace_dense(const PermutationWord& word, const DensityMatrix& dm) {
    const int k = word.num_copies;
    const int d = dm.side();
    double size = std::pow(static_cast<double>(d), k);
    if (size > 16384.0) throw std::runtime_error("dense trace size cap (d^k <= 2^14) exceeded");
    const long long total = static_cast<long long>(std::llround(size));

    // P_word |x> permutes the copy digits of the basis label; the rightmost
    // factor acts first.
    std::vector<int> digits(k);
    Complex sum = 0.0;
    for (long long y = 0; y < total; ++y) {
        long long rem = y;
        for (int t = k - 1; t >= 0; --t) {
            digits[t] = static_cast<int>(rem % d);
            rem /= d;
        }
        std::vector<int> image = digits;
        for (auto it = word.transpositions.rbegin(); it != word.transpositions.rend(); ++it) {
            if (*it < 1 || *it > k - 1)
                throw std::invalid_argument("transposition index out of range");
            std::swap(image[*it - 1], image[*it]);
        }
        // tr(P M) = sum_y M_{y, sigma(y)} with M = dm^{(x)k}.
        Complex term = 1.0;
        for (int t = 0; t < k; ++t) term *= dm.entries(digits[t], image[t]);
        sum += term;
    }
    return sum.real();
}

std::string trace_expression(const CycleType& cycles) {
    // Factors rendered in ascending power order.
    CycleType ordered = cycles;
    std::sort(ordered.begin(), ordered.end());
    std::string out;
    for (int len : ordered) {
        if (len == 1) continue;
        if (!out.empty()) out += "*";
        out += "tr(rho^" + std::to_string(len) + ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace qswaptrace
