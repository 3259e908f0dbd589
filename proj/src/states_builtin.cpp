#include "qswaptrace/states_builtin.hpp"

#include <stdexcept>

namespace qswaptrace {

AnyState builtin_state(const std::string& name) {
    if (name == "bell") return make_ghz(2);
    if (name.rfind("ghz", 0) == 0 && name.size() == 4) {
        const int n = name[3] - '0';
        if (n >= 2 && n <= 6) return make_ghz(n);
    }
    if (name.rfind("w", 0) == 0 && name.size() == 2) {
        const int n = name[1] - '0';
        if (n >= 3 && n <= 6) return make_w(n);
    }
    if (name == "maxmix2" || name == "maxmix3") {
        const int d = name.back() - '0';
        Matrix m = Matrix::Identity(d, d) / static_cast<double>(d);
        return DensityMatrix(std::move(m), {d});
    }
    throw std::invalid_argument("unknown built-in state: " + name);
}

bool is_builtin_state(const std::string& name) {
    try {
        builtin_state(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

DensityMatrix reduced_of(const AnyState& state, const std::vector<int>& cut) {
    if (std::holds_alternative<PureState>(state)) {
        const auto& pure = std::get<PureState>(state);
        if (cut.size() == pure.dims.size()) return density_of(pure);
        return reduced_density(pure, cut);
    }
    const auto& dm = std::get<DensityMatrix>(state);
    if (cut.size() == dm.dims.size()) return dm;
    return reduced_density(dm, cut);
}

}  // namespace qswaptrace
