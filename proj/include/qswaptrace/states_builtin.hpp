// states_builtin.hpp
// Named test-fixture states shared by the CLI and the experiment harness.

#pragma once

#include <string>
#include <variant>

#include "qswaptrace/state.hpp"

namespace qswaptrace {

using AnyState = std::variant<PureState, DensityMatrix>;

// Recognized names: ghz2..ghz6, w3..w6, bell, maxmix2, maxmix3.
AnyState builtin_state(const std::string& name);

bool is_builtin_state(const std::string& name);

// Reduced state of the given cut (pure input) or the state itself (mixed).
DensityMatrix reduced_of(const AnyState& state, const std::vector<int>& cut);

}  // namespace qswaptrace
