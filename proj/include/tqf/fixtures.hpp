#pragma once

#include <vector>

#include "tqf/witness.hpp"

namespace tqf {

/// Three bundled worked examples (one each for theorems 1-3), used by
/// the `examples` command and as regression fixtures.
const std::vector<Certificate>& example_certificates();

}  // namespace tqf
