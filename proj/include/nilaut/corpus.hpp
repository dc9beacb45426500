#pragma once

#include <vector>

#include "nilaut/pcgroup.hpp"

namespace nilaut {

// The built-in verification corpus, sorted by group name.
std::vector<FiniteGroup> default_corpus();

}  // namespace nilaut
