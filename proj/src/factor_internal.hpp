#pragma once

#include "weylfac/upoly.hpp"

namespace weylfac::detail {

/// True when some small prime certifies that f (nonzero, over Q) is squarefree.
/// False means undecided.
bool certify_squarefree(const QPoly& f);

}  // namespace weylfac::detail
