#pragma once

namespace entrokit {

/// Worker count for parallel regions: ENTROKIT_THREADS when set (>= 1),
/// otherwise the OpenMP default.
int effective_threads();

}  // namespace entrokit
