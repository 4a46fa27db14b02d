#pragma once

namespace brf {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; Serial exists for testing and benchmarking.
enum class Execution { Serial, Parallel };

}  // namespace brf
