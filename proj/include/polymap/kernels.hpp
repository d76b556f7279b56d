#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference that
// produces bit-identical results; the tests and bench compare them.

#include <cstddef>

#include "polymap/multipoly.hpp"

namespace polymap {

/// Term-by-term product accumulated in a hash table, then sorted.
MultiPoly multiply_terms_serial(const MultiPoly& a, const MultiPoly& b);
/// Same product with the outer loop split across OpenMP threads; partial sums
/// are merged in thread order so the result does not depend on scheduling.
MultiPoly multiply_terms_parallel(const MultiPoly& a, const MultiPoly& b);

/// Products with at least this many term pairs use the parallel kernel.
inline constexpr std::size_t kParallelMultiplyThreshold = 1u << 14;

int kernel_threads();

}  // namespace polymap
