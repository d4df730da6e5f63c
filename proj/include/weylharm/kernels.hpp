#pragma once

// Hot loops of the Weyl arithmetic in two flavours. The serial versions are
// the reference; the parallel versions split the left operand's terms across
// OpenMP threads and merge thread-local sums. Exact arithmetic makes the
// merged result identical to the serial one regardless of schedule.

#include "weylharm/weyl.hpp"

namespace weylharm::kernels {

WeylOp2 multiply_serial(const WeylOp2& a, const WeylOp2& b);
WeylOp2 multiply_parallel(const WeylOp2& a, const WeylOp2& b);

BiPoly apply_serial(const WeylOp2& d, const BiPoly& p);
BiPoly apply_parallel(const WeylOp2& d, const BiPoly& p);

/// Work size (terms_a * terms_b) above which the default entry points go parallel.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Number of threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace weylharm::kernels
