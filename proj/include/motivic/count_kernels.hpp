#pragma once

#include <cstdint>

#include "motivic/numeric.hpp"
#include "motivic/variety.hpp"

namespace motivic::kernels {

/// Point count of a Concrete system over F_{p^m}: free variables are factored
/// out, projective systems are split into affine charts, and the last
/// constrained variable is handled by univariate root counting on each fiber.
/// Fibers run in parallel (OpenMP); the result is independent of scheduling.
/// `budget` bounds the number of fibers per chart.
BigInt count_system(const PolySystem& sys, unsigned m, std::uint64_t budget);

/// Serial reference: enumerates every point of F_{p^m}^d. Projective counts
/// are (#nonzero solutions)/(p^m - 1) with exact divisibility asserted.
/// `budget` bounds p^(m d).
BigInt count_system_reference(const PolySystem& sys, unsigned m, std::uint64_t budget);

/// Affine solution counts (the system's flavor is ignored).
BigInt count_affine_parallel(const PolySystem& sys, unsigned m, std::uint64_t budget);
BigInt count_affine_serial(const PolySystem& sys, unsigned m, std::uint64_t budget);

/// Fields up to this size use Zech-logarithm tables in the parallel kernel.
inline constexpr std::uint64_t kZechLimit = std::uint64_t{1} << 20;

/// Forces the generic (polynomial-basis) arithmetic path; for tests and benchmarks.
BigInt count_affine_parallel_generic(const PolySystem& sys, unsigned m, std::uint64_t budget);

}  // namespace motivic::kernels
