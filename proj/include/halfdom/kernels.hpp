#pragma once

#include <cstddef>
#include <string_view>

namespace halfdom::kernels {

// Dense row kernels used by the floating-point simplex. Both variants perform
// one multiply and one subtract per element with no fused operations, so
// their results are bit-identical.

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Best variant the running CPU supports.
Isa detected_isa();
/// Variant currently used by eliminate(); defaults to detected_isa().
Isa active_isa();
/// Forces a variant. Requesting avx2 on a CPU without it falls back to scalar.
void set_active_isa(Isa isa);

/// dst[k] -= f * src[k] for k < n.
void eliminate_scalar(double* dst, const double* src, double f, std::size_t n);
void eliminate_avx2(double* dst, const double* src, double f, std::size_t n);
void eliminate(double* dst, const double* src, double f, std::size_t n);

}  // namespace halfdom::kernels
