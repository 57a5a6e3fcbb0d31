#pragma once

#include <cstdint>
#include <span>

// Reductions over int32 distance arrays. Every eccentricity query ends in one
// of these, and the exhaustive oracles run them millions of times, so each has
// a scalar reference and an AVX2 variant picked once at runtime.
namespace mesp::kernels {

struct ArgMax {
  std::int32_t value;
  std::int64_t index;  // smallest index attaining value; -1 for empty input
};

namespace scalar {
std::int32_t max_value(std::span<const std::int32_t> a);
ArgMax argmax_first(std::span<const std::int32_t> a);
// acc[i] = min(acc[i], row[i])
void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row);
// max_i min(acc[i], row[i]) without writing acc
std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row);
}  // namespace scalar

namespace avx2 {
bool available();
std::int32_t max_value(std::span<const std::int32_t> a);
ArgMax argmax_first(std::span<const std::int32_t> a);
void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row);
std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row);
}  // namespace avx2

// Dispatching entry points. max_value of an empty span is INT32_MIN.
std::int32_t max_value(std::span<const std::int32_t> a);
ArgMax argmax_first(std::span<const std::int32_t> a);
void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row);
std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row);

// "avx2" or "scalar"; MESP_FORCE_SCALAR=1 in the environment pins scalar.
const char* active_backend();

}  // namespace mesp::kernels
