// Compiled with -mavx2; only reached after avx2::available() said yes.
// No std::min/std::max here: inline template instantiations from this file
// could be merged by the linker into scalar callers.
#include "mesp/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <limits>

namespace mesp::kernels::avx2 {

namespace {

inline std::int32_t imax(std::int32_t a, std::int32_t b) { return a > b ? a : b; }
inline std::int32_t imin(std::int32_t a, std::int32_t b) { return a < b ? a : b; }

std::int32_t hmax(__m256i v) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

__m256i load(const std::int32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

}  // namespace

std::int32_t max_value(std::span<const std::int32_t> a) {
  const std::int32_t* p = a.data();
  const std::size_t n = a.size();
  std::size_t i = 0;
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  if (n >= 8) {
    __m256i m0 = load(p);
    __m256i m1 = m0;
    for (i = 8; i + 16 <= n; i += 16) {
      m0 = _mm256_max_epi32(m0, load(p + i));
      m1 = _mm256_max_epi32(m1, load(p + i + 8));
    }
    for (; i + 8 <= n; i += 8) m0 = _mm256_max_epi32(m0, load(p + i));
    best = hmax(_mm256_max_epi32(m0, m1));
  }
  for (; i < n; ++i) best = imax(best, p[i]);
  return best;
}

ArgMax argmax_first(std::span<const std::int32_t> a) {
  if (a.empty()) return {std::numeric_limits<std::int32_t>::min(), -1};
  const std::int32_t best = max_value(a);
  const std::int32_t* p = a.data();
  const std::size_t n = a.size();
  const __m256i target = _mm256_set1_epi32(best);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(load(p + i), target)));
    if (mask != 0) return {best, static_cast<std::int64_t>(i + __builtin_ctz(static_cast<unsigned>(mask)))};
  }
  for (; i < n; ++i) {
    if (p[i] == best) return {best, static_cast<std::int64_t>(i)};
  }
  return {best, -1};  // unreachable
}

void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row) {
  std::int32_t* p = acc.data();
  const std::int32_t* q = row.data();
  const std::size_t n = acc.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i), _mm256_min_epi32(load(p + i), load(q + i)));
  }
  for (; i < n; ++i) p[i] = imin(p[i], q[i]);
}

std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row) {
  const std::int32_t* p = acc.data();
  const std::int32_t* q = row.data();
  const std::size_t n = acc.size();
  std::size_t i = 0;
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  if (n >= 8) {
    __m256i m = _mm256_set1_epi32(best);
    for (; i + 8 <= n; i += 8) m = _mm256_max_epi32(m, _mm256_min_epi32(load(p + i), load(q + i)));
    best = hmax(m);
  }
  for (; i < n; ++i) best = imax(best, imin(p[i], q[i]));
  return best;
}

}  // namespace mesp::kernels::avx2

#else  // built without AVX2 support: available() is false, keep the symbols

namespace mesp::kernels::avx2 {
std::int32_t max_value(std::span<const std::int32_t> a) { return scalar::max_value(a); }
ArgMax argmax_first(std::span<const std::int32_t> a) { return scalar::argmax_first(a); }
void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row) { scalar::min_into(acc, row); }
std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row) {
  return scalar::max_of_min(acc, row);
}
}  // namespace mesp::kernels::avx2

#endif
