#include "mesp/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace mesp::kernels {

namespace scalar {

std::int32_t max_value(std::span<const std::int32_t> a) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  for (std::int32_t x : a) best = std::max(best, x);
  return best;
}

ArgMax argmax_first(std::span<const std::int32_t> a) {
  ArgMax r{std::numeric_limits<std::int32_t>::min(), -1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > r.value) r = {a[i], static_cast<std::int64_t>(i)};
  }
  return r;
}

void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::min(acc[i], row[i]);
}

std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  for (std::size_t i = 0; i < acc.size(); ++i) best = std::max(best, std::min(acc[i], row[i]));
  return best;
}

}  // namespace scalar

// Lives here rather than in the AVX2 translation unit so the check itself is
// never compiled with AVX2 enabled.
bool avx2::available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Table {
  std::int32_t (*max_value)(std::span<const std::int32_t>);
  ArgMax (*argmax_first)(std::span<const std::int32_t>);
  void (*min_into)(std::span<std::int32_t>, std::span<const std::int32_t>);
  std::int32_t (*max_of_min)(std::span<const std::int32_t>, std::span<const std::int32_t>);
  const char* name;
};

Table pick() {
  const char* force = std::getenv("MESP_FORCE_SCALAR");
  bool forced = force != nullptr && force[0] != '\0' && force[0] != '0';
  if (!forced && avx2::available()) {
    return {avx2::max_value, avx2::argmax_first, avx2::min_into, avx2::max_of_min, "avx2"};
  }
  return {scalar::max_value, scalar::argmax_first, scalar::min_into, scalar::max_of_min, "scalar"};
}

const Table& table() {
  static const Table t = pick();
  return t;
}

}  // namespace

std::int32_t max_value(std::span<const std::int32_t> a) { return table().max_value(a); }
ArgMax argmax_first(std::span<const std::int32_t> a) { return table().argmax_first(a); }
void min_into(std::span<std::int32_t> acc, std::span<const std::int32_t> row) { table().min_into(acc, row); }
std::int32_t max_of_min(std::span<const std::int32_t> acc, std::span<const std::int32_t> row) {
  return table().max_of_min(acc, row);
}
const char* active_backend() { return table().name; }

}  // namespace mesp::kernels
