// Copyright 2026 The tbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <cstddef>

#include "tbl/kernels.hpp"

namespace tbl::simd::scalar {

bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept {
  const std::size_t n = dst.size();
  // Check pass first so a failed update leaves dst intact.
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t prod = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(q, src[k], &prod) ||
        __builtin_sub_overflow(dst[k], prod, &diff)) {
      return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) dst[k] -= q * src[k];
  return true;
}

bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept {
  std::uint64_t any = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a[k] & b[k];
    any |= out[k];
  }
  return any != 0;
}

std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept {
  std::uint64_t total = 0;
  for (auto w : a) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = second[first[k]];
}

}  // namespace tbl::simd::scalar
