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

// Built with -mavx2. Nothing here may be called unless the CPU reports AVX2.

#include "tbl/kernels.hpp"

#if TBL_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstddef>
#include <cstring>

namespace tbl::simd::avx2 {

namespace {

constexpr std::int64_t kI32Max = 0x7fffffffLL;
constexpr std::int64_t kSafeDst = 1LL << 62;

// True iff every lane satisfies -bound < x < bound.
inline bool lanes_within(__m256i x, __m256i bound, __m256i neg_bound) {
  const __m256i hi = _mm256_cmpgt_epi64(x, neg_bound);
  const __m256i lo = _mm256_cmpgt_epi64(bound, x);
  return _mm256_movemask_epi8(_mm256_and_si256(hi, lo)) == -1;
}

}  // namespace

bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept {
  const std::size_t n = dst.size();
  // Fast path: |q|, |src| < 2^31 and |dst| < 2^62 cannot overflow, and lets
  // _mm256_mul_epi32 form the exact 64-bit product from the low halves.
  if (q > kI32Max || q < -kI32Max) return scalar::axpy_i64(dst, src, q);

  const __m256i b32 = _mm256_set1_epi64x(kI32Max + 1);
  const __m256i nb32 = _mm256_set1_epi64x(-(kI32Max + 1));
  const __m256i b62 = _mm256_set1_epi64x(kSafeDst);
  const __m256i nb62 = _mm256_set1_epi64x(-kSafeDst);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
    if (!lanes_within(s, b32, nb32) || !lanes_within(d, b62, nb62)) {
      return scalar::axpy_i64(dst, src, q);
    }
  }
  for (std::size_t t = k; t < n; ++t) {
    if (src[t] > kI32Max || src[t] < -kI32Max || dst[t] >= kSafeDst || dst[t] <= -kSafeDst) {
      return scalar::axpy_i64(dst, src, q);
    }
  }

  const __m256i qv = _mm256_set1_epi64x(q);
  k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
    d = _mm256_sub_epi64(d, _mm256_mul_epi32(s, qv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), d);
  }
  for (; k < n; ++k) dst[k] -= q * src[k];
  return true;
}

bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept {
  const std::size_t n = out.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + k));
    const __m256i r = _mm256_and_si256(x, y);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), r);
    acc = _mm256_or_si256(acc, r);
  }
  std::uint64_t tail = 0;
  for (; k < n; ++k) {
    out[k] = a[k] & b[k];
    tail |= out[k];
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept {
  // Nibble lookup + horizontal byte sums.
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  const std::size_t n = a.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + k));
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < n; ++k) total += static_cast<std::uint64_t>(__builtin_popcountll(a[k]));
  return total;
}

void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept {
  const std::size_t n = out.size();
  if (n > 16 || second.size() > 16) {
    scalar::compose_perm(first, second, out);
    return;
  }
  alignas(16) std::uint8_t f[16] = {};
  alignas(16) std::uint8_t s[16] = {};
  alignas(16) std::uint8_t r[16];
  std::memcpy(f, first.data(), n);
  std::memcpy(s, second.data(), second.size());
  const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(f));
  const __m128i tab = _mm_load_si128(reinterpret_cast<const __m128i*>(s));
  _mm_store_si128(reinterpret_cast<__m128i*>(r), _mm_shuffle_epi8(tab, idx));
  std::memcpy(out.data(), r, n);
}

}  // namespace tbl::simd::avx2

#endif  // TBL_HAVE_AVX2_KERNELS
