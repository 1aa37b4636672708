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

#pragma once

// Data-parallel inner loops used by the enumeration and elimination code.
//
// Every kernel has a portable scalar reference in `tbl::simd::scalar` and, on
// x86-64, an AVX2 variant in `tbl::simd::avx2`. The dispatching entry points
// in `tbl::simd` pick the variant once at startup from the CPU features; the
// choice can be pinned with `set_isa` (tests use this to compare variants).
// All variants produce bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>

namespace tbl::simd {

enum class Isa { Scalar, Avx2 };

/// Best variant the running CPU supports.
Isa detected_isa() noexcept;
/// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;
/// Pins the variant. Requesting an unsupported ISA falls back to Scalar.
void set_isa(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// dst[k] -= q * src[k] for all k. Returns false and leaves dst untouched if
/// any intermediate would overflow int64.
bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept;

/// out[k] = a[k] & b[k]; returns true iff any word of out is nonzero.
bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept;

/// Number of set bits across all words.
std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept;

/// out[k] = second[first[k]]: apply `first`, then `second`.
void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept;

namespace scalar {
bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept;
bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept;
std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept;
void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TBL_HAVE_AVX2_KERNELS 1
namespace avx2 {
bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept;
bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept;
std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept;
void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept;
}  // namespace avx2
#else
#define TBL_HAVE_AVX2_KERNELS 0
#endif

}  // namespace tbl::simd
