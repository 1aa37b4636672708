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

#include <atomic>

#include "tbl/kernels.hpp"

namespace tbl::simd {

namespace {

Isa probe() noexcept {
#if TBL_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2:
      return "avx2";
    case Isa::Scalar:
      break;
  }
  return "scalar";
}

#if TBL_HAVE_AVX2_KERNELS
#define TBL_DISPATCH(fn, ...) \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define TBL_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
              std::int64_t q) noexcept {
  return TBL_DISPATCH(axpy_i64, dst, src, q);
}

bool and_words(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) noexcept {
  return TBL_DISPATCH(and_words, out, a, b);
}

std::uint64_t popcount_words(std::span<const std::uint64_t> a) noexcept {
  return TBL_DISPATCH(popcount_words, a);
}

void compose_perm(std::span<const std::uint8_t> first,
                  std::span<const std::uint8_t> second,
                  std::span<std::uint8_t> out) noexcept {
  TBL_DISPATCH(compose_perm, first, second, out);
}

#undef TBL_DISPATCH

}  // namespace tbl::simd
