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

// Exact integer matrices, Smith normal form and abelian invariants.
//
// All arithmetic is int64 with overflow detection; an overflow raises
// std::overflow_error rather than producing a wrong answer.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tbl/words.hpp"

namespace tbl {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
/// Exact determinant (fraction-free Bareiss). Square matrices only.
std::int64_t determinant(const IntegerMatrix& m);
std::string to_string(const IntegerMatrix& m);

/// U * M * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
};

/// Pivot rule: smallest nonzero magnitude in the remaining block, then row
/// and column reduction by truncated division.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Nonzero invariant factors only (length = rank), without transforms.
std::vector<std::int64_t> smith_invariant_factors(const IntegerMatrix& m);

struct AbelianInvariants {
  std::vector<std::int64_t> torsion;  // each >= 2, divisibility chain
  std::size_t free_rank = 0;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

/// One row per relator, one column per generator, entries = exponent sums.
IntegerMatrix exponent_sum_matrix(const Presentation& p);

/// Cokernel of a relation matrix with `generators` columns. Uses sparse
/// elimination on unit entries first, then a dense Smith form on what is left,
/// so it scales to the large sparse matrices produced by subgroup rewriting.
AbelianInvariants cokernel_invariants(const IntegerMatrix& relations);

/// Abelianization of the group presented by p.
AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace tbl
