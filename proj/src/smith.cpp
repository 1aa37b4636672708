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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tbl/error.hpp"
#include "tbl/kernels.hpp"
#include "tbl/matrix.hpp"

namespace tbl {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t magnitude(std::int64_t x) {
  if (x == INT64_MIN) throw std::overflow_error("integer overflow in matrix arithmetic");
  return x < 0 ? -x : x;
}

// Row-major working matrix plus optional left/right transforms. Row ops go
// through the SIMD axpy kernel; column ops are strided and stay scalar.
class SmithWorker {
 public:
  SmithWorker(IntegerMatrix a, bool track)
      : a_(std::move(a)), track_(track) {
    if (track_) {
      u_ = IntegerMatrix::identity(a_.rows());
      v_ = IntegerMatrix::identity(a_.cols());
    }
  }

  void run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (clear_column(t)) continue;
        if (clear_row(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
      rank_ = t + 1;
    }
  }

  IntegerMatrix& a() { return a_; }
  IntegerMatrix& u() { return u_; }
  IntegerMatrix& v() { return v_; }
  std::size_t rank() const { return rank_; }

 private:
  bool place_pivot(std::size_t t) {
    std::int64_t best = 0;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const std::int64_t x = a_(i, j);
        if (x == 0) continue;
        const std::int64_t m = magnitude(x);
        if (best == 0 || m < best) {
          best = m;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns true if the pivot changed and the sweep must restart.
  bool clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      const std::int64_t q = a_(i, t) / a_(t, t);
      if (q != 0) row_axpy(i, t, q);
      if (a_(i, t) != 0) {
        swap_rows(t, i);
        return true;
      }
    }
    return false;
  }

  bool clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      const std::int64_t q = a_(t, j) / a_(t, t);
      if (q != 0) col_axpy(j, t, q);
      if (a_(t, j) != 0) {
        swap_cols(t, j);
        return true;
      }
    }
    return false;
  }

  bool fix_divisibility(std::size_t t) {
    const std::int64_t p = a_(t, t);
    if (magnitude(p) == 1) return false;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) % p != 0) {
          row_axpy(t, i, -1);  // row t += row i
          return true;
        }
      }
    }
    return false;
  }

  void row_axpy(std::size_t dst, std::size_t src, std::int64_t q) {
    if (!simd::axpy_i64(a_.row(dst), a_.row(src), q)) throw std::overflow_error("integer overflow in matrix arithmetic");
    if (track_ && !simd::axpy_i64(u_.row(dst), u_.row(src), q)) {
      throw std::overflow_error("integer overflow in matrix arithmetic");
    }
  }

  void col_axpy(std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) = checked_sub(a_(i, dst), checked_mul(q, a_(i, src)));
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) = checked_sub(v_(i, dst), checked_mul(q, v_(i, src)));
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap_ranges(a_.row(x).begin(), a_.row(x).end(), a_.row(y).begin());
    if (track_) std::swap_ranges(u_.row(x).begin(), u_.row(x).end(), u_.row(y).begin());
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, x), v_(i, y));
    }
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_.row(t)) x = checked_sub(0, x);
    if (track_) {
      for (auto& x : u_.row(t)) x = checked_sub(0, x);
    }
  }

  IntegerMatrix a_;
  IntegerMatrix u_;
  IntegerMatrix v_;
  bool track_;
  std::size_t rank_ = 0;
};

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// dst -= q * src on sorted sparse rows.
SparseRow sparse_axpy(const SparseRow& dst, const SparseRow& src, std::int64_t q) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, checked_sub(0, checked_mul(q, src[j].second)));
      ++j;
    } else {
      const std::int64_t v = checked_sub(dst[i].second, checked_mul(q, src[j].second));
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(col, INT64_MIN));
  return (it != row.end() && it->first == col) ? it->second : 0;
}

AbelianInvariants invariants_from_sparse(std::vector<SparseRow> rows, std::size_t cols) {
  // Column occupancy: which live rows have a nonzero in each column.
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }
  std::vector<bool> row_alive(rows.size(), true);
  std::size_t unit_rank = 0;

  auto refresh_col = [&](std::uint32_t c) {
    auto& list = col_rows[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t r) { return !row_alive[r] || entry(rows[r], c) == 0; });
  };

  // Eliminate on +-1 entries, Markowitz-style: prefer short rows and columns.
  for (;;) {
    std::size_t best_cost = SIZE_MAX;
    std::uint32_t pr = 0;
    std::uint32_t pc = 0;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r] || rows[r].empty()) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_cost == SIZE_MAX) break;

    const std::int64_t pv = entry(rows[pr], pc);
    const SparseRow pivot = rows[pr];
    row_alive[pr] = false;
    for (std::uint32_t r : std::vector<std::uint32_t>(col_rows[pc])) {
      if (r == pr || !row_alive[r]) continue;
      const std::int64_t factor = checked_mul(entry(rows[r], pc), pv);  // pv is its own inverse
      rows[r] = sparse_axpy(rows[r], pivot, factor);
      // Fill-in and cancellation can only happen in the pivot row's columns.
      for (const auto& [c, v] : pivot) col_rows[c].push_back(r);
    }
    for (const auto& [c, v] : pivot) refresh_col(c);
    col_rows[pc].clear();
    ++unit_rank;
  }

  // Dense Smith form on the remaining block.
  std::vector<std::uint32_t> live_cols;
  std::vector<std::int64_t> col_map(cols, -1);
  for (std::uint32_t c = 0; c < cols; ++c) {
    refresh_col(c);
    if (!col_rows[c].empty()) {
      col_map[c] = static_cast<std::int64_t>(live_cols.size());
      live_cols.push_back(c);
    }
  }
  std::vector<std::uint32_t> live_rows;
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  IntegerMatrix dense(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) dense(i, static_cast<std::size_t>(col_map[c])) = v;
  }
  const auto factors = smith_invariant_factors(dense);

  AbelianInvariants out;
  for (auto d : factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = cols - unit_rank - factors.size();
  return out;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in product");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  }
  return c;
}

std::int64_t determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s * n + k] == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[s * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  const __int128 d = sign * a[n * n - 1];
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant exceeds int64");
  return static_cast<std::int64_t>(d);
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithWorker w(m, true);
  w.run();
  return {std::move(w.a()), std::move(w.u()), std::move(w.v())};
}

std::vector<std::int64_t> smith_invariant_factors(const IntegerMatrix& m) {
  SmithWorker w(m, false);
  w.run();
  std::vector<std::int64_t> out;
  for (std::size_t t = 0; t < w.rank(); ++t) out.push_back(w.a()(t, t));
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::string out;
  for (auto d : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + std::to_string(d);
  }
  if (a.free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  }
  return out.empty() ? "0" : out;
}

IntegerMatrix exponent_sum_matrix(const Presentation& p) {
  IntegerMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    for (const Letter& l : p.relators()[r].letters()) m(r, l.gen) += l.exp;
  }
  return m;
}

AbelianInvariants cokernel_invariants(const IntegerMatrix& relations) {
  std::vector<SparseRow> rows(relations.rows());
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    for (std::size_t c = 0; c < relations.cols(); ++c) {
      if (relations(r, c) != 0) rows[r].emplace_back(static_cast<std::uint32_t>(c), relations(r, c));
    }
  }
  return invariants_from_sparse(std::move(rows), relations.cols());
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  std::vector<SparseRow> rows;
  rows.reserve(p.relator_count());
  for (const Word& w : p.relators()) {
    std::map<std::uint32_t, std::int64_t> sums;
    for (const Letter& l : w.letters()) sums[l.gen] += l.exp;
    SparseRow row;
    for (const auto& [c, v] : sums) {
      if (v != 0) row.emplace_back(c, v);
    }
    rows.push_back(std::move(row));
  }
  return invariants_from_sparse(std::move(rows), p.generator_count());
}

}  // namespace tbl
