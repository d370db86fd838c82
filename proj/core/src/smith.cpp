// Copyright 2026 The platcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "platcalc/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "platcalc/error.hpp"

namespace platcalc {

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols)) throw Error("matrix shape mismatch");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      for (int j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
  return out;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(IntMatrix& m, int a, int b) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row[dst] += k * row[src]
void add_row(IntMatrix& m, int dst, int src, std::int64_t k) {
  for (int c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}
void add_col(IntMatrix& m, int dst, int src, std::int64_t k) {
  for (int r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}
void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  SmithForm f{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& d = f.D;

  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (d(r, c) != 0 && (pr < 0 || std::llabs(d(r, c)) < std::llabs(d(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) goto done;
      swap_rows(d, t, pr);
      swap_rows(f.U, t, pr);
      swap_cols(d, t, pc);
      swap_cols(f.V, t, pc);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const std::int64_t q = d(r, t) / d(t, t);
        add_row(d, r, t, -q);
        add_row(f.U, r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        const std::int64_t q = d(t, c) / d(t, t);
        add_col(d, c, t, -q);
        add_col(f.V, c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      int bad_r = -1;
      for (int r = t + 1; r < rows && bad_r < 0; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      add_row(d, t, bad_r, 1);
      add_row(f.U, t, bad_r, 1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(f.U, t);
    }
  }
done:
  return f;
}

}  // namespace platcalc
