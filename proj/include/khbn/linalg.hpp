#pragma once

#include <cstdint>
#include <vector>

namespace khbn {

// Dense bit matrix over F2, rows stored as packed 64-bit words.
class MatrixF2 {
 public:
  MatrixF2() = default;
  MatrixF2(int rows, int cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(static_cast<std::size_t>(rows) * stride_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (data_[static_cast<std::size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    auto& w = data_[static_cast<std::size_t>(r) * stride_ + c / 64];
    const std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v)
      w |= m;
    else
      w &= ~m;
  }
  void flip(int r, int c) {
    data_[static_cast<std::size_t>(r) * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  void xor_row(int dst, int src) {
    for (int w = 0; w < stride_; ++w)
      data_[static_cast<std::size_t>(dst) * stride_ + w] ^= data_[static_cast<std::size_t>(src) * stride_ + w];
  }

  int rank() const {
    MatrixF2 m = *this;
    return m.reduce(nullptr);
  }

  // Basis of the right kernel; each vector has cols() entries.
  std::vector<std::vector<bool>> kernel_basis() const {
    MatrixF2 m = *this;
    std::vector<int> pivot_col;
    m.reduce(&pivot_col);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col)
      if (c >= 0) is_pivot[c] = true;

    std::vector<std::vector<bool>> basis;
    for (int fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<bool> v(cols_, false);
      v[fc] = true;
      // Back-substitute: pivot row r has pivot at pivot_col[r].
      for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        if (pivot_col[r] >= 0 && m.get(static_cast<int>(r), fc)) v[pivot_col[r]] = true;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  int nullity() const { return cols_ - rank(); }

 private:
  // Row-reduces in place; returns rank. If pivot_cols is non-null it
  // receives the pivot column of each of the first `rank` rows.
  int reduce(std::vector<int>* pivot_cols) {
    int r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int rr = r; rr < rows_; ++rr) {
        if (get(rr, c)) {
          p = rr;
          break;
        }
      }
      if (p < 0) continue;
      if (p != r) swap_rows(p, r);
      for (int rr = 0; rr < rows_; ++rr)
        if (rr != r && get(rr, c)) xor_row(rr, r);
      if (pivot_cols) pivot_cols->push_back(c);
      ++r;
    }
    return r;
  }

  void swap_rows(int a, int b) {
    for (int w = 0; w < stride_; ++w)
      std::swap(data_[static_cast<std::size_t>(a) * stride_ + w], data_[static_cast<std::size_t>(b) * stride_ + w]);
  }

  int rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace khbn
