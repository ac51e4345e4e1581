#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fmm/rational.hpp"

namespace fmm {

// Dense matrix of exact coefficients, row-major. Zero entries are stored.
class CoeffMatrix {
 public:
  CoeffMatrix() : rows_(0), cols_(0) {}
  CoeffMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Coeff& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  CoeffMatrix transposed() const {
    CoeffMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : e_) n += !c.is_zero();
    return n;
  }
  std::size_t row_weight(std::size_t i) const {
    std::size_t n = 0;
    for (std::size_t j = 0; j < cols_; ++j) n += !at(i, j).is_zero();
    return n;
  }

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CoeffMatrix: shape mismatch");
    CoeffMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }
  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<double> to_doubles() const {
    std::vector<double> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i].to_double();
    return v;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Coeff> e_;
};

// Plain dense double matrix, row-major.
struct DMat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  DMat() = default;
  DMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

}  // namespace fmm
