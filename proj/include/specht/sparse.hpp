#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

/*
 * Sparse exact vectors and matrices.  Only nonzero entries are stored;
 * indices are 0-based and checked against the declared dimensions.
 * Matrices are kept column-major because the module actions are built
 * column by column and products only ever need column access.
 */

template <class F>
class SparseVector {
 public:
  explicit SparseVector(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("SparseVector: negative dimension");
  }

  int dim() const { return dim_; }
  const std::map<int, F>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  F get(int i) const {
    check(i);
    auto it = e_.find(i);
    return it == e_.end() ? F() : it->second;
  }

  void set(int i, const F& v) {
    check(i);
    if (v.is_zero())
      e_.erase(i);
    else
      e_.insert_or_assign(i, v);
  }

  void add(int i, const F& v) {
    check(i);
    auto it = e_.find(i);
    if (it == e_.end()) {
      if (!v.is_zero()) e_.emplace(i, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }

  // this += c * other
  void axpy(const F& c, const SparseVector& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("SparseVector: dimension mismatch");
    if (c.is_zero()) return;
    for (const auto& [i, v] : other.e_) add(i, c * v);
  }

  SparseVector& operator+=(const SparseVector& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("SparseVector: dimension mismatch");
    for (const auto& [i, v] : o.e_) add(i, v);
    return *this;
  }

  SparseVector& operator-=(const SparseVector& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("SparseVector: dimension mismatch");
    for (const auto& [i, v] : o.e_) add(i, -v);
    return *this;
  }

  SparseVector& operator*=(const F& c) {
    if (c.is_zero()) {
      e_.clear();
      return *this;
    }
    for (auto& [i, v] : e_) v = v * c;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const F& c) { return a *= c; }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

  // first nonzero coordinate, or (-1, 0) for the zero vector
  std::pair<int, F> leading() const {
    if (e_.empty()) return {-1, F()};
    return *e_.begin();
  }

  static SparseVector unit(int dim, int i, const F& one) {
    SparseVector v(dim);
    v.set(i, one);
    return v;
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector: index out of range");
  }
  int dim_;
  std::map<int, F> e_;
};

template <class F>
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), col_(cols, SparseVector<F>(rows)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVector<F>& col(int j) const {
    check_col(j);
    return col_[j];
  }
  SparseVector<F>& col(int j) {
    check_col(j);
    return col_[j];
  }

  F get(int i, int j) const { return col(j).get(i); }
  void set(int i, int j, const F& v) { col(j).set(i, v); }
  void add(int i, int j, const F& v) { col(j).add(i, v); }

  bool is_zero() const {
    for (const auto& c : col_)
      if (!c.is_zero()) return false;
    return true;
  }

  int nnz() const {
    int k = 0;
    for (const auto& c : col_) k += static_cast<int>(c.entries().size());
    return k;
  }

  SparseVector<F> apply(const SparseVector<F>& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("SparseMatrix: apply dimension mismatch");
    SparseVector<F> y(rows_);
    for (const auto& [j, xj] : x.entries()) y.axpy(xj, col_[j]);
    return y;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: product dimension mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    for (int j = 0; j < b.cols_; ++j) c.col_[j] = a.apply(b.col_[j]);
    return c;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SparseMatrix: sum dimension mismatch");
    for (int j = 0; j < a.cols_; ++j) a.col_[j] += b.col_[j];
    return a;
  }

  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SparseMatrix: difference dimension mismatch");
    for (int j = 0; j < a.cols_; ++j) a.col_[j] -= b.col_[j];
    return a;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  // rows as sparse vectors (transposed view), used by kernel computations
  std::vector<SparseVector<F>> row_vectors() const {
    std::vector<SparseVector<F>> rows(rows_, SparseVector<F>(cols_));
    for (int j = 0; j < cols_; ++j)
      for (const auto& [i, v] : col_[j].entries()) rows[i].set(j, v);
    return rows;
  }

  static SparseMatrix identity(int n, const F& one) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

 private:
  void check_col(int j) const {
    if (j < 0 || j >= cols_) throw std::out_of_range("SparseMatrix: column out of range");
  }
  int rows_, cols_;
  std::vector<SparseVector<F>> col_;
};

}  // namespace specht
