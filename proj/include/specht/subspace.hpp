#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "specht/field.hpp"
#include "specht/sparse.hpp"

namespace specht {

/*
 * Subspaces in reduced row-echelon form.
 *
 * The basis rows are kept fully reduced at all times: pivots strictly
 * increasing, each pivot entry 1 and the only nonzero in its column among
 * the basis rows.  This makes the representation canonical, so subspace
 * equality is plain row-by-row comparison and spanning-set order never
 * matters.
 */

template <class F>
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {
    if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Fully reduces v against the basis; the residual is zero iff v lies in
  // the subspace.
  SparseVector<F> reduce(SparseVector<F> v) const {
    check_vec(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      F c = v.get(pivots_[k]);
      if (!c.is_zero()) v.axpy(-c, rows_[k]);
    }
    return v;
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

  bool contains_subspace(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  // Inserts v, keeping the basis in reduced echelon form.  Returns the
  // position of the new row, or -1 if v was already in the span.
  int insert(SparseVector<F> v) {
    v = reduce(std::move(v));
    auto [piv, lead] = v.leading();
    if (piv < 0) return -1;
    v *= lead.inv();
    // back-eliminate the new pivot from the existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      F c = rows_[k].get(piv);
      if (!c.is_zero()) rows_[k].axpy(-c, v);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return static_cast<int>(pos);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_vec(const SparseVector<F>& v) const {
    if (v.dim() != ambient_) throw std::invalid_argument("Subspace: vector dimension mismatch");
  }
  int ambient_;
  std::vector<SparseVector<F>> rows_;
  std::vector<int> pivots_;
};

template <class F>
Subspace<F> rref_span(const std::vector<SparseVector<F>>& vectors, int ambient) {
  Subspace<F> s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

/*
 * Smallest subspace containing the seeds and closed under every generator.
 * Worklist order is seeds first, then generator images breadth-first, with
 * incremental echelonization, so the result (and the work done to reach
 * it) is deterministic.
 *
 * early_stop_dim: if nonnegative, expansion stops once the span reaches
 * that dimension.  Only valid when the caller knows the closure cannot
 * exceed it (e.g. spinning inside a known submodule).
 */
template <class F>
Subspace<F> spin(const std::vector<SparseVector<F>>& seeds,
                 const std::vector<const SparseMatrix<F>*>& generators,
                 int early_stop_dim = -1) {
  int ambient = -1;
  if (!seeds.empty()) ambient = seeds.front().dim();
  for (const auto* g : generators) {
    if (g->rows() != g->cols()) throw std::invalid_argument("spin: generator not square");
    if (ambient < 0) ambient = g->rows();
    if (g->rows() != ambient) throw std::invalid_argument("spin: generator dimension mismatch");
  }
  if (ambient < 0) throw std::invalid_argument("spin: cannot infer ambient dimension");

  Subspace<F> s(ambient);
  std::deque<SparseVector<F>> work;
  for (const auto& v : seeds) {
    if (v.dim() != ambient) throw std::invalid_argument("spin: seed dimension mismatch");
    int r = s.insert(v);
    if (r >= 0) work.push_back(s.rows()[r]);
  }
  while (!work.empty()) {
    if (early_stop_dim >= 0 && s.dim() >= early_stop_dim) break;
    SparseVector<F> b = std::move(work.front());
    work.pop_front();
    for (const auto* g : generators) {
      int r = s.insert(g->apply(b));
      if (r >= 0) work.push_back(s.rows()[r]);
      if (early_stop_dim >= 0 && s.dim() >= early_stop_dim) return s;
    }
  }
  return s;
}

// (column space, null space) of a rectangular matrix; rank-nullity holds by
// construction.
template <class F>
std::pair<Subspace<F>, Subspace<F>> map_image_kernel(const SparseMatrix<F>& m,
                                                     const typename F::Context& ctx) {
  std::vector<SparseVector<F>> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  Subspace<F> image = rref_span(cols, m.rows());

  Subspace<F> rowspace = rref_span(m.row_vectors(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rowspace.pivots()) is_pivot[p] = true;
  const F one = field_one<F>(ctx);
  std::vector<SparseVector<F>> kvecs;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector<F> v(m.cols());
    v.set(f, one);
    for (std::size_t k = 0; k < rowspace.rows().size(); ++k) {
      F c = rowspace.rows()[k].get(f);
      if (!c.is_zero()) v.set(rowspace.pivots()[k], -c);
    }
    kvecs.push_back(std::move(v));
  }
  Subspace<F> kernel = rref_span(kvecs, m.cols());
  return {image, kernel};
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient mismatch");
  Subspace<F> s(a.ambient());
  for (const auto& r : a.rows()) s.insert(r);
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

// {x : M x in W}, as a subspace of the domain of M
template <class F>
Subspace<F> preimage(const SparseMatrix<F>& m, const Subspace<F>& w,
                     const typename F::Context& ctx) {
  if (w.ambient() != m.rows()) throw std::invalid_argument("preimage: ambient mismatch");
  SparseMatrix<F> residual(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) residual.col(j) = w.reduce(m.col(j));
  return map_image_kernel(residual, ctx).second;
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b,
                               const typename F::Context& ctx) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  // coefficient vectors c with sum_i c_i a_i lying in b
  SparseMatrix<F> basis_of_a(a.ambient(), a.dim());
  for (int i = 0; i < a.dim(); ++i) basis_of_a.col(i) = a.rows()[i];
  Subspace<F> coeffs = preimage(basis_of_a, b, ctx);
  std::vector<SparseVector<F>> vecs;
  for (const auto& c : coeffs.rows()) vecs.push_back(basis_of_a.apply(c));
  return rref_span(vecs, a.ambient());
}

}  // namespace specht
