#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

#include "specht/hook_module.hpp"
#include "specht/subspace.hpp"

namespace specht {

/*
 * A subquotient sub/quot of a hook Specht module, with the induced
 * generator action.  The factor basis is canonical: insert the quotient's
 * echelon rows first, then the submodule's; the rows that enlarge the span
 * are coset representatives, and coordinates fall out of reduction against
 * the combined echelon basis.
 *
 * Closure of sub and quot under the action is the caller's claim; it is
 * what composition-series verification tests, so it is checked by
 * verify_closed() rather than assumed in the constructor.
 */
template <class F>
class Factor {
 public:
  Factor(std::shared_ptr<const HookSpechtModule<F>> parent, Subspace<F> sub, Subspace<F> quot)
      : parent_(std::move(parent)), sub_(std::move(sub)), quot_(std::move(quot)) {
    if (sub_.ambient() != parent_->dim() || quot_.ambient() != parent_->dim())
      throw std::invalid_argument("Factor: ambient dimension mismatch");
    if (!sub_.contains_subspace(quot_))
      throw std::invalid_argument("Factor: quotient space not contained in submodule");
    combined_ = quot_;
    for (const auto& row : sub_.rows()) {
      int pos = combined_.insert(row);
      if (pos >= 0) rep_pivots_.push_back(combined_.pivots()[pos]);
    }
    std::sort(rep_pivots_.begin(), rep_pivots_.end());
    for (int piv : rep_pivots_) {
      for (std::size_t k = 0; k < combined_.pivots().size(); ++k)
        if (combined_.pivots()[k] == piv) reps_.push_back(combined_.rows()[k]);
    }
  }

  static Factor whole(std::shared_ptr<const HookSpechtModule<F>> parent) {
    int d = parent->dim();
    std::vector<SparseVector<F>> units;
    for (int k = 0; k < d; ++k) units.push_back(parent->basis_vector(k));
    return Factor(parent, rref_span(units, d), Subspace<F>(d));
  }

  static Factor submodule(std::shared_ptr<const HookSpechtModule<F>> parent, Subspace<F> sub) {
    return Factor(parent, std::move(sub), Subspace<F>(parent->dim()));
  }

  static Factor quotient(std::shared_ptr<const HookSpechtModule<F>> parent, Subspace<F> quot) {
    Factor f = whole(parent);
    return Factor(f.parent_, f.sub_, std::move(quot));
  }

  const HookSpechtModule<F>& parent() const { return *parent_; }
  std::shared_ptr<const HookSpechtModule<F>> parent_ptr() const { return parent_; }
  const Subspace<F>& sub() const { return sub_; }
  const Subspace<F>& quot() const { return quot_; }
  int dim() const { return static_cast<int>(reps_.size()); }

  // coset representatives, in ambient coordinates
  const std::vector<SparseVector<F>>& reps() const { return reps_; }

  // factor coordinates of an ambient vector lying in sub (+ quot)
  SparseVector<F> coords(SparseVector<F> v) const {
    SparseVector<F> c(dim());
    for (std::size_t k = 0; k < combined_.rows().size(); ++k) {
      F coeff = v.get(combined_.pivots()[k]);
      if (coeff.is_zero()) continue;
      v.axpy(-coeff, combined_.rows()[k]);
      int r = rep_index(combined_.pivots()[k]);
      if (r >= 0) c.set(r, coeff);
    }
    if (!v.is_zero())
      throw std::invalid_argument("Factor::coords: vector does not lie in the submodule");
    return c;
  }

  SparseVector<F> lift(const SparseVector<F>& c) const {
    if (c.dim() != dim()) throw std::invalid_argument("Factor::lift: dimension mismatch");
    SparseVector<F> v(parent_->dim());
    for (const auto& [j, coeff] : c.entries()) v.axpy(coeff, reps_[j]);
    return v;
  }

  // action of a parent generator matrix in the factor basis
  SparseMatrix<F> induced(const SparseMatrix<F>& gen) const {
    SparseMatrix<F> m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.col(j) = coords(gen.apply(reps_[j]));
    return m;
  }

  std::vector<SparseMatrix<F>> induced_generators() const {
    std::vector<SparseMatrix<F>> out;
    for (const auto* g : parent_->generator_list()) out.push_back(induced(*g));
    return out;
  }

  // sub and quot are both closed under every generator
  bool verify_closed() const {
    for (const auto* g : parent_->generator_list()) {
      for (const auto& row : sub_.rows())
        if (!sub_.contains(g->apply(row))) return false;
      for (const auto& row : quot_.rows())
        if (!quot_.contains(g->apply(row))) return false;
    }
    return true;
  }

 private:
  int rep_index(int pivot) const {
    for (std::size_t i = 0; i < rep_pivots_.size(); ++i)
      if (rep_pivots_[i] == pivot) return static_cast<int>(i);
    return -1;
  }

  std::shared_ptr<const HookSpechtModule<F>> parent_;
  Subspace<F> sub_;
  Subspace<F> quot_;
  Subspace<F> combined_{0};
  std::vector<int> rep_pivots_;
  std::vector<SparseVector<F>> reps_;
};

}  // namespace specht
