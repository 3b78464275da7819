#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specht/field.hpp"
#include "specht/hook_action.hpp"
#include "specht/sparse.hpp"

namespace specht {

// an element of the module: basis labels with nonzero coefficients
template <class F>
using LinComb = std::map<LegSet, F>;

template <class F>
void lincomb_add(LinComb<F>& c, const LegSet& A, const F& v) {
  auto it = c.find(A);
  if (it == c.end()) {
    if (!v.is_zero()) c.emplace(A, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

/*
 * S_((n-m),(1^m)) over a chosen exact field: the shared field-free core
 * plus cached generator matrices.  Column k of each matrix is the action
 * on the k-th basis vector.  Matrices are built on first use; after that
 * the module is immutable and can be shared freely.
 */
template <class F>
class HookSpechtModule {
 public:
  HookSpechtModule(Params params, typename F::Context ctx, ActionTwist twist = {})
      : core_(std::make_shared<HookBasis>(params, twist)), ctx_(std::move(ctx)) {
    init();
  }
  HookSpechtModule(std::shared_ptr<const HookBasis> core, typename F::Context ctx)
      : core_(std::move(core)), ctx_(std::move(ctx)) {
    init();
  }

  const HookBasis& core() const { return *core_; }
  const Params& params() const { return core_->params(); }
  const typename F::Context& context() const { return ctx_; }
  int dim() const { return core_->dim(); }

  SparseVector<F> basis_vector(int k) const {
    return SparseVector<F>::unit(dim(), k, field_one<F>(ctx_));
  }
  SparseVector<F> basis_vector(const LegSet& A) const {
    return basis_vector(core_->index_of(A));
  }

  const SparseMatrix<F>& psi(int l) const {
    if (l < 1 || l >= params().n) throw std::out_of_range("psi: index must lie in 1..n-1");
    auto& slot = psi_[l - 1];
    if (!slot) {
      SparseMatrix<F> m(dim(), dim());
      for (int k = 0; k < dim(); ++k) {
        auto e = core_->psi_entry(l, k);
        if (e.sign) m.set(e.row, k, F::from_int(e.sign, ctx_));
      }
      slot = std::move(m);
    }
    return *slot;
  }

  const SparseMatrix<F>& y(int i) const {
    if (i < 1 || i > params().n) throw std::out_of_range("y: index must lie in 1..n");
    auto& slot = y_[i - 1];
    if (!slot) {
      SparseMatrix<F> m(dim(), dim());
      for (int k = 0; k < dim(); ++k) {
        auto e = core_->y_entry(i, k);
        if (e.sign) m.set(e.row, k, F::from_int(e.sign, ctx_));
      }
      slot = std::move(m);
    }
    return *slot;
  }

  // diagonal projector onto the basis vectors with residue sequence iseq;
  // the zero matrix when iseq does not occur
  const SparseMatrix<F>& idem(const ResidueSeq& iseq) const {
    int c = core_->iseq_index(iseq);
    if (c < 0) return zero_;
    return idem_class(c);
  }

  const SparseMatrix<F>& idem_class(int c) const {
    auto& slot = idem_[c];
    if (!slot) {
      SparseMatrix<F> m(dim(), dim());
      const F one = field_one<F>(ctx_);
      for (int k = 0; k < dim(); ++k)
        if (core_->iseq_class(k) == c) m.set(k, k, one);
      slot = std::move(m);
    }
    return *slot;
  }

  // fixed generator order: idempotents (lex by residue sequence), then
  // y_1..y_n, then psi_1..psi_{n-1}; spin and report paths rely on it
  std::vector<const SparseMatrix<F>*> generator_list() const {
    std::vector<const SparseMatrix<F>*> gens;
    for (int c = 0; c < static_cast<int>(core_->distinct_iseqs().size()); ++c)
      gens.push_back(&idem_class(c));
    for (int i = 1; i <= params().n; ++i) gens.push_back(&y(i));
    for (int l = 1; l < params().n; ++l) gens.push_back(&psi(l));
    return gens;
  }

  LinComb<F> idem_apply(const ResidueSeq& iseq, const LegSet& A) const {
    if (static_cast<int>(iseq.size()) != params().n)
      throw std::invalid_argument("idem_apply: residue sequence has wrong length");
    LinComb<F> out;
    if (core_->idem_hits(iseq, core_->index_of(A)))
      out.emplace(A, field_one<F>(ctx_));
    return out;
  }

  LinComb<F> psi_apply(int l, const LegSet& A) const {
    LinComb<F> out;
    SignedLeg s = psi_step(l, A, params(), core_->twist());
    if (!s.is_zero()) out.emplace(s.leg, F::from_int(s.sign, ctx_));
    return out;
  }

  LinComb<F> y_apply(int i, const LegSet& A) const {
    LinComb<F> out;
    SignedLeg s = y_step(i, A, params(), core_->twist());
    if (!s.is_zero()) out.emplace(s.leg, F::from_int(s.sign, ctx_));
    return out;
  }

  SparseVector<F> to_vector(const LinComb<F>& c) const {
    SparseVector<F> v(dim());
    for (const auto& [A, coeff] : c) v.set(core_->index_of(A), coeff);
    return v;
  }

 private:
  void init() {
    psi_.resize(params().n - 1);
    y_.resize(params().n);
    idem_.resize(core_->distinct_iseqs().size());
    zero_ = SparseMatrix<F>(dim(), dim());
  }

  std::shared_ptr<const HookBasis> core_;
  typename F::Context ctx_;
  mutable std::vector<std::optional<SparseMatrix<F>>> psi_;
  mutable std::vector<std::optional<SparseMatrix<F>>> y_;
  mutable std::vector<std::optional<SparseMatrix<F>>> idem_;
  SparseMatrix<F> zero_{0, 0};
};

}  // namespace specht
