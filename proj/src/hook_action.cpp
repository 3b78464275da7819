#include "specht/hook_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

namespace {

inline int twisted(int sign, int case_id, int flipped_case) {
  return case_id == flipped_case ? -sign : sign;
}

}  // namespace

SignedLeg psi_step(int l, const LegSet& A, const Params& params, const ActionTwist& twist) {
  if (l < 1 || l >= params.n) throw std::out_of_range("psi_step: index must lie in 1..n-1");
  const bool in_l = A.contains(l);
  const bool in_l1 = A.contains(l + 1);

  if (in_l && !in_l1)
    return {twisted(+1, 1, twist.flip_psi_case), A.replaced(l, l + 1)};

  const int cls = params.res_class(l);
  if (cls == 0) {
    const bool in_l2 = l + 2 <= params.n && A.contains(l + 2);
    if (!in_l && in_l1 && in_l2)
      return {twisted(+1, 2, twist.flip_psi_case),
              A.replaced(l + 1, l).replaced(l + 2, l + 1)};
    if (!in_l && !in_l1 && in_l2)
      return {twisted(-1, 3, twist.flip_psi_case), A.replaced(l + 2, l)};
  } else if (cls == 2) {
    const bool in_lm1 = l >= 2 && A.contains(l - 1);
    if (l >= 2 && !in_lm1) {
      if (in_l && in_l1)
        return {twisted(+1, 4, twist.flip_psi_case),
                A.replaced(l, l - 1).replaced(l + 1, l)};
      if (!in_l && in_l1)
        return {twisted(-1, 5, twist.flip_psi_case), A.replaced(l + 1, l - 1)};
    }
  } else if (cls != 1) {
    if (!in_l && in_l1)
      return {twisted(+1, 6, twist.flip_psi_case), A.replaced(l + 1, l)};
  }
  return {};
}

SignedLeg y_step(int i, const LegSet& A, const Params& params, const ActionTwist& twist) {
  if (i < 1 || i > params.n) throw std::out_of_range("y_step: index must lie in 1..n");
  const int cls = params.res_class(i);
  if (cls == 1 && i + 1 <= params.n && !A.contains(i) && A.contains(i + 1))
    return {twisted(-1, 1, twist.flip_y_case), A.replaced(i + 1, i)};
  if (cls == 2 && i >= 2 && A.contains(i) && !A.contains(i - 1))
    return {twisted(+1, 2, twist.flip_y_case), A.replaced(i, i - 1)};
  return {};
}

SignedLeg apply_word(const GenWord& word, const LegSet& A, const Params& params,
                     const ActionTwist& twist) {
  SignedLeg cur{word.sign, A};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    SignedLeg step = psi_step(*it, cur.leg, params, twist);
    if (step.is_zero()) return {};
    cur.sign *= step.sign;
    cur.leg = std::move(step.leg);
  }
  return cur;
}

HookBasis::HookBasis(Params params, ActionTwist twist)
    : params_(params), twist_(twist), basis_(enumerate_standard_hook(params)) {
  for (int k = 0; k < dim(); ++k) index_.emplace(basis_[k], k);
  class_of_.resize(dim());
  std::map<ResidueSeq, std::vector<int>> by_seq;
  for (int k = 0; k < dim(); ++k)
    by_seq[residue_sequence_hook(params_, basis_[k])].push_back(k);
  for (const auto& [seq, members] : by_seq) {
    for (int k : members) class_of_[k] = static_cast<int>(iseqs_.size());
    iseqs_.push_back(seq);
  }
}

int HookBasis::index_of(const LegSet& A) const {
  auto it = index_.find(A);
  if (it == index_.end()) throw std::invalid_argument("HookBasis: label outside the basis");
  return it->second;
}

int HookBasis::iseq_index(const ResidueSeq& iseq) const {
  auto it = std::lower_bound(iseqs_.begin(), iseqs_.end(), iseq);
  if (it == iseqs_.end() || *it != iseq) return -1;
  return static_cast<int>(it - iseqs_.begin());
}

HookBasis::Entry HookBasis::to_entry(const SignedLeg& s) const {
  if (s.is_zero()) return {};
  return {s.sign, index_of(s.leg)};
}

HookBasis::Entry HookBasis::psi_entry(int l, int k) const {
  return to_entry(psi_step(l, basis_.at(k), params_, twist_));
}

HookBasis::Entry HookBasis::y_entry(int i, int k) const {
  return to_entry(y_step(i, basis_.at(k), params_, twist_));
}

bool HookBasis::idem_hits(const ResidueSeq& iseq, int k) const {
  return iseq_of(k) == iseq;
}

}  // namespace specht
