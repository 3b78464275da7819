#pragma once

#include <map>
#include <memory>
#include <vector>

#include "specht/combinatorics.hpp"

namespace specht {

/*
 * The explicit action of the cyclotomic KLR generators on the standard
 * basis of S_((n-m),(1^m)).
 *
 * Every generator sends a basis vector v(A) to zero or to a single signed
 * basis vector, so the whole action is captured by the field-free steps
 * below.  The psi action splits into six cases keyed by the residue class
 * of the index l relative to kappa_2 - kappa_1 and by which of l-1, l,
 * l+1, l+2 lie in the leg:
 *
 *   (1)  l in A, l+1 not in A                  ->  + v(A: l -> l+1)
 *   class 0 (l = kappa_2-kappa_1):
 *   (2)  l+1, l+2 in A, l not in A             ->  + v(A: l+1,l+2 -> l,l+1)
 *   (3)  l+2 in A, l, l+1 not in A             ->  - v(A: l+2 -> l)
 *   class 2 (l = kappa_2-kappa_1+2), l >= 2:
 *   (4)  l, l+1 in A, l-1 not in A             ->  + v(A: l,l+1 -> l-1,l)
 *   (5)  l+1 in A, l-1, l not in A             ->  - v(A: l+1 -> l-1)
 *   class not in {0,1,2}:
 *   (6)  l+1 in A, l not in A                  ->  + v(A: l+1 -> l)
 *
 * and everything else is zero.  The y action is nonzero in exactly two
 * situations:
 *
 *   (a)  i = kappa_2-kappa_1+1, i not in A, i+1 in A  ->  - v(A: i+1 -> i)
 *   (b)  i = kappa_2-kappa_1+2, i in A, i-1 not in A,
 *        i >= 2                                       ->  + v(A: i -> i-1)
 *
 * Cases (4), (5) and (b) carry the guard l >= 2 resp. i >= 2: the listed
 * substitution would otherwise name a nonexistent entry 0, and the vector
 * is annihilated in that situation.
 */

// Fault-injection hook for the verification suite: flips the sign of one
// named case so tests can confirm the relation oracle detects it.  Never
// set outside tests.
struct ActionTwist {
  int flip_psi_case = 0;  // 1..6
  int flip_y_case = 0;    // 1 (case a) or 2 (case b)

  bool trivial() const { return flip_psi_case == 0 && flip_y_case == 0; }
};

// zero (sign == 0) or a signed basis label
struct SignedLeg {
  int sign = 0;
  LegSet leg;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const SignedLeg&, const SignedLeg&) = default;
};

SignedLeg psi_step(int l, const LegSet& A, const Params& params,
                   const ActionTwist& twist = {});
SignedLeg y_step(int i, const LegSet& A, const Params& params,
                 const ActionTwist& twist = {});

// linear extension over a psi word (rightmost letter first); the result is
// again zero or a single signed basis vector
SignedLeg apply_word(const GenWord& word, const LegSet& A, const Params& params,
                     const ActionTwist& twist = {});

/*
 * Field-free core of one hook Specht module: the lexicographically ordered
 * standard basis, the residue sequence attached to each basis vector, and
 * generator actions in index form.  Field-specific matrices are built on
 * top of this (hook_module.hpp), so a basis can be shared between runs
 * over Q and several prime fields.
 */
class HookBasis {
 public:
  explicit HookBasis(Params params, ActionTwist twist = {});

  const Params& params() const { return params_; }
  const ActionTwist& twist() const { return twist_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<LegSet>& basis() const { return basis_; }
  const LegSet& leg(int k) const { return basis_.at(k); }
  int index_of(const LegSet& A) const;  // throws for labels outside the basis

  const ResidueSeq& iseq_of(int k) const { return iseqs_[class_of_.at(k)]; }
  int iseq_class(int k) const { return class_of_.at(k); }
  const std::vector<ResidueSeq>& distinct_iseqs() const { return iseqs_; }
  int iseq_index(const ResidueSeq& iseq) const;  // -1 if not occurring

  // generator actions on basis vector k, as signed basis indices
  struct Entry {
    int sign = 0;  // 0 means the column is zero
    int row = -1;
  };
  Entry psi_entry(int l, int k) const;
  Entry y_entry(int i, int k) const;
  bool idem_hits(const ResidueSeq& iseq, int k) const;

  Entry to_entry(const SignedLeg& s) const;

 private:
  Params params_;
  ActionTwist twist_;
  std::vector<LegSet> basis_;
  std::map<LegSet, int> index_;
  std::vector<ResidueSeq> iseqs_;
  std::vector<int> class_of_;
};

}  // namespace specht
