#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "specht/field.hpp"
#include "specht/hook_action.hpp"

namespace specht {

/*
 * KLR presentation oracle.
 *
 * The module is *defined* by the explicit action tables, so this check is
 * the master correctness argument: the tables are correct iff every
 * defining relation of the cyclotomic KLR algebra (plus the Specht
 * generator relations) holds as an exact matrix identity on the module.
 * Matrices agree iff they agree on all basis vectors, so each relation is
 * checked column by column through the field-free action steps; every
 * intermediate value is a combination of at most three signed basis
 * vectors, which keeps the sweep over the full parameter grid cheap.
 */

struct RelationFailure {
  std::string relation;
  std::string iseq;
  std::string basis_label;
  std::string detail;
};

struct KlrReport {
  bool passed = true;
  long long checks = 0;
  std::vector<RelationFailure> failures;

  static constexpr std::size_t kMaxRecorded = 16;

  void record(RelationFailure f) {
    passed = false;
    if (failures.size() < kMaxRecorded) failures.push_back(std::move(f));
  }
};

template <class F>
class KlrChecker {
 public:
  KlrChecker(const HookBasis& core, typename F::Context ctx)
      : b_(core), ctx_(std::move(ctx)), one_(field_one<F>(ctx_)) {}

  KlrReport run() {
    KlrReport rep;
    const int n = b_.params().n;
    check_idem_partition(rep);
    check_generator_idem(rep);
    for (int r = 1; r <= n; ++r)
      for (int s = r + 1; s <= n; ++s) check_commute(rep, "yy-comm", YGen{r}, YGen{s});
    for (int r = 1; r < n; ++r)
      for (int s = 1; s <= n; ++s)
        if (s != r && s != r + 1) check_commute(rep, "psiy-comm", PsiGen{r}, YGen{s});
    for (int r = 1; r < n; ++r)
      for (int s = r + 2; s < n; ++s) check_commute(rep, "psipsi-comm", PsiGen{r}, PsiGen{s});
    for (int r = 1; r < n; ++r) check_psi_y_mixed(rep, r);
    for (int r = 1; r < n; ++r) check_quadratic(rep, r);
    for (int r = 1; r + 1 < n; ++r) check_braid(rep, r);
    check_cyclotomic(rep);
    check_generator_relations(rep);
    return rep;
  }

 private:
  using Terms = std::map<int, F>;  // basis index -> coefficient

  struct YGen {
    int i;
    std::string name() const { return "y" + std::to_string(i); }
  };
  struct PsiGen {
    int l;
    std::string name() const { return "psi" + std::to_string(l); }
  };

  Terms unit(int k) const { return {{k, one_}}; }

  void add_term(Terms& t, int k, const F& c) const {
    auto it = t.find(k);
    if (it == t.end()) {
      if (!c.is_zero()) t.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }

  Terms step(const HookBasis::Entry& e, const F& c) const {
    Terms out;
    if (e.sign) out.emplace(e.row, c * F::from_int(e.sign, ctx_));
    return out;
  }

  Terms apply(const YGen& g, const Terms& t) const {
    Terms out;
    for (const auto& [k, c] : t) {
      auto e = b_.y_entry(g.i, k);
      if (e.sign) add_term(out, e.row, c * F::from_int(e.sign, ctx_));
    }
    return out;
  }

  Terms apply(const PsiGen& g, const Terms& t) const {
    Terms out;
    for (const auto& [k, c] : t) {
      auto e = b_.psi_entry(g.l, k);
      if (e.sign) add_term(out, e.row, c * F::from_int(e.sign, ctx_));
    }
    return out;
  }

  Terms plus(Terms a, const Terms& bb) const {
    for (const auto& [k, c] : bb) add_term(a, k, c);
    return a;
  }

  Terms minus(Terms a, const Terms& bb) const {
    for (const auto& [k, c] : bb) add_term(a, k, -c);
    return a;
  }

  std::string terms_str(const Terms& t) const {
    std::ostringstream os;
    if (t.empty()) return "0";
    bool first = true;
    for (const auto& [k, c] : t) {
      if (!first) os << " + ";
      first = false;
      os << c.str() << "*v" << b_.leg(k).str();
    }
    return os.str();
  }

  void expect(KlrReport& rep, const std::string& relation, int k, const Terms& lhs,
              const Terms& rhs) const {
    ++rep.checks;
    if (lhs == rhs) return;
    rep.record({relation, residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                "lhs = " + terms_str(lhs) + ", rhs = " + terms_str(rhs)});
  }

  // sum of the occurring idempotents is the identity and the classes are
  // disjoint: every basis vector is hit by exactly one residue sequence
  void check_idem_partition(KlrReport& rep) const {
    for (int k = 0; k < b_.dim(); ++k) {
      ++rep.checks;
      int hits = 0;
      for (const auto& iseq : b_.distinct_iseqs())
        if (b_.idem_hits(iseq, k)) ++hits;
      if (hits != 1)
        rep.record({"idem-partition", residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                    "basis vector hit by " + std::to_string(hits) + " idempotents"});
    }
  }

  // y_r e(i) = e(i) y_r and psi_r e(i) = e(s_r i) psi_r, checked as: the
  // image of a basis vector lands in the expected residue class
  void check_generator_idem(KlrReport& rep) const {
    const int n = b_.params().n;
    for (int k = 0; k < b_.dim(); ++k) {
      for (int i = 1; i <= n; ++i) {
        ++rep.checks;
        auto e = b_.y_entry(i, k);
        if (e.sign && b_.iseq_of(e.row) != b_.iseq_of(k))
          rep.record({"y-idem", residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                      "y" + std::to_string(i) + " changed the residue sequence"});
      }
      for (int l = 1; l < n; ++l) {
        ++rep.checks;
        auto e = b_.psi_entry(l, k);
        if (!e.sign) continue;
        ResidueSeq swapped = b_.iseq_of(k);
        std::swap(swapped[l - 1], swapped[l]);
        if (b_.iseq_of(e.row) != swapped)
          rep.record({"psi-idem", residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                      "psi" + std::to_string(l) + " image not in e(s_l i) class"});
      }
    }
  }

  template <class G1, class G2>
  void check_commute(KlrReport& rep, const std::string& relation, const G1& g1, const G2& g2) {
    for (int k = 0; k < b_.dim(); ++k) {
      Terms lhs = apply(g1, apply(g2, unit(k)));
      Terms rhs = apply(g2, apply(g1, unit(k)));
      expect(rep, relation + ":" + g1.name() + "," + g2.name(), k, lhs, rhs);
    }
  }

  // psi_r y_{r+1} e(i) = (y_r psi_r + delta_{i_r,i_{r+1}}) e(i) and its
  // mirror y_{r+1} psi_r e(i) = (psi_r y_r + delta) e(i)
  void check_psi_y_mixed(KlrReport& rep, int r) {
    for (int k = 0; k < b_.dim(); ++k) {
      const ResidueSeq& iseq = b_.iseq_of(k);
      const bool delta = iseq[r - 1] == iseq[r];
      Terms dk = delta ? unit(k) : Terms{};
      {
        Terms lhs = apply(PsiGen{r}, apply(YGen{r + 1}, unit(k)));
        Terms rhs = plus(apply(YGen{r}, apply(PsiGen{r}, unit(k))), dk);
        expect(rep, "psi-y-up:r" + std::to_string(r), k, lhs, rhs);
      }
      {
        Terms lhs = apply(YGen{r + 1}, apply(PsiGen{r}, unit(k)));
        Terms rhs = plus(apply(PsiGen{r}, apply(YGen{r}, unit(k))), dk);
        expect(rep, "y-psi-down:r" + std::to_string(r), k, lhs, rhs);
      }
    }
  }

  void check_quadratic(KlrReport& rep, int r) {
    const int e = b_.params().e;
    for (int k = 0; k < b_.dim(); ++k) {
      const ResidueSeq& iseq = b_.iseq_of(k);
      const int ir = iseq[r - 1], ir1 = iseq[r];
      Terms lhs = apply(PsiGen{r}, apply(PsiGen{r}, unit(k)));
      Terms rhs;
      if (ir == ir1) {
        // zero
      } else if (ir1 == mod_e(ir + 1, e)) {
        rhs = minus(apply(YGen{r + 1}, unit(k)), apply(YGen{r}, unit(k)));
      } else if (ir1 == mod_e(ir - 1, e)) {
        rhs = minus(apply(YGen{r}, unit(k)), apply(YGen{r + 1}, unit(k)));
      } else {
        rhs = unit(k);
      }
      expect(rep, "psi-quadratic:r" + std::to_string(r), k, lhs, rhs);
    }
  }

  void check_braid(KlrReport& rep, int r) {
    const int e = b_.params().e;
    for (int k = 0; k < b_.dim(); ++k) {
      const ResidueSeq& iseq = b_.iseq_of(k);
      const int ir = iseq[r - 1], ir1 = iseq[r], ir2 = iseq[r + 1];
      Terms lhs =
          apply(PsiGen{r}, apply(PsiGen{r + 1}, apply(PsiGen{r}, unit(k))));
      Terms rhs =
          apply(PsiGen{r + 1}, apply(PsiGen{r}, apply(PsiGen{r + 1}, unit(k))));
      if (ir2 == ir && ir1 == mod_e(ir + 1, e))
        rhs = plus(std::move(rhs), unit(k));
      else if (ir2 == ir && ir1 == mod_e(ir - 1, e))
        rhs = minus(std::move(rhs), unit(k));
      expect(rep, "psi-braid:r" + std::to_string(r), k, lhs, rhs);
    }
  }

  // y_1^{<Lambda,alpha_{i_1}>} e(i) = 0, the exponent counting the kappa_j
  // equal to i_1; an occurring sequence with exponent 0 is itself a failure
  void check_cyclotomic(KlrReport& rep) const {
    const auto& kappa = b_.params().kappa;
    for (int k = 0; k < b_.dim(); ++k) {
      ++rep.checks;
      const int i1 = b_.iseq_of(k)[0];
      const int exponent = (kappa[0] == i1 ? 1 : 0) + (kappa[1] == i1 ? 1 : 0);
      if (exponent == 0) {
        rep.record({"cyclotomic", residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                    "occurring residue sequence with <Lambda,alpha_{i_1}> = 0"});
        continue;
      }
      HookBasis::Entry e{1, k};
      for (int t = 0; t < exponent && e.sign; ++t) e = b_.y_entry(1, e.row);
      if (e.sign)
        rep.record({"cyclotomic", residue_seq_str(b_.iseq_of(k)), b_.leg(k).str(),
                    "y1^" + std::to_string(exponent) + " does not annihilate"});
    }
  }

  // generator relations of the hook-bipartition Specht presentation:
  // e(i_lambda) z = z, y_r z = 0, psi_r z = 0 for r != m
  void check_generator_relations(KlrReport& rep) const {
    const Params& p = b_.params();
    std::vector<int> initial(p.m);
    for (int j = 0; j < p.m; ++j) initial[j] = j + 1;
    const int z = b_.index_of(LegSet(initial));
    for (int i = 1; i <= p.n; ++i) {
      ++rep.checks;
      if (b_.y_entry(i, z).sign)
        rep.record({"generator-relations", "", b_.leg(z).str(),
                    "y" + std::to_string(i) + " z != 0"});
    }
    for (int r = 1; r < p.n; ++r) {
      if (r == p.m) continue;
      ++rep.checks;
      if (b_.psi_entry(r, z).sign)
        rep.record({"generator-relations", "", b_.leg(z).str(),
                    "psi" + std::to_string(r) + " z != 0"});
    }
    ++rep.checks;
    Tableau col_initial = Tableau::column_initial(Bipartition::hook(p.n, p.m));
    if (b_.iseq_of(z) != residue_sequence(col_initial, p))
      rep.record({"generator-relations", residue_seq_str(b_.iseq_of(z)), b_.leg(z).str(),
                  "e(i_lambda) z != z"});
  }

  const HookBasis& b_;
  typename F::Context ctx_;
  F one_;
};

template <class F>
KlrReport verify_klr_relations(const HookBasis& core, const typename F::Context& ctx) {
  return KlrChecker<F>(core, ctx).run();
}

template <class F, class Module>
KlrReport verify_klr_relations(const Module& module) {
  return KlrChecker<F>(module.core(), module.context()).run();
}

}  // namespace specht
