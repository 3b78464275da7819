#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/check_report.hpp"
#include "specht/factor.hpp"
#include "specht/hook_module.hpp"
#include "specht/klr_check.hpp"
#include "specht/subspace.hpp"

namespace specht {

/*
 * The Specht-module homomorphisms between hook modules and their
 * realizations.
 *
 * gamma_m : S_m -> S_{m+1} (defined when n = kappa_2 - kappa_1 + 1) acts on
 * the basis by v(A) -> v(A u {n}) when n is not in A, else 0.  The maps
 * chi, tau, alpha, beta, phi attached to the one-component hooks are not
 * built on standalone modules; following the exact sequence
 * 0 -> S_((n-m,1^m),()) -> S_m -> S_((),(n-m+1,1^{m-1})) -> 0 they are
 * realized as the submodule im(chi_m) = span{v(A) : 1 not in A}, the
 * quotient by it, and the maps gamma induces on those.
 */

enum class PredictedKind { im_gamma, ker_gamma, im_chi, ker_tau, im_phi };

inline const char* predicted_kind_name(PredictedKind k) {
  switch (k) {
    case PredictedKind::im_gamma: return "im_gamma";
    case PredictedKind::ker_gamma: return "ker_gamma";
    case PredictedKind::im_chi: return "im_chi";
    case PredictedKind::ker_tau: return "ker_tau";
    case PredictedKind::im_phi: return "im_phi";
  }
  return "?";
}

template <class F>
class HomContext {
 public:
  HomContext(Params base, typename F::Context ctx) : base_(base.with_m(0)), ctx_(std::move(ctx)) {}

  const Params& base() const { return base_; }
  const typename F::Context& context() const { return ctx_; }
  int n() const { return base_.n; }

  bool gamma_defined() const { return mod_e(base_.n, base_.e) == mod_e(base_.charge_diff() + 1, base_.e); }
  bool chi_defined() const { return base_.charge_diff() == base_.e - 1; }
  bool phi_defined() const { return chi_defined() && mod_e(base_.n, base_.e) == 0; }

  std::shared_ptr<const HookSpechtModule<F>> module_ptr(int m) {
    auto it = modules_.find(m);
    if (it != modules_.end()) return it->second;
    auto mod = std::make_shared<HookSpechtModule<F>>(base_.with_m(m), ctx_);
    modules_.emplace(m, mod);
    return mod;
  }
  const HookSpechtModule<F>& module(int m) { return *module_ptr(m); }

  // matrix of gamma_m : module(m) -> module(m+1)
  SparseMatrix<F> gamma_matrix(int m) {
    require_gamma();
    if (m < 0 || m > n() - 1) throw std::invalid_argument("gamma_matrix: m must lie in 0..n-1");
    const auto& dom = module(m);
    const auto& cod = module(m + 1);
    SparseMatrix<F> g(cod.dim(), dom.dim());
    const F one = field_one<F>(ctx_);
    for (int k = 0; k < dom.dim(); ++k) {
      const LegSet& A = dom.core().leg(k);
      if (A.contains(n())) continue;
      std::vector<int> entries = A.entries();
      entries.push_back(n());
      g.set(cod.core().index_of(LegSet(std::move(entries))), k, one);
    }
    return g;
  }

  // matrix of chi_m : S_((n-m,1^m),()) -> module(m); the domain basis is
  // the legs avoiding 1, in lex order
  SparseMatrix<F> chi_matrix(int m) {
    require_chi();
    if (m < 1 || m > n() - 1) throw std::invalid_argument("chi_matrix: m must lie in 1..n-1");
    const auto& cod = module(m);
    std::vector<int> domain_cols;
    for (int k = 0; k < cod.dim(); ++k)
      if (!cod.core().leg(k).contains(1)) domain_cols.push_back(k);
    SparseMatrix<F> c(cod.dim(), static_cast<int>(domain_cols.size()));
    const F one = field_one<F>(ctx_);
    for (std::size_t j = 0; j < domain_cols.size(); ++j) c.set(domain_cols[j], static_cast<int>(j), one);
    return c;
  }

  // span of the indicated basis vectors (Lemma imker); for im_gamma the
  // ambient is module(m+1), otherwise module(m)
  Subspace<F> predicted(PredictedKind kind, int m) {
    switch (kind) {
      case PredictedKind::im_gamma: {
        require_gamma();
        if (m < 0 || m > n() - 1) throw std::invalid_argument("predicted: im_gamma needs 0 <= m <= n-1");
        return span_of(m + 1, [&](const LegSet& A) { return A.contains(n()); });
      }
      case PredictedKind::ker_gamma: {
        require_gamma();
        if (m < 0 || m > n() - 1) throw std::invalid_argument("predicted: ker_gamma needs 0 <= m <= n-1");
        return span_of(m, [&](const LegSet& A) { return A.contains(n()); });
      }
      case PredictedKind::im_chi: {
        require_chi();
        if (m < 1 || m > n() - 1) throw std::invalid_argument("predicted: im_chi needs 1 <= m <= n-1");
        return span_of(m, [&](const LegSet& A) { return !A.contains(1); });
      }
      case PredictedKind::ker_tau: {
        require_chi();
        if (m < 1 || m > n()) throw std::invalid_argument("predicted: ker_tau needs 1 <= m <= n");
        return span_of(m, [&](const LegSet& A) { return !A.contains(1); });
      }
      case PredictedKind::im_phi: {
        require_phi();
        if (m < 1 || m > n() - 1) throw std::invalid_argument("predicted: im_phi needs 1 <= m <= n-1");
        if (m == n() - 1) return span_of(m, [&](const LegSet& A) { return !A.contains(1); });
        return span_of(m, [&](const LegSet& A) { return !A.contains(1) && A.contains(n()); });
      }
    }
    throw std::invalid_argument("predicted: unknown kind");
  }

  template <class Pred>
  Subspace<F> span_of(int m, Pred&& pred) {
    const auto& mod = module(m);
    std::vector<SparseVector<F>> vecs;
    for (int k = 0; k < mod.dim(); ++k)
      if (pred(mod.core().leg(k))) vecs.push_back(mod.basis_vector(k));
    return rref_span(vecs, mod.dim());
  }

 private:
  void require_gamma() const {
    if (!gamma_defined())
      throw std::domain_error("gamma requires n = kappa_2 - kappa_1 + 1 (mod e)");
  }
  void require_chi() const {
    if (!chi_defined()) throw std::domain_error("chi/tau require kappa_2 = kappa_1 - 1 (mod e)");
  }
  void require_phi() const {
    if (!phi_defined())
      throw std::domain_error("phi requires kappa_2 = kappa_1 - 1 and n = 0 (mod e)");
  }

  Params base_;
  typename F::Context ctx_;
  std::map<int, std::shared_ptr<const HookSpechtModule<F>>> modules_;
};

/*
 * Intertwining check: for every generator g of the algebra,
 * M_cod(g) * map = map * M_dom(g).  Idempotents are matched across the two
 * modules by residue-sequence equality; a sequence occurring on one side
 * only contributes the zero matrix on the other.
 */
template <class F>
CheckReport check_hom_property(const SparseMatrix<F>& map, const Factor<F>& domain,
                               const Factor<F>& codomain, const std::string& label) {
  CheckReport rep("hom-property:" + label);
  if (map.cols() != domain.dim() || map.rows() != codomain.dim()) {
    rep.expect(false, "shape", "map is " + std::to_string(map.rows()) + "x" +
                                   std::to_string(map.cols()) + ", expected " +
                                   std::to_string(codomain.dim()) + "x" +
                                   std::to_string(domain.dim()));
    return rep;
  }
  const auto& dom_mod = domain.parent();
  const auto& cod_mod = codomain.parent();
  const int n = dom_mod.params().n;
  if (cod_mod.params().n != n) throw std::invalid_argument("check_hom_property: mixed n");

  auto check_pair = [&](const SparseMatrix<F>& dg, const SparseMatrix<F>& cg,
                        const std::string& gen) {
    rep.expect(cg * map == map * dg, gen, "intertwining fails for " + gen);
  };

  std::vector<ResidueSeq> iseqs = dom_mod.core().distinct_iseqs();
  for (const auto& iseq : cod_mod.core().distinct_iseqs())
    if (dom_mod.core().iseq_index(iseq) < 0) iseqs.push_back(iseq);
  for (const auto& iseq : iseqs)
    check_pair(domain.induced(dom_mod.idem(iseq)), codomain.induced(cod_mod.idem(iseq)),
               "e" + residue_seq_str(iseq));
  for (int i = 1; i <= n; ++i)
    check_pair(domain.induced(dom_mod.y(i)), codomain.induced(cod_mod.y(i)),
               "y" + std::to_string(i));
  for (int l = 1; l < n; ++l)
    check_pair(domain.induced(dom_mod.psi(l)), codomain.induced(cod_mod.psi(l)),
               "psi" + std::to_string(l));
  return rep;
}

/*
 * Presentation witness for the hom existence arguments: the image of the
 * domain's cyclic generator must satisfy the domain presentation inside
 * the codomain.  For a hook-bipartition domain the kill set is every psi
 * except psi_leg; for an arm hook with leg length l it is
 * {1..l} u {l+2..n-1} plus the Garnir word psi_1...psi_{l+1}.
 */
template <class F>
CheckReport check_generator_witness(const HookSpechtModule<F>& target, const LegSet& image_of_z,
                                    ShapeFamily domain_family, int domain_leg,
                                    const std::string& label) {
  CheckReport rep("witness:" + label);
  const Params& p = target.params();
  const Params domain_params = p.with_m(domain_leg);

  for (int i = 1; i <= p.n; ++i) {
    SignedLeg s = y_step(i, image_of_z, p, target.core().twist());
    rep.expect(s.is_zero(), "y" + std::to_string(i), "y does not annihilate the witness");
  }

  std::vector<int> kill;
  if (domain_family == ShapeFamily::HookBipartition) {
    for (int r = 1; r < p.n; ++r)
      if (r != domain_leg) kill.push_back(r);
  } else {
    for (int r = 1; r <= domain_leg && r < p.n; ++r) kill.push_back(r);
    for (int r = domain_leg + 2; r < p.n; ++r) kill.push_back(r);
  }
  for (int r : kill) {
    SignedLeg s = psi_step(r, image_of_z, p, target.core().twist());
    rep.expect(s.is_zero(), "psi" + std::to_string(r), "psi does not annihilate the witness");
  }
  if (domain_family == ShapeFamily::ArmHook && p.n - domain_leg >= 2) {
    GenWord garnir;
    for (int r = 1; r <= domain_leg + 1; ++r) garnir.letters.push_back(r);
    SignedLeg s = apply_word(garnir, image_of_z, p, target.core().twist());
    rep.expect(s.is_zero(), "garnir", "psi_1..psi_{l+1} does not annihilate the witness");
  }

  Bipartition shape = domain_family == ShapeFamily::HookBipartition
                          ? Bipartition::hook(p.n, domain_leg)
                          : Bipartition::arm_hook(p.n, domain_leg);
  ResidueSeq expected = residue_sequence(Tableau::column_initial(shape), domain_params);
  rep.expect(residue_sequence_hook(p, image_of_z) == expected, "idempotent",
             "witness residue sequence differs from i_lambda of the domain");
  return rep;
}

namespace detail {

inline std::string dim_str(int a, int b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace detail

/*
 * Exactness checks for the case at hand.
 *
 * Case II (gamma only): im(gamma_{m-1}) = ker(gamma_m) along the whole
 * chain, gamma_0 injective, gamma_{n-1} surjective, and the computed
 * image/kernel agree with Lemma imker's predicted spans.
 *
 * Case III (chi/tau only): chi_m injective with im(chi_m) the predicted
 * span (which equals ker(tau_m)), and the quotient has the dimension of
 * the leg hook.
 *
 * Case IV: both, plus exactness of the realized alpha and beta chains.
 */
template <class F>
CheckReport check_exactness(HomContext<F>& hc) {
  CheckReport rep("exactness");
  const int n = hc.n();
  const auto& ctx = hc.context();

  if (hc.gamma_defined()) {
    std::vector<Subspace<F>> images, kernels;
    for (int m = 0; m <= n - 1; ++m) {
      auto g = hc.gamma_matrix(m);
      auto [im, ker] = map_image_kernel(g, ctx);
      rep.expect(im.dim() + ker.dim() == hc.module(m).dim(), "rank-nullity",
                 "gamma_" + std::to_string(m));
      rep.expect(im == hc.predicted(PredictedKind::im_gamma, m),
                 "im_gamma_" + std::to_string(m), "computed image differs from predicted span");
      rep.expect(ker == hc.predicted(PredictedKind::ker_gamma, m),
                 "ker_gamma_" + std::to_string(m), "computed kernel differs from predicted span");
      images.push_back(std::move(im));
      kernels.push_back(std::move(ker));
    }
    rep.expect(kernels[0].dim() == 0, "gamma_0-injective",
               "ker dim " + std::to_string(kernels[0].dim()));
    rep.expect(images[n - 1].dim() == hc.module(n).dim(), "gamma_top-surjective",
               detail::dim_str(images[n - 1].dim(), hc.module(n).dim()));
    for (int m = 1; m <= n - 1; ++m)
      rep.expect(images[m - 1] == kernels[m], "im=ker@m=" + std::to_string(m),
                 "im(gamma_" + std::to_string(m - 1) + ") != ker(gamma_" + std::to_string(m) + ")");
    for (int m = 1; m <= n - 1; ++m)
      rep.expect(binomial(n - 1, m) + binomial(n - 1, m - 1) == binomial(n, m),
                 "pascal@m=" + std::to_string(m), "dimension telescope");
  }

  if (hc.chi_defined()) {
    for (int m = 1; m <= n - 1; ++m) {
      auto c = hc.chi_matrix(m);
      auto [im, ker] = map_image_kernel(c, ctx);
      rep.expect(ker.dim() == 0, "chi-injective@m=" + std::to_string(m),
                 "ker dim " + std::to_string(ker.dim()));
      rep.expect(im == hc.predicted(PredictedKind::im_chi, m),
                 "im_chi@m=" + std::to_string(m), "computed image differs from predicted span");
      rep.expect(im == hc.predicted(PredictedKind::ker_tau, m),
                 "ker_tau=im_chi@m=" + std::to_string(m), "exactness at the middle term fails");
      rep.expect(static_cast<std::uint64_t>(hc.module(m).dim() - im.dim()) == binomial(n - 1, m - 1),
                 "coker-dim@m=" + std::to_string(m),
                 "quotient dimension is not dim S_((),(n-m+1,1^{m-1}))");
    }
  }

  if (hc.phi_defined()) {
    // alpha chain: im_chi(0) := the whole 1-dim module(0)
    auto alpha_space = [&](int m) {
      if (m == 0) {
        std::vector<SparseVector<F>> v{hc.module(0).basis_vector(0)};
        return rref_span(v, 1);
      }
      return hc.predicted(PredictedKind::im_chi, m);
    };
    for (int m = 1; m <= n - 2; ++m) {
      auto gprev = hc.gamma_matrix(m - 1);
      Subspace<F> below = alpha_space(m - 1);
      std::vector<SparseVector<F>> im_vecs;
      for (const auto& row : below.rows()) im_vecs.push_back(gprev.apply(row));
      Subspace<F> im_alpha = rref_span(im_vecs, hc.module(m).dim());
      Subspace<F> ker_alpha = subspace_intersect(
          hc.predicted(PredictedKind::ker_gamma, m), alpha_space(m), ctx);
      rep.expect(im_alpha == ker_alpha, "alpha-exact@m=" + std::to_string(m),
                 "im(alpha_" + std::to_string(m - 1) + ") != ker(alpha_" + std::to_string(m) + ")");
      rep.expect(im_alpha == hc.predicted(PredictedKind::im_phi, m),
                 "im_phi@m=" + std::to_string(m),
                 "gamma(im_chi) differs from the predicted im(phi)");
    }
    {
      auto gtop = hc.gamma_matrix(n - 2);
      Subspace<F> below = alpha_space(n - 2);
      std::vector<SparseVector<F>> im_vecs;
      for (const auto& row : below.rows()) im_vecs.push_back(gtop.apply(row));
      rep.expect(rref_span(im_vecs, hc.module(n - 1).dim()) == alpha_space(n - 1),
                 "alpha-surjective", "alpha chain does not end onto im_chi(n-1)");
    }

    // beta chain, in terms of subspaces of module(m) containing im_chi(m)
    auto chi_space = [&](int m) {
      if (m == n) return Subspace<F>(hc.module(n).dim());
      return hc.predicted(PredictedKind::im_chi, m);
    };
    for (int m = 2; m <= n - 1; ++m) {
      auto gprev = hc.gamma_matrix(m - 1);
      std::vector<SparseVector<F>> vecs;
      for (int k = 0; k < hc.module(m - 1).dim(); ++k)
        vecs.push_back(gprev.apply(hc.module(m - 1).basis_vector(k)));
      Subspace<F> im_side = rref_span(vecs, hc.module(m).dim());
      im_side = subspace_sum(im_side, chi_space(m));
      Subspace<F> ker_side = preimage(hc.gamma_matrix(m), chi_space(m + 1), ctx);
      rep.expect(im_side == ker_side, "beta-exact@m=" + std::to_string(m),
                 "induced beta chain fails exactness");
    }
    {
      Subspace<F> ker_side = preimage(hc.gamma_matrix(1), chi_space(2), ctx);
      rep.expect(ker_side == chi_space(1), "beta-injective",
                 "induced beta_0 has a nonzero kernel");
    }
  }
  return rep;
}

/*
 * Composition identities (Lemma homcomps) and the commutative diagram:
 * gamma maps im(chi_m) into im(chi_{m+1}); the image is exactly im(phi_{m+1});
 * the induced maps on submodules and quotients intertwine the action; and
 * the triangle phi_{m+1} = gamma_m o chi_m holds on the cyclic generator
 * as the explicit word identity Psi-up(1..m) Psi-down(n-1..m+1) z.
 */
template <class F>
CheckReport check_compositions(HomContext<F>& hc) {
  CheckReport rep("compositions");
  if (!hc.phi_defined())
    throw std::domain_error("check_compositions requires kappa_2 = kappa_1 - 1 and n = 0 (mod e)");
  const int n = hc.n();
  const auto& ctx = hc.context();

  for (int m = 1; m <= n - 2; ++m) {
    auto g = hc.gamma_matrix(m);
    Subspace<F> chi_m = hc.predicted(PredictedKind::im_chi, m);
    Subspace<F> chi_m1 = hc.predicted(PredictedKind::im_chi, m + 1);

    std::vector<SparseVector<F>> image_vecs;
    for (const auto& row : chi_m.rows()) image_vecs.push_back(g.apply(row));
    Subspace<F> g_chi = rref_span(image_vecs, hc.module(m + 1).dim());
    rep.expect(chi_m1.contains_subspace(g_chi), "gamma(im_chi)@m=" + std::to_string(m),
               "gamma does not map im(chi_m) into im(chi_{m+1})");
    rep.expect(g_chi == hc.predicted(PredictedKind::im_phi, m + 1),
               "im(gamma.chi)=im_phi@m=" + std::to_string(m),
               "im(gamma_m o chi_m) differs from im(phi_{m+1})");

    // induced alpha: im_chi(m) -> im_chi(m+1), and the commuting square
    Factor<F> dom = Factor<F>::submodule(hc.module_ptr(m), chi_m);
    Factor<F> cod = Factor<F>::submodule(hc.module_ptr(m + 1), chi_m1);
    SparseMatrix<F> alpha(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j) alpha.col(j) = cod.coords(g.apply(dom.reps()[j]));
    rep.merge(check_hom_property(alpha, dom, cod, "alpha_" + std::to_string(m)));
    for (int j = 0; j < dom.dim(); ++j) {
      rep.expect(cod.lift(alpha.col(j)) == g.apply(dom.reps()[j]),
                 "square-chi@m=" + std::to_string(m), "chi square does not commute");
    }

    // induced beta on the quotients, and the commuting square with tau
    Factor<F> qdom = Factor<F>::quotient(hc.module_ptr(m), chi_m);
    Factor<F> qcod = Factor<F>::quotient(hc.module_ptr(m + 1), chi_m1);
    SparseMatrix<F> beta(qcod.dim(), qdom.dim());
    for (int j = 0; j < qdom.dim(); ++j) beta.col(j) = qcod.coords(g.apply(qdom.reps()[j]));
    rep.merge(check_hom_property(beta, qdom, qcod, "beta_" + std::to_string(m - 1)));
    for (int k = 0; k < hc.module(m).dim(); ++k) {
      SparseVector<F> via_tau = qcod.coords(g.apply(hc.module(m).basis_vector(k)));
      SparseVector<F> via_beta = beta.apply(qdom.coords(hc.module(m).basis_vector(k)));
      rep.expect(via_tau == via_beta, "square-tau@m=" + std::to_string(m),
                 "tau square does not commute at basis vector " +
                     hc.module(m).core().leg(k).str());
    }
  }

  // triangle on the generator: both routes send z to v(2,...,m+1,n)
  for (int m = 1; m <= n - 2; ++m) {
    const Params pm1 = hc.module(m + 1).params();
    std::vector<int> initial(m + 1);
    for (int j = 0; j < m + 1; ++j) initial[j] = j + 1;
    GenWord word;
    for (int r = 1; r <= m; ++r) word.letters.push_back(r);
    for (int r = n - 1; r >= m + 1; --r) word.letters.push_back(r);
    SignedLeg got = apply_word(word, LegSet(initial), pm1);
    std::vector<int> expected;
    for (int j = 2; j <= m + 1; ++j) expected.push_back(j);
    expected.push_back(n);
    rep.expect(!got.is_zero() && got.sign == 1 && got.leg == LegSet(expected),
               "triangle-z@m=" + std::to_string(m),
               "Psi-up(1..m) Psi-down(n-1..m+1) z != v(2..m+1,n)");
  }

  // presentation witnesses behind Prop. homs: gamma, chi, phi generators
  for (int m = 0; m <= n - 2; ++m) {
    std::vector<int> img(m + 1);
    for (int j = 0; j < m; ++j) img[j] = j + 1;
    img[m] = n;
    rep.merge(check_generator_witness(hc.module(m + 1), LegSet(img),
                                      ShapeFamily::HookBipartition, m,
                                      "gamma_" + std::to_string(m)));
  }
  for (int m = 1; m <= n - 1; ++m) {
    std::vector<int> img(m);
    for (int j = 0; j < m; ++j) img[j] = j + 2;
    rep.merge(check_generator_witness(hc.module(m), LegSet(img), ShapeFamily::ArmHook, m,
                                      "chi_" + std::to_string(m)));
  }
  for (int m = 1; m <= n - 1; ++m) {
    std::vector<int> img;
    for (int j = 2; j <= m; ++j) img.push_back(j);
    img.push_back(n);
    rep.merge(check_generator_witness(hc.module(m), LegSet(img), ShapeFamily::ArmHook, m - 1,
                                      "phi_" + std::to_string(m)));
  }
  return rep;
}

// Lemma gamiso: gamma_m restricts to a bijection between the basis vectors
// with n in the arm and those of the (m+1)-module with n at the foot of
// the leg
template <class F>
CheckReport gamiso_check(HomContext<F>& hc, int m) {
  CheckReport rep("gamiso@m=" + std::to_string(m));
  if (!hc.gamma_defined())
    throw std::domain_error("gamiso requires n = kappa_2 - kappa_1 + 1 (mod e)");
  const int n = hc.n();
  if (m < 0 || m > n - 1) throw std::invalid_argument("gamiso_check: m must lie in 0..n-1");
  const auto& dom = hc.module(m);
  const auto& cod = hc.module(m + 1);
  auto g = hc.gamma_matrix(m);

  std::vector<int> M;
  for (int k = 0; k < dom.dim(); ++k)
    if (!dom.core().leg(k).contains(n)) M.push_back(k);
  std::vector<int> N;
  for (int k = 0; k < cod.dim(); ++k)
    if (cod.core().leg(k).contains(n)) N.push_back(k);
  rep.expect(M.size() == N.size(), "sizes", detail::dim_str((int)M.size(), (int)N.size()));
  rep.expect(M.size() == binomial(n - 1, m), "count",
             "|M| != C(n-1,m) = " + std::to_string(binomial(n - 1, m)));

  std::vector<bool> hit(cod.dim(), false);
  bool bijective = true;
  for (int k : M) {
    auto [row, val] = g.col(k).leading();
    if (row < 0 || !cod.core().leg(row).contains(n) || hit[row] ||
        g.col(k).entries().size() != 1) {
      bijective = false;
      break;
    }
    hit[row] = true;
  }
  rep.expect(bijective, "bijection", "restricted gamma is not a basis bijection onto N");

  std::vector<SparseVector<F>> image;
  for (int k : M) image.push_back(g.col(k));
  rep.expect(rref_span(image, cod.dim()).dim() == static_cast<int>(M.size()), "rank",
             "rank of the restricted map is below |M|");
  return rep;
}

}  // namespace specht
