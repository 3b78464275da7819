#pragma once

#include <algorithm>
#include <chrono>
#include <future>
#include <memory>
#include <string>
#include <vector>

#include "specht/homs.hpp"
#include "specht/hook_module.hpp"
#include "specht/klr_check.hpp"
#include "specht/report.hpp"
#include "specht/structure.hpp"

namespace specht {

/*
 * Parameter-sweep driver.  For every (e, kappa, n) tower in the grid it
 * runs, per m: the KLR relation oracle, the matrix sparsity check and the
 * composition-series verification; and per tower: the exactness checks of
 * the case at hand plus, in Case IV, the composition/diagram checks and,
 * in Case II, the gamma bijection check.  Records come back in grid order
 * so reports are deterministic; the cache replays per-key records when the
 * generator-matrix fingerprint is unchanged.
 */

template <class F>
std::string module_fingerprint(const HookSpechtModule<F>& mod) {
  Fingerprint fp;
  const auto& core = mod.core();
  fp.feed("dim");
  fp.feed(core.dim());
  for (int k = 0; k < core.dim(); ++k) fp.feed(residue_seq_str(core.iseq_of(k)));
  auto feed_matrix = [&fp](const std::string& tag, const SparseMatrix<F>& m) {
    fp.feed(tag);
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [i, v] : m.col(j).entries()) {
        fp.feed(i);
        fp.feed(j);
        fp.feed(v.str());
      }
  };
  const int n = mod.params().n;
  for (int c = 0; c < static_cast<int>(core.distinct_iseqs().size()); ++c)
    feed_matrix("e" + std::to_string(c), mod.idem_class(c));
  for (int i = 1; i <= n; ++i) feed_matrix("y" + std::to_string(i), mod.y(i));
  for (int l = 1; l < n; ++l) feed_matrix("psi" + std::to_string(l), mod.psi(l));
  return fp.hex();
}

// at most one nonzero per row and per column, entries in {1,-1}
template <class F>
CheckReport check_sparsity(const HookSpechtModule<F>& mod) {
  CheckReport rep("sparsity");
  const auto& ctx = mod.context();
  const F one = field_one<F>(ctx), minus_one = field_minus_one<F>(ctx);
  auto check_matrix = [&](const SparseMatrix<F>& m, const std::string& tag) {
    std::vector<int> row_count(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j) {
      const auto& col = m.col(j).entries();
      rep.expect(col.size() <= 1, tag + "-col", "column " + std::to_string(j) +
                                                    " has " + std::to_string(col.size()) +
                                                    " nonzeros");
      for (const auto& [i, v] : col) {
        ++row_count[i];
        rep.expect(v == one || v == minus_one, tag + "-entry",
                   "entry not in {1,-1} at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    for (int i = 0; i < m.rows(); ++i)
      rep.expect(row_count[i] <= 1, tag + "-row",
                 "row " + std::to_string(i) + " has " + std::to_string(row_count[i]) + " nonzeros");
  };
  const int n = mod.params().n;
  for (int l = 1; l < n; ++l) check_matrix(mod.psi(l), "psi" + std::to_string(l));
  for (int i = 1; i <= n; ++i) check_matrix(mod.y(i), "y" + std::to_string(i));
  return rep;
}

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline ReportRecord make_record(int e, int k1, int k2, int n, int m, const std::string& field,
                                const std::string& check, const CheckReport& rep, double ms) {
  ReportRecord r;
  r.e = e;
  r.kappa1 = k1;
  r.kappa2 = k2;
  r.n = n;
  r.m = m;
  r.field = field;
  r.check = check;
  r.status = rep.passed ? "pass" : "fail";
  r.details = rep.passed ? "" : rep.first_failure();
  r.timing_ms = ms;
  return r;
}

}  // namespace detail

template <class F>
std::vector<ReportRecord> run_point_checks(int e, int k1, int k2, int n, int m,
                                           const typename F::Context& ctx,
                                           const std::string& field_name, std::uint64_t seed) {
  std::vector<ReportRecord> records;
  auto t0 = std::chrono::steady_clock::now();
  Params params(e, k1, k2, n, m);
  HookSpechtModule<F> mod(params, ctx);

  KlrReport klr = verify_klr_relations<F>(mod.core(), ctx);
  ReportRecord klr_rec;
  klr_rec.e = e;
  klr_rec.kappa1 = k1;
  klr_rec.kappa2 = k2;
  klr_rec.n = n;
  klr_rec.m = m;
  klr_rec.field = field_name;
  klr_rec.check = "klr";
  klr_rec.status = klr.passed ? "pass" : "fail";
  if (!klr.passed) {
    const auto& f = klr.failures.front();
    klr_rec.details = f.relation + " at v" + f.basis_label + " " + f.iseq + ": " + f.detail;
  }
  klr_rec.timing_ms = detail::ms_since(t0);
  records.push_back(std::move(klr_rec));

  t0 = std::chrono::steady_clock::now();
  CheckReport sparsity = check_sparsity(mod);
  records.push_back(detail::make_record(e, k1, k2, n, m, field_name, "sparsity", sparsity,
                                        detail::ms_since(t0)));

  t0 = std::chrono::steady_clock::now();
  SeriesReport series = composition_series<F>(params, ctx, seed);
  CheckReport series_rep = series.checks;
  ReportRecord series_rec = detail::make_record(e, k1, k2, n, m, field_name, "comp-series",
                                                series_rep, detail::ms_since(t0));
  if (series_rep.passed) {
    std::string dims = "case " + std::string(series_case_name(series.tag)) + ", factors [";
    for (std::size_t i = 0; i < series.factor_dims.size(); ++i) {
      if (i) dims += ",";
      dims += std::to_string(series.factor_dims[i]);
    }
    series_rec.details = dims + "] bottom to top";
  }
  records.push_back(std::move(series_rec));
  return records;
}

template <class F>
std::vector<ReportRecord> run_tower_checks(int e, int k1, int k2, int n,
                                           const typename F::Context& ctx,
                                           const std::string& field_name) {
  std::vector<ReportRecord> records;
  Params base(e, k1, k2, n, 0);
  HomContext<F> hc(base, ctx);
  if (hc.gamma_defined() || hc.chi_defined()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = check_exactness(hc);
    records.push_back(
        detail::make_record(e, k1, k2, n, -1, field_name, "exactness", rep, detail::ms_since(t0)));
  }
  if (hc.gamma_defined() && !hc.chi_defined()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep("gamiso");
    for (int m = 0; m <= n - 1; ++m) rep.merge(gamiso_check(hc, m));
    records.push_back(
        detail::make_record(e, k1, k2, n, -1, field_name, "gamiso", rep, detail::ms_since(t0)));
  }
  if (hc.phi_defined()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = check_compositions(hc);
    records.push_back(detail::make_record(e, k1, k2, n, -1, field_name, "compositions", rep,
                                          detail::ms_since(t0)));
  }
  return records;
}

template <class F>
std::vector<ReportRecord> run_sweep(const RunConfig& config, const typename F::Context& ctx) {
  ResultCache cache(config.cache_path);
  const std::string field_name = config.field.name();

  struct Task {
    int e, k1, k2, n, m;  // m == -1: tower checks
  };
  std::vector<Task> tasks;
  for (int e : config.e_list) {
    std::vector<std::array<int, 2>> kappas = config.kappa_list;
    if (config.kappa_all) {
      kappas.clear();
      for (int a = 0; a < e; ++a)
        for (int b = 0; b < e; ++b) kappas.push_back({a, b});
    }
    for (const auto& kappa : kappas)
      for (int n = config.n_min; n <= config.n_max; ++n) {
        if (n > config.n_guard)
          throw std::invalid_argument("sweep: n exceeds the guard (" +
                                      std::to_string(config.n_guard) + "); raise --n-guard");
        for (int m = 0; m <= n; ++m) {
          if (!config.m_list.empty() &&
              std::find(config.m_list.begin(), config.m_list.end(), m) == config.m_list.end())
            continue;
          tasks.push_back({e, mod_e(kappa[0], e), mod_e(kappa[1], e), n, m});
        }
        tasks.push_back({e, mod_e(kappa[0], e), mod_e(kappa[1], e), n, -1});
      }
  }

  auto run_task = [&](const Task& t) -> std::vector<ReportRecord> {
    const std::string key = cache_key(t.e, t.k1, t.k2, t.n, t.m, field_name);
    std::string fp;
    if (t.m >= 0) {
      HookSpechtModule<F> mod(Params(t.e, t.k1, t.k2, t.n, t.m), ctx);
      fp = module_fingerprint(mod);
    } else {
      Fingerprint tower_fp;
      for (int m = 0; m <= t.n; ++m) {
        HookSpechtModule<F> mod(Params(t.e, t.k1, t.k2, t.n, m), ctx);
        tower_fp.feed(module_fingerprint(mod));
      }
      fp = tower_fp.hex();
    }
    CacheEntry entry;
    if (cache.enabled() && cache.load(key, entry) && entry.fingerprint == fp)
      return entry.records;
    std::vector<ReportRecord> records =
        t.m >= 0 ? run_point_checks<F>(t.e, t.k1, t.k2, t.n, t.m, ctx, field_name, config.seed)
                 : run_tower_checks<F>(t.e, t.k1, t.k2, t.n, ctx, field_name);
    if (cache.enabled()) cache.store(key, {fp, records});
    return records;
  };

  std::vector<ReportRecord> all;
  if (config.jobs <= 1) {
    for (const auto& t : tasks) {
      auto recs = run_task(t);
      all.insert(all.end(), recs.begin(), recs.end());
    }
  } else {
    // fan out, then collect in grid order
    std::vector<std::future<std::vector<ReportRecord>>> futures;
    futures.reserve(tasks.size());
    std::size_t next = 0;
    std::vector<std::vector<ReportRecord>> results(tasks.size());
    while (next < tasks.size()) {
      std::size_t batch = std::min<std::size_t>(config.jobs, tasks.size() - next);
      futures.clear();
      for (std::size_t i = 0; i < batch; ++i)
        futures.push_back(std::async(std::launch::async, run_task, tasks[next + i]));
      for (std::size_t i = 0; i < batch; ++i) results[next + i] = futures[i].get();
      next += batch;
    }
    for (const auto& recs : results) all.insert(all.end(), recs.begin(), recs.end());
  }
  return all;
}

}  // namespace specht
