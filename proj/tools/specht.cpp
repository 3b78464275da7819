// Command-line front end: inspect bases and generator matrices, run the
// verification suites pointwise or over parameter sweeps, and replay the
// worked examples.  Reports are deterministic given the same config and
// seed; see README.md for the JSON schema.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "specht/homs.hpp"
#include "specht/hook_module.hpp"
#include "specht/klr_check.hpp"
#include "specht/report.hpp"
#include "specht/structure.hpp"
#include "specht/sweep.hpp"

using nlohmann::json;
using namespace specht;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct PointArgs {
  int e = 3;
  std::string kappa = "0,0";
  int n = 4;
  int m = 1;
  std::string field = "rational";
  std::uint64_t seed = 0;
  std::string output;
};

std::array<int, 2> parse_kappa(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--kappa", "expected two integers like 0,1");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--kappa", "expected two integers like 0,1");
  }
}

void add_point_options(CLI::App* cmd, PointArgs& a, bool with_m = true) {
  cmd->add_option("--e", a.e, "quantum characteristic (>= 3)")->required();
  cmd->add_option("--kappa", a.kappa, "multicharge, e.g. 0,1 (reduced mod e)")->required();
  cmd->add_option("--n", a.n, "size n")->required();
  if (with_m) cmd->add_option("--m", a.m, "leg length m")->required();
  cmd->add_option("--field", a.field, "rational (default) or fp:<prime>");
  cmd->add_option("--seed", a.seed, "seed for the randomized irreducibility oracle");
  cmd->add_option("--output", a.output, "write JSON here instead of stdout");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn.template operator()<Rational>(Rational::Context{});
  return fn.template operator()<Fp>(Fp::Context{spec.p});
}

template <class F>
json basis_json(const HookSpechtModule<F>& mod) {
  json rows = json::array();
  const auto& core = mod.core();
  for (int k = 0; k < core.dim(); ++k) {
    json row;
    row["index"] = k;
    row["leg"] = core.leg(k).entries();
    row["residues"] = core.iseq_of(k);
    rows.push_back(row);
  }
  return rows;
}

int run_basis(const PointArgs& a) {
  FieldSpec spec = FieldSpec::parse(a.field);
  return with_field(spec, [&]<class F>(typename F::Context ctx) {
    HookSpechtModule<F> mod(Params(a.e, parse_kappa(a.kappa)[0], parse_kappa(a.kappa)[1], a.n, a.m),
                            ctx);
    json j;
    j["schema"] = 1;
    j["params"] = {{"e", a.e}, {"kappa", parse_kappa(a.kappa)}, {"n", a.n}, {"m", a.m}};
    j["dimension"] = mod.dim();
    j["basis"] = basis_json(mod);
    emit(j.dump(2) + "\n", a.output);
    return 0;
  });
}

template <class F>
json matrix_json(const SparseMatrix<F>& m) {
  json entries = json::array();
  for (int jcol = 0; jcol < m.cols(); ++jcol)
    for (const auto& [i, v] : m.col(jcol).entries())
      entries.push_back({{"row", i}, {"col", jcol}, {"value", v.str()}});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

int run_matrix(const PointArgs& a, const std::string& gen) {
  FieldSpec spec = FieldSpec::parse(a.field);
  return with_field(spec, [&]<class F>(typename F::Context ctx) {
    auto kappa = parse_kappa(a.kappa);
    HookSpechtModule<F> mod(Params(a.e, kappa[0], kappa[1], a.n, a.m), ctx);
    json j;
    j["schema"] = 1;
    j["params"] = {{"e", a.e}, {"kappa", kappa}, {"n", a.n}, {"m", a.m}};
    j["generator"] = gen;
    if (gen.rfind("psi:", 0) == 0) {
      j["matrix"] = matrix_json(mod.psi(std::stoi(gen.substr(4))));
    } else if (gen.rfind("y:", 0) == 0) {
      j["matrix"] = matrix_json(mod.y(std::stoi(gen.substr(2))));
    } else if (gen.rfind("e:", 0) == 0) {
      ResidueSeq iseq;
      std::string rest = gen.substr(2);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        iseq.push_back(mod_e(std::stoi(rest.substr(pos, comma - pos)), a.e));
        pos = comma + 1;
      }
      if (static_cast<int>(iseq.size()) != a.n)
        throw CLI::ValidationError("--gen", "residue sequence must have length n");
      j["matrix"] = matrix_json(mod.idem(iseq));
    } else {
      throw CLI::ValidationError("--gen", "expected psi:<l>, y:<i> or e:<i1,...,in>");
    }
    emit(j.dump(2) + "\n", a.output);
    return 0;
  });
}

int run_verify_klr(const PointArgs& a) {
  FieldSpec spec = FieldSpec::parse(a.field);
  return with_field(spec, [&]<class F>(typename F::Context ctx) {
    auto kappa = parse_kappa(a.kappa);
    auto records =
        run_point_checks<F>(a.e, kappa[0], kappa[1], a.n, a.m, ctx, spec.name(), a.seed);
    // keep only the relation-oracle records here
    std::vector<ReportRecord> wanted;
    for (auto& r : records)
      if (r.check == "klr" || r.check == "sparsity") wanted.push_back(std::move(r));
    RunConfig cfg;
    cfg.e_list = {a.e};
    cfg.kappa_list = {kappa};
    cfg.n_min = cfg.n_max = a.n;
    cfg.m_list = {a.m};
    cfg.field = spec;
    emit(records_to_json(cfg, wanted), a.output);
    return count_failures(wanted) ? kExitFail : 0;
  });
}

int run_verify_homs(const PointArgs& a) {
  FieldSpec spec = FieldSpec::parse(a.field);
  return with_field(spec, [&]<class F>(typename F::Context ctx) {
    auto kappa = parse_kappa(a.kappa);
    auto records = run_tower_checks<F>(a.e, kappa[0], kappa[1], a.n, ctx, spec.name());
    if (records.empty()) {
      ReportRecord r;
      r.e = a.e;
      r.kappa1 = mod_e(kappa[0], a.e);
      r.kappa2 = mod_e(kappa[1], a.e);
      r.n = a.n;
      r.m = -1;
      r.field = spec.name();
      r.check = "exactness";
      r.status = "skipped";
      r.details = "no homomorphism congruence holds for these parameters";
      records.push_back(std::move(r));
    }
    RunConfig cfg;
    cfg.e_list = {a.e};
    cfg.kappa_list = {kappa};
    cfg.n_min = cfg.n_max = a.n;
    cfg.field = spec;
    emit(records_to_json(cfg, records), a.output);
    return count_failures(records) ? kExitFail : 0;
  });
}

int run_comp_series(const PointArgs& a) {
  FieldSpec spec = FieldSpec::parse(a.field);
  return with_field(spec, [&]<class F>(typename F::Context ctx) {
    auto kappa = parse_kappa(a.kappa);
    Params params(a.e, kappa[0], kappa[1], a.n, a.m);
    SeriesReport series = composition_series<F>(params, ctx, a.seed);
    json j;
    j["schema"] = 1;
    j["params"] = {{"e", a.e}, {"kappa", kappa}, {"n", a.n}, {"m", a.m}};
    j["field"] = spec.name();
    j["case"] = series_case_name(series.tag);
    j["chain_dims"] = series.chain_dims;
    j["factor_dims"] = series.factor_dims;
    j["factor_irreducible"] = series.factor_irreducible;
    j["status"] = series.passed() ? "pass" : "fail";
    if (!series.passed()) j["first_failure"] = series.checks.first_failure();
    emit(j.dump(2) + "\n", a.output);
    return series.passed() ? 0 : kExitFail;
  });
}

int run_example(const std::string& name, const std::string& output) {
  json j;
  j["schema"] = 1;
  j["example"] = name;
  bool ok = true;

  if (name == "residues-5-3") {
    // residue sequences of the ((5,3),(2^2,1)) worked example at e = 3,
    // kappa = (0,1): the column-initial tableau and its s-relabelling
    Params p(3, 0, 1, 13, 0);
    Bipartition shape({5, 3}, {2, 2, 1});
    Tableau t0 = Tableau::column_initial(shape);
    ResidueSeq expected0 = {1, 0, 2, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1};
    ResidueSeq got0 = residue_sequence(t0, p);
    std::vector<int> w(13);
    for (int i = 0; i < 13; ++i) w[i] = i + 1;
    w[4 - 1] = 5;
    w[5 - 1] = 6;
    w[6 - 1] = 4;
    w[11 - 1] = 13;
    w[13 - 1] = 12;
    w[12 - 1] = 11;
    Tableau ts = t0.acted_by(w);
    ResidueSeq expecteds = {1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 0, 1, 1};
    ResidueSeq gots = residue_sequence(ts, p);
    ok = got0 == expected0 && gots == expecteds && ts.is_standard();
    j["column_initial"] = got0;
    j["relabelled"] = gots;
    j["status"] = ok ? "pass" : "fail";
    emit(j.dump(2) + "\n", output);
    return ok ? 0 : kExitFail;
  }

  PointArgs a;
  if (name == "case2-n5") {
    a = {3, "0,1", 5, 3, "rational", 0, output};
  } else if (name == "case3-n5") {
    a = {3, "0,2", 5, 2, "rational", 0, output};
  } else if (name == "case4-n6") {
    a = {3, "0,2", 6, 3, "rational", 0, output};
  } else {
    throw CLI::ValidationError("--name",
                               "expected residues-5-3, case2-n5, case3-n5 or case4-n6");
  }
  int series_rc = run_comp_series(a);
  PointArgs homs = a;
  homs.output = "";
  std::ostringstream devnull;
  auto* old = std::cout.rdbuf(devnull.rdbuf());
  int homs_rc = run_verify_homs(homs);
  std::cout.rdbuf(old);
  return series_rc || homs_rc ? kExitFail : 0;
}

int run_sweep_cmd(RunConfig& cfg, const std::vector<std::string>& kappa_args,
                  const std::string& n_range, const std::string& m_arg,
                  const std::string& field_arg) {
  cfg.field = FieldSpec::parse(field_arg);
  if (kappa_args.empty() || (kappa_args.size() == 1 && kappa_args[0] == "all")) {
    cfg.kappa_all = true;
  } else {
    for (const auto& k : kappa_args) cfg.kappa_list.push_back(parse_kappa(k));
  }
  auto colon = n_range.find(':');
  if (colon == std::string::npos) {
    cfg.n_min = cfg.n_max = std::stoi(n_range);
  } else {
    cfg.n_min = std::stoi(n_range.substr(0, colon));
    cfg.n_max = std::stoi(n_range.substr(colon + 1));
  }
  if (m_arg != "all") {
    std::size_t pos = 0;
    while (pos < m_arg.size()) {
      std::size_t comma = m_arg.find(',', pos);
      if (comma == std::string::npos) comma = m_arg.size();
      cfg.m_list.push_back(std::stoi(m_arg.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  if (cfg.cache_path.empty()) {
    if (const char* env = std::getenv("SPECHT_CACHE_DIR")) cfg.cache_path = env;
  }

  return with_field(cfg.field, [&]<class F>(typename F::Context ctx) {
    auto records = run_sweep<F>(cfg, ctx);
    const std::string text =
        cfg.format == "csv" ? records_to_csv(records) : records_to_json(cfg, records);
    emit(text, cfg.output_path);
    if (const ReportRecord* f = first_failure(records)) {
      std::cerr << "first failing check: " << f->check << " at e=" << f->e << " kappa=("
                << f->kappa1 << "," << f->kappa2 << ") n=" << f->n << " m=" << f->m << ": "
                << f->details << "\n";
      return kExitFail;
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructor and verifier for Specht modules of cyclotomic KLR algebras "
               "labelled by hook bipartitions"};
  app.require_subcommand(1);

  PointArgs basis_args;
  auto* basis_cmd = app.add_subcommand("basis", "list the standard basis and residue sequences");
  add_point_options(basis_cmd, basis_args);

  PointArgs matrix_args;
  std::string gen = "psi:1";
  auto* matrix_cmd = app.add_subcommand("matrix", "emit one generator matrix");
  add_point_options(matrix_cmd, matrix_args);
  matrix_cmd->add_option("--gen", gen, "psi:<l>, y:<i> or e:<i1,...,in>")->required();

  PointArgs klr_args;
  auto* klr_cmd =
      app.add_subcommand("verify-klr", "check the KLR presentation and matrix sparsity");
  add_point_options(klr_cmd, klr_args);

  PointArgs homs_args;
  auto* homs_cmd = app.add_subcommand(
      "verify-homs", "check hom realizations, exactness and the commutative diagram");
  add_point_options(homs_cmd, homs_args, /*with_m=*/false);

  PointArgs series_args;
  auto* series_cmd =
      app.add_subcommand("comp-series", "construct and verify the composition series");
  add_point_options(series_cmd, series_args);

  RunConfig sweep_cfg;
  std::vector<std::string> sweep_kappa;
  std::string sweep_n = "2:6", sweep_m = "all", sweep_field = "rational";
  auto* sweep_cmd = app.add_subcommand("sweep", "run every check over a parameter grid");
  sweep_cmd->add_option("--e", sweep_cfg.e_list, "list of quantum characteristics")->required();
  sweep_cmd->add_option("--kappa", sweep_kappa, "multicharges (repeatable), or 'all'");
  sweep_cmd->add_option("--n-range", sweep_n, "n range, e.g. 2:8 or a single n");
  sweep_cmd->add_option("--m", sweep_m, "'all' or a comma list of leg lengths");
  sweep_cmd->add_option("--field", sweep_field, "rational or fp:<prime>");
  sweep_cmd->add_option("--seed", sweep_cfg.seed, "randomized-oracle seed");
  sweep_cmd->add_option("--output", sweep_cfg.output_path, "output file (default stdout)");
  sweep_cmd->add_option("--format", sweep_cfg.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--cache", sweep_cfg.cache_path,
                        "result cache directory (or env SPECHT_CACHE_DIR)");
  sweep_cmd->add_option("--jobs", sweep_cfg.jobs, "parallel tasks (default 1)");
  sweep_cmd->add_option("--n-guard", sweep_cfg.n_guard, "refuse n beyond this bound (default 14)");

  std::string example_name;
  std::string example_output;
  auto* example_cmd = app.add_subcommand("example", "replay a worked example by name");
  example_cmd->add_option("--name", example_name,
                          "residues-5-3 | case2-n5 | case3-n5 | case4-n6")
      ->required();
  example_cmd->add_option("--output", example_output, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*basis_cmd) return run_basis(basis_args);
    if (*matrix_cmd) return run_matrix(matrix_args, gen);
    if (*klr_cmd) return run_verify_klr(klr_args);
    if (*homs_cmd) return run_verify_homs(homs_args);
    if (*series_cmd) return run_comp_series(series_args);
    if (*sweep_cmd) return run_sweep_cmd(sweep_cfg, sweep_kappa, sweep_n, sweep_m, sweep_field);
    if (*example_cmd) return run_example(example_name, example_output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
