// Command-line front end: every headline quantity (sequence values, custom
// sweeps, the invariant suite, the PDE cross-check, the Hamiltonian table)
// behind one subcommand each, emitting deterministic CSV/JSON and optional
// SVG plots.

#include "hjg/hamiltonian.hpp"
#include "hjg/pde.hpp"
#include "hjg/shapley.hpp"
#include "hjg/textio.hpp"
#include "hjg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using hjg::ExactQuad;
using ordered_json = nlohmann::ordered_json;

// Stream for --out: the named file, or stdout when no path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

struct TableConfig {
  std::string out;
  std::string format = "csv";
  bool exact = false;
  int digits = 12;
};

void add_table_flags(CLI::App* cmd, TableConfig& cfg, bool exact_flag = true) {
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--digits", cfg.digits,
                  "fractional digits for exact-valued cells")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  if (exact_flag)
    cmd->add_flag("--exact", cfg.exact,
                  "add p/q+r/s*sqrt2 columns for exact quantities");
}

void emit(const TableConfig& cfg, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& cells,
          const std::vector<ordered_json>& objects,
          const std::string& trailer = "") {
  Output sink(cfg.out);
  if (cfg.format == "csv") {
    hjg::write_csv(sink.stream(), header, cells);
    if (!trailer.empty()) sink.stream() << trailer << '\n';
  } else {
    ordered_json doc = ordered_json::array();
    for (const ordered_json& o : objects) doc.push_back(o);
    sink.stream() << doc.dump(2) << '\n';
  }
}

int cmd_sequences(int n_min, int n_max, int truncation, int jobs, bool plot,
                  const TableConfig& cfg) {
  if (n_max > 10) throw std::domain_error("--n-max must be at most 10");
  if (n_min > n_max)
    throw std::domain_error("--n-min must not exceed --n-max");
  std::vector<hjg::SweepEntry> entries;
  for (int n = n_min; n <= n_max; ++n) {
    const int N = truncation > 0 ? truncation : n + 10;
    entries.push_back({"lambda", n, hjg::lambda_seq(n), N});
  }
  for (int n = n_min; n <= n_max; ++n) {
    const int N = truncation > 0 ? truncation : n + 10;
    entries.push_back({"mu", n, hjg::mu_seq(n), N});
  }
  const std::vector<hjg::SequenceRecord> recs =
      hjg::sweep(entries, /*stability=*/true, jobs);

  std::vector<std::string> header = {"n",       "seq",     "lambda_exact",
                                     "lambda_float", "w_plus", "w_minus",
                                     "N",       "stability_gap"};
  if (cfg.exact) {
    header.push_back("w_plus_exact");
    header.push_back("w_minus_exact");
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<ordered_json> objects;
  for (const hjg::SequenceRecord& r : recs) {
    std::vector<std::string> row = {
        std::to_string(r.n),
        r.seq,
        hjg::exact_string(r.lambda),
        hjg::format_double(hjg::to_double(r.lambda)),
        hjg::approx(r.w.w_plus, cfg.digits),
        hjg::approx(r.w.w_minus, cfg.digits),
        std::to_string(r.truncation),
        hjg::format_double(r.stability_gap)};
    ordered_json o;
    o["n"] = r.n;
    o["seq"] = r.seq;
    o["lambda_exact"] = hjg::exact_string(r.lambda);
    o["lambda_float"] = hjg::to_double(r.lambda);
    o["w_plus"] = hjg::approx(r.w.w_plus, cfg.digits);
    o["w_minus"] = hjg::approx(r.w.w_minus, cfg.digits);
    o["N"] = r.truncation;
    o["stability_gap"] = r.stability_gap;
    if (cfg.exact) {
      row.push_back(hjg::exact_string(r.w.w_plus));
      row.push_back(hjg::exact_string(r.w.w_minus));
      o["w_plus_exact"] = hjg::exact_string(r.w.w_plus);
      o["w_minus_exact"] = hjg::exact_string(r.w.w_minus);
    }
    cells.push_back(std::move(row));
    objects.push_back(std::move(o));
  }
  emit(cfg, header, cells, objects);
  if (plot) {
    if (cfg.out.empty())
      throw std::domain_error("--plot requires --out (plot goes to OUT.svg)");
    std::ofstream svg(cfg.out + ".svg", std::ios::binary);
    if (!svg)
      throw std::runtime_error("cannot open plot file: " + cfg.out + ".svg");
    hjg::write_sequence_plot(svg, recs);
  }
  return 0;
}

int cmd_sweep(const std::vector<std::string>& lambdas, int truncation,
              int jobs, const TableConfig& cfg) {
  std::vector<hjg::SweepEntry> entries;
  for (const std::string& text : lambdas)
    entries.push_back(
        {"custom", 0, ExactQuad(hjg::parse_decimal_rational(text)),
         truncation});
  const std::vector<hjg::SequenceRecord> recs =
      hjg::sweep(entries, /*stability=*/true, jobs);

  std::vector<std::string> header = {"lambda_exact", "lambda_float", "w_plus",
                                     "w_minus",      "N",            "stability_gap"};
  if (cfg.exact) {
    header.push_back("w_plus_exact");
    header.push_back("w_minus_exact");
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<ordered_json> objects;
  for (const hjg::SequenceRecord& r : recs) {
    std::vector<std::string> row = {
        hjg::exact_string(r.lambda),
        hjg::format_double(hjg::to_double(r.lambda)),
        hjg::approx(r.w.w_plus, cfg.digits),
        hjg::approx(r.w.w_minus, cfg.digits),
        std::to_string(r.truncation),
        hjg::format_double(r.stability_gap)};
    ordered_json o;
    o["lambda_exact"] = hjg::exact_string(r.lambda);
    o["lambda_float"] = hjg::to_double(r.lambda);
    o["w_plus"] = hjg::approx(r.w.w_plus, cfg.digits);
    o["w_minus"] = hjg::approx(r.w.w_minus, cfg.digits);
    o["N"] = r.truncation;
    o["stability_gap"] = r.stability_gap;
    if (cfg.exact) {
      row.push_back(hjg::exact_string(r.w.w_plus));
      row.push_back(hjg::exact_string(r.w.w_minus));
      o["w_plus_exact"] = hjg::exact_string(r.w.w_plus);
      o["w_minus_exact"] = hjg::exact_string(r.w.w_minus);
    }
    cells.push_back(std::move(row));
    objects.push_back(std::move(o));
  }
  emit(cfg, header, cells, objects);
  return 0;
}

int cmd_verify(bool perturb, std::uint64_t seed, int jobs) {
  hjg::VerifyOptions opts;
  opts.perturb = perturb;
  opts.seed = seed;
  opts.jobs = jobs;
  const std::vector<hjg::CheckResult> results = hjg::run_verify(opts);
  std::size_t width = 0;
  for (const hjg::CheckResult& r : results)
    width = std::max(width, r.anchor.size());
  int passed = 0;
  for (const hjg::CheckResult& r : results) {
    std::string pad(width - r.anchor.size() + 2, ' ');
    std::cout << r.anchor << pad << (r.pass ? "PASS" : "FAIL") << "  "
              << r.detail << '\n';
    passed += r.pass ? 1 : 0;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == int(results.size()) ? 0 : 1;
}

int cmd_pde(const std::string& lambda_text, int grid,
            const TableConfig& cfg) {
  const double lambda =
      hjg::to_double(ExactQuad(hjg::parse_decimal_rational(lambda_text)));
  const hjg::CompareResult cmp = hjg::compare_exact(lambda, grid);

  const std::vector<std::string> header = {"x", "v_numeric", "u_exact", "gap"};
  std::vector<std::vector<std::string>> cells;
  std::vector<ordered_json> objects;
  for (const hjg::CompareRow& r : cmp.rows) {
    cells.push_back({hjg::format_double(r.x), hjg::format_double(r.v_numeric),
                     hjg::format_double(r.u_exact), hjg::format_double(r.gap)});
    ordered_json o;
    o["x"] = r.x;
    o["v_numeric"] = r.v_numeric;
    o["u_exact"] = r.u_exact;
    o["gap"] = r.gap;
    objects.push_back(std::move(o));
  }
  if (cfg.format == "json") {
    Output sink(cfg.out);
    ordered_json doc;
    doc["rows"] = objects;
    doc["sup_error"] = cmp.sup_error;
    sink.stream() << doc.dump(2) << '\n';
    return 0;
  }
  emit(cfg, header, cells, objects,
       "# sup_error=" + hjg::format_double(cmp.sup_error));
  return 0;
}

int cmd_hamiltonian(int truncation, const TableConfig& cfg) {
  const hjg::HamiltonianSpec spec{truncation};
  std::vector<std::string> header = {"x", "p", "H"};
  if (cfg.exact) header.push_back("H_exact");
  std::vector<std::vector<std::string>> cells;
  std::vector<ordered_json> objects;
  for (int xi = 0; xi <= 4; ++xi) {
    const ExactQuad x = ExactQuad::ratio(xi, 4);
    for (int pi = 0; pi <= 24; ++pi) {
      const ExactQuad p = ExactQuad::ratio(pi, 4) - ExactQuad(3);
      const ExactQuad value = hjg::hamiltonian(x, p, spec);
      std::vector<std::string> row = {hjg::approx(x, cfg.digits),
                                      hjg::approx(p, cfg.digits),
                                      hjg::approx(value, cfg.digits)};
      ordered_json o;
      o["x"] = hjg::approx(x, cfg.digits);
      o["p"] = hjg::approx(p, cfg.digits);
      o["H"] = hjg::approx(value, cfg.digits);
      if (cfg.exact) {
        row.push_back(hjg::exact_string(value));
        o["H_exact"] = hjg::exact_string(value);
      }
      cells.push_back(std::move(row));
      objects.push_back(std::move(o));
    }
  }
  emit(cfg, header, cells, objects);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and numerical tooling for a discounted stochastic game whose "
      "value oscillates as the discount vanishes"};
  app.require_subcommand(1);

  // sequences
  int n_min = 3, n_max = 8, seq_trunc = 0, seq_jobs = 1;
  bool plot = false;
  TableConfig seq_cfg;
  CLI::App* seq = app.add_subcommand(
      "sequences", "solve the two discount sequences and tabulate the split");
  seq->add_option("--n-min", n_min, "first sequence index")
      ->capture_default_str();
  seq->add_option("--n-max", n_max, "last sequence index")
      ->capture_default_str();
  seq->add_option("--truncation", seq_trunc,
                  "fixed action-set truncation (default: n + 10 per record)");
  seq->add_option("--jobs", seq_jobs, "parallel workers for sweep entries")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  seq->add_flag("--plot", plot, "also write an SVG chart next to --out");
  add_table_flags(seq, seq_cfg);

  // sweep
  std::vector<std::string> sweep_lambdas;
  int sweep_trunc = 16, sweep_jobs = 1;
  TableConfig sweep_cfg;
  CLI::App* swp = app.add_subcommand(
      "sweep", "solve an explicit list of discounts exactly");
  swp->add_option("--lambda", sweep_lambdas,
                  "discount as a decimal or p/q (repeatable)")
      ->required();
  swp->add_option("--truncation", sweep_trunc, "action-set truncation")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  swp->add_option("--jobs", sweep_jobs, "parallel workers for sweep entries")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_table_flags(swp, sweep_cfg);

  // verify
  bool perturb = false;
  std::uint64_t seed = 20240901;
  int verify_jobs = 1;
  CLI::App* ver =
      app.add_subcommand("verify", "run the cross-module invariant suite");
  ver->add_flag("--perturb", perturb,
                "inject a fault to prove the suite can fail (test only)");
  ver->add_option("--seed", seed, "seed for randomized checks")
      ->capture_default_str();
  ver->add_option("--jobs", verify_jobs, "parallel workers")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  // pde
  std::string pde_lambda = "0.1";
  int grid = 400;
  TableConfig pde_cfg;
  CLI::App* pde = app.add_subcommand(
      "pde", "finite-difference solve and comparison against the exact pair");
  pde->add_option("--lambda", pde_lambda, "discount in (0.01, 1]")
      ->capture_default_str();
  pde->add_option("--grid", grid, "grid cells (even, >= 8)")
      ->capture_default_str();
  add_table_flags(pde, pde_cfg, /*exact_flag=*/false);

  // hamiltonian
  int ham_trunc = 16;
  TableConfig ham_cfg;
  CLI::App* ham = app.add_subcommand(
      "hamiltonian", "tabulate H(x, p) on a sample grid");
  ham->add_option("--truncation", ham_trunc, "action-set truncation")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_table_flags(ham, ham_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(seq))
      return cmd_sequences(n_min, n_max, seq_trunc, seq_jobs, plot, seq_cfg);
    if (app.got_subcommand(swp))
      return cmd_sweep(sweep_lambdas, sweep_trunc, sweep_jobs, sweep_cfg);
    if (app.got_subcommand(ver)) return cmd_verify(perturb, seed, verify_jobs);
    if (app.got_subcommand(pde)) return cmd_pde(pde_lambda, grid, pde_cfg);
    if (app.got_subcommand(ham)) return cmd_hamiltonian(ham_trunc, ham_cfg);
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}
