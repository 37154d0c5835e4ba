// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "paramadapt/errors.hpp"
#include "paramadapt/oracle.hpp"

namespace paramadapt::cli {

namespace fs = std::filesystem;

namespace {

const std::set<std::string> kRunKeys = {"fcidump", "name",  "criterion", "start",
                                        "epsilon", "grad_norm_tol", "k_max", "pool",
                                        "eta",     "optimizer"};
const std::set<std::string> kOptimizerKeys = {"gtol", "max_evals"};

template <class T>
T get_as(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

double get_number(const json& doc, const char* key) {
  if (!doc.at(key).is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
  return doc.at(key).get<double>();
}

std::size_t get_count(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

// Shared settings of a run document (everything but the integral source).
struct Settings {
  std::vector<adapt::AdaptConfig> configs;
  std::string name;
};

Settings parse_settings(const json& doc, const std::optional<std::string>& criterion_override,
                        const std::set<std::string>& allowed) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [k, v] : doc.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown config key '" + k + "'");
  }

  adapt::AdaptConfig base;
  try {
    if (doc.contains("epsilon")) base.epsilon = get_number(doc, "epsilon");
    if (doc.contains("grad_norm_tol")) base.grad_norm_tol = get_number(doc, "grad_norm_tol");
    if (doc.contains("k_max")) base.k_max = get_count(doc, "k_max");
    if (doc.contains("pool")) base.pool_kind = adapt::parse_pool_kind(get_as<std::string>(doc, "pool"));
    if (doc.contains("eta")) base.eta = get_number(doc, "eta");
    if (doc.contains("optimizer")) {
      const json& o = doc.at("optimizer");
      if (!o.is_object()) throw ConfigError("config key 'optimizer' must be an object");
      for (const auto& [k, v] : o.items()) {
        if (!kOptimizerKeys.count(k)) throw ConfigError("unknown optimizer key '" + k + "'");
      }
      if (o.contains("gtol")) base.optimizer.gtol = get_number(o, "gtol");
      if (o.contains("max_evals")) base.optimizer.max_evals = get_count(o, "max_evals");
    }

    std::string crit = criterion_override.value_or(
        doc.contains("criterion") ? get_as<std::string>(doc, "criterion") : std::string("parameter"));
    std::optional<adapt::Start> start;
    if (doc.contains("start")) start = adapt::parse_start(get_as<std::string>(doc, "start"));

    Settings s;
    auto add = [&](adapt::Criterion c, adapt::Start st) {
      adapt::AdaptConfig cfg = base;
      cfg.criterion = c;
      cfg.start = st;
      cfg.validate();
      s.configs.push_back(cfg);
    };
    if (crit == "both") {
      add(adapt::Criterion::Gradient, adapt::Start::Warm);
      add(adapt::Criterion::Parameter, start.value_or(adapt::Start::Hot));
    } else {
      const adapt::Criterion c = adapt::parse_criterion(crit);
      const adapt::Start fallback =
          c == adapt::Criterion::Gradient ? adapt::Start::Warm : adapt::Start::Hot;
      add(c, start.value_or(fallback));
    }
    if (doc.contains("name")) s.name = get_as<std::string>(doc, "name");
    return s;
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
}

RunConfig make_runs(const Settings& s, const std::string& fcidump, const fs::path& base_dir,
                    const std::string& name) {
  RunConfig rc;
  fs::path p(fcidump);
  if (p.is_relative()) p = base_dir / p;
  for (const auto& cfg : s.configs) {
    rc.runs.push_back({p.lexically_normal(), fcidump, name, cfg});
  }
  return rc;
}

json opt_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_json(const adapt::AdaptConfig& c) {
  return json{{"criterion", adapt::to_string(c.criterion)},
              {"start", adapt::to_string(c.start)},
              {"epsilon", c.epsilon},
              {"grad_norm_tol", c.grad_norm_tol},
              {"k_max", c.k_max},
              {"pool", adapt::to_string(c.pool_kind)},
              {"eta", c.eta},
              {"optimizer",
               {{"gtol", c.optimizer.gtol},
                {"max_evals", c.optimizer.max_evals},
                {"wolfe_c1", c.optimizer.wolfe_c1},
                {"wolfe_c2", c.optimizer.wolfe_c2}}}};
}

adapt::AdaptConfig config_from_json(const json& j) {
  adapt::AdaptConfig c;
  c.criterion = adapt::parse_criterion(j.at("criterion").get<std::string>());
  c.start = adapt::parse_start(j.at("start").get<std::string>());
  c.epsilon = j.at("epsilon").get<double>();
  c.grad_norm_tol = j.at("grad_norm_tol").get<double>();
  c.k_max = j.at("k_max").get<std::size_t>();
  c.pool_kind = adapt::parse_pool_kind(j.at("pool").get<std::string>());
  c.eta = j.at("eta").get<double>();
  const json& o = j.at("optimizer");
  c.optimizer.gtol = o.at("gtol").get<double>();
  c.optimizer.max_evals = o.at("max_evals").get<std::size_t>();
  c.optimizer.wolfe_c1 = o.at("wolfe_c1").get<double>();
  c.optimizer.wolfe_c2 = o.at("wolfe_c2").get<double>();
  return c;
}

std::optional<double> opt_double(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

json read_json_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open config '" + p.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + p.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  out << text;
}

// Loads the integrals; missing files and parse errors exit with kInputError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

chem::MoleculeData load_input(const fs::path& p) {
  if (!fs::exists(p)) throw InputError("integral file not found: " + p.string());
  try {
    return chem::load_fcidump(p);
  } catch (const ParseError& e) {
    throw InputError(p.string() + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

std::vector<std::string> write_trace(const adapt::AdaptTrace& t, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const std::string stem = trace_stem(t);
  const fs::path jp = out_dir / (stem + ".json");
  const fs::path cp = out_dir / (stem + ".csv");
  write_text(jp, trace_to_json(t).dump(2) + "\n");
  write_text(cp, trace_csv(t));
  return {jp.string(), cp.string()};
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::optional<std::string>& criterion, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  try {
    const fs::path cp(config_path);
    rc = parse_run_config(read_json_file(cp), cp.parent_path(), criterion);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }
  try {
    for (const auto& spec : rc.runs) {
      const adapt::AdaptTrace t = execute(spec);
      for (const auto& f : write_trace(t, out_dir)) out << "wrote " << f << "\n";
      out << adapt::to_string(t.config.criterion) << "/" << adapt::to_string(t.config.start)
          << ": " << t.records.size() << " operators, E = " << fmt_fixed(t.final_energy, 10)
          << ", termination " << adapt::to_string(t.termination) << "\n";
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

int cmd_fci(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  chem::MoleculeData m(1, 1, 1, 0.0);
  try {
    m = load_input(fs::path(path));
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const chem::SpinOrbitalHamiltonian h = chem::assemble_hamiltonian(m);
  const double e_hf = oracle::slater_condon_hf(m);
  const double e_det = oracle::fci_energy_determinant(m);
  std::optional<double> e_qubit;
  if (h.n_spin_orbitals() <= oracle::kMaxMatrixQubits) {
    e_qubit = oracle::fci_energy_qubit(h, oracle::sector_of(m));
  }
  if (as_json) {
    json j{{"fcidump", path},
           {"n_qubits", h.n_spin_orbitals()},
           {"n_electrons", m.n_electrons()},
           {"e_hf", e_hf},
           {"e_fci_determinant", e_det},
           {"e_fci_qubit", e_qubit ? json(*e_qubit) : json(nullptr)},
           {"difference", e_qubit ? json(*e_qubit - e_det) : json(nullptr)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "E_HF                " << fmt_fixed(e_hf, 12) << "\n";
  out << "E_FCI (determinant) " << fmt_fixed(e_det, 12) << "\n";
  if (e_qubit) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", *e_qubit - e_det);
    out << "E_FCI (qubit)       " << fmt_fixed(*e_qubit, 12) << "\n";
    out << "difference          " << buf << "\n";
  } else {
    out << "E_FCI (qubit)       unavailable (more than " << oracle::kMaxMatrixQubits << " qubits)\n";
  }
  return kOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, double target,
                std::ostream& out, std::ostream& err) {
  adapt::AdaptTrace a, b;
  try {
    auto load = [](const std::string& p) {
      std::ifstream in(p);
      if (!in) throw InputError("cannot open trace '" + p + "'");
      try {
        return trace_from_json(json::parse(in));
      } catch (const std::exception& e) {
        throw InputError("'" + p + "' is not a valid trace: " + e.what());
      }
    };
    a = load(a_path);
    b = load(b_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Milestone ma = first_reaching(a, target);
  const Milestone mb = first_reaching(b, target);
  auto line = [&](const char* tag, const adapt::AdaptTrace& t, const Milestone& m) {
    out << tag << " " << trace_stem(t) << ": ";
    if (m.k) {
      out << "k = " << *m.k << ", cumulative_cost = " << m.cost << "\n";
    } else {
      out << "not reached\n";
    }
  };
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", target);
  out << "target error " << buf << " Hartree\n";
  line("A", a, ma);
  line("B", b, mb);
  if (ma.k && mb.k) {
    out << "operators: " << fmt_fixed(reduction_percent(double(*ma.k), double(*mb.k)), 2)
        << "% reduction\n";
    out << "cost: " << fmt_fixed(reduction_percent(double(ma.cost), double(mb.cost)), 2)
        << "% reduction\n";
  } else {
    out << "operators: n/a\ncost: n/a\n";
  }
  return kOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
  std::vector<RunConfig> grid;
  try {
    const fs::path cp(config_path);
    grid = parse_sweep_config(read_json_file(cp), cp.parent_path());
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }
  json summary = json::array();
  bool failed = false;
  for (const auto& rc : grid) {
    json entry{{"fcidump", rc.runs.front().fcidump_as_written}};
    try {
      json traces = json::array();
      for (const auto& spec : rc.runs) {
        const adapt::AdaptTrace t = execute(spec);
        const auto files = write_trace(t, out_dir);
        traces.push_back({{"trace", fs::path(files[0]).filename().string()},
                          {"operators", t.records.size()},
                          {"final_energy", t.final_energy},
                          {"cumulative_cost", t.ledger.cumulative()}});
        for (const auto& f : files) out << "wrote " << f << "\n";
      }
      entry["status"] = "ok";
      entry["traces"] = traces;
    } catch (const std::exception& e) {
      failed = true;
      entry["status"] = "failed";
      entry["error"] = e.what();
      err << "error: " << e.what() << "\n";
    }
    summary.push_back(entry);
  }
  fs::create_directories(out_dir);
  write_text(fs::path(out_dir) / "sweep_summary.json", json{{"runs", summary}}.dump(2) + "\n");
  return failed ? kPartialFailure : kOk;
}

}  // namespace

RunConfig parse_run_config(const json& doc, const fs::path& base_dir,
                           const std::optional<std::string>& criterion_override) {
  const Settings s = parse_settings(doc, criterion_override, kRunKeys);
  if (!doc.contains("fcidump")) throw ConfigError("config key 'fcidump' is required");
  const auto src = get_as<std::string>(doc, "fcidump");
  const std::string name = s.name.empty() ? fs::path(src).stem().string() : s.name;
  return make_runs(s, src, base_dir, name);
}

std::vector<RunConfig> parse_sweep_config(const json& doc, const fs::path& base_dir) {
  std::set<std::string> allowed = kRunKeys;
  allowed.erase("fcidump");
  allowed.insert("grid");
  const Settings s = parse_settings(doc, std::nullopt, allowed);
  if (!doc.contains("grid") || !doc.at("grid").is_array()) {
    throw ConfigError("sweep config needs a 'grid' array of integral files");
  }
  const json& g = doc.at("grid");
  if (g.empty()) throw ConfigError("sweep grid is empty");
  std::vector<RunConfig> out;
  for (const auto& e : g) {
    if (!e.is_string()) throw ConfigError("sweep grid entries must be strings");
    const auto src = e.get<std::string>();
    std::string name = fs::path(src).stem().string();
    if (!s.name.empty()) name = s.name + "_" + name;
    out.push_back(make_runs(s, src, base_dir, name));
  }
  return out;
}

json convention_header() {
  return json{
      {"jordan_wigner", "a_p = (X_p + iY_p)/2 Z_{p-1}...Z_0, a+_p = (X_p - iY_p)/2 Z_{p-1}...Z_0; "
                        "qubit p is bit p of the basis index"},
      {"orbital_order", "interleaved: spin orbital 2p is alpha, 2p+1 is beta of spatial orbital p"},
      {"pool", "spin-resolved UCC singles (i->a) then doubles (i>j -> a>b), lexicographic; "
               "hi_uccsd keeps operators with a matching Hamiltonian term |c| > eta"},
      {"cost", "fermionic-term units; scan: parameter sum_i nf_i|H_i| + 2 ng_i|H_i|, gradient "
               "sum_i 2|H_i|; global: nf T + 2 m ng T"}};
}

json trace_to_json(const adapt::AdaptTrace& t) {
  json recs = json::array();
  for (const auto& r : t.records) {
    recs.push_back({{"k", r.k},
                    {"chosen_pool_index", r.chosen_pool_index},
                    {"chosen_label", r.chosen_label},
                    {"selection_score", r.selection_score},
                    {"initial_gradient", r.initial_gradient},
                    {"initial_param", r.initial_param},
                    {"energy_after_global", r.energy_after_global},
                    {"error_vs_fci", r.error_vs_fci ? json(*r.error_vs_fci) : json(nullptr)},
                    {"all_params", r.all_params},
                    {"global_func_evals", r.global_func_evals},
                    {"global_grad_evals", r.global_grad_evals},
                    {"global_converged", r.global_converged},
                    {"ledger_entry",
                     {{"scan_cost", r.ledger_entry.scan_cost},
                      {"global_cost", r.ledger_entry.global_cost}}},
                    {"cumulative_cost", r.cumulative_cost}});
  }
  json ledger = json::array();
  for (const auto& e : t.ledger.per_iteration()) {
    ledger.push_back({{"scan_cost", e.scan_cost}, {"global_cost", e.global_cost}});
  }
  return json{{"schema", kTraceSchema},
              {"conventions", convention_header()},
              {"config", config_json(t.config)},
              {"molecule",
               {{"name", t.molecule},
                {"source", t.source},
                {"n_qubits", t.n_qubits},
                {"n_electrons", t.n_electrons},
                {"pool_size", t.pool_size},
                {"full_term_count", t.full_term_count},
                {"hf_energy", t.hf_energy},
                {"fci_energy", t.fci_energy ? json(*t.fci_energy) : json(nullptr)}}},
              {"records", recs},
              {"final_energy", opt_json(t.final_energy)},
              {"termination", adapt::to_string(t.termination)},
              {"ledger", {{"cumulative", t.ledger.cumulative()}, {"per_iteration", ledger}}}};
}

adapt::AdaptTrace trace_from_json(const json& j) {
  if (j.value("schema", std::string()) != kTraceSchema) {
    throw InvalidInput("unsupported trace schema");
  }
  adapt::AdaptTrace t;
  t.config = config_from_json(j.at("config"));
  const json& m = j.at("molecule");
  t.molecule = m.at("name").get<std::string>();
  t.source = m.at("source").get<std::string>();
  t.n_qubits = m.at("n_qubits").get<std::size_t>();
  t.n_electrons = m.at("n_electrons").get<int>();
  t.pool_size = m.at("pool_size").get<std::size_t>();
  t.full_term_count = m.at("full_term_count").get<std::size_t>();
  t.hf_energy = m.at("hf_energy").get<double>();
  t.fci_energy = opt_double(m, "fci_energy");
  for (const auto& r : j.at("records")) {
    adapt::IterationRecord rec;
    rec.k = r.at("k").get<std::size_t>();
    rec.chosen_pool_index = r.at("chosen_pool_index").get<std::size_t>();
    rec.chosen_label = r.at("chosen_label").get<std::string>();
    rec.selection_score = r.at("selection_score").get<double>();
    rec.initial_gradient = r.at("initial_gradient").get<double>();
    rec.initial_param = r.at("initial_param").get<double>();
    rec.energy_after_global = r.at("energy_after_global").get<double>();
    rec.error_vs_fci = opt_double(r, "error_vs_fci");
    rec.all_params = r.at("all_params").get<std::vector<double>>();
    rec.global_func_evals = r.at("global_func_evals").get<std::size_t>();
    rec.global_grad_evals = r.at("global_grad_evals").get<std::size_t>();
    rec.global_converged = r.at("global_converged").get<bool>();
    rec.ledger_entry.scan_cost = r.at("ledger_entry").at("scan_cost").get<std::uint64_t>();
    rec.ledger_entry.global_cost = r.at("ledger_entry").at("global_cost").get<std::uint64_t>();
    rec.cumulative_cost = r.at("cumulative_cost").get<std::uint64_t>();
    t.records.push_back(std::move(rec));
  }
  t.final_energy = opt_double(j, "final_energy").value_or(std::nan(""));
  t.termination = adapt::parse_termination(j.at("termination").get<std::string>());
  std::vector<adapt::LedgerEntry> entries;
  for (const auto& e : j.at("ledger").at("per_iteration")) {
    entries.push_back({e.at("scan_cost").get<std::uint64_t>(), e.at("global_cost").get<std::uint64_t>()});
  }
  t.ledger = adapt::CostLedger::from_entries(std::move(entries));
  if (t.ledger.cumulative() != j.at("ledger").at("cumulative").get<std::uint64_t>()) {
    throw InvalidInput("ledger entries do not sum to the cumulative cost");
  }
  return t;
}

std::string trace_csv(const adapt::AdaptTrace& t) {
  std::ostringstream s;
  s << "k,energy,error_vs_fci,cumulative_cost,chosen_op,score,initial_param\n";
  for (const auto& r : t.records) {
    s << r.k << ',' << fmt(r.energy_after_global) << ','
      << (r.error_vs_fci ? fmt(*r.error_vs_fci) : std::string()) << ',' << r.cumulative_cost
      << ',' << r.chosen_pool_index << ',' << fmt(r.selection_score) << ','
      << fmt(r.initial_param) << '\n';
  }
  return s.str();
}

std::string trace_stem(const adapt::AdaptTrace& t) {
  return t.molecule + "_" + adapt::to_string(t.config.criterion) + "_" +
         adapt::to_string(t.config.start);
}

Milestone first_reaching(const adapt::AdaptTrace& t, double target_error) {
  for (const auto& r : t.records) {
    if (r.error_vs_fci && std::abs(*r.error_vs_fci) <= target_error) return {r.k, r.cumulative_cost};
  }
  return {};
}

double reduction_percent(double a, double b) { return a == 0.0 ? 0.0 : 100.0 * (a - b) / a; }

adapt::AdaptTrace execute(const RunSpec& spec) {
  const chem::MoleculeData m = load_input(spec.fcidump);
  const chem::SpinOrbitalHamiltonian h = chem::assemble_hamiltonian(m);
  const double e_fci = oracle::fci_energy_determinant(m);
  const pool::Pool pool = adapt::build_pool(m, h, spec.config);
  if (pool.empty()) throw InputError(spec.fcidump_as_written + ": operator pool is empty");
  adapt::AdaptTrace t = adapt::run_adapt(h, m, pool, spec.config, e_fci);
  t.molecule = spec.name;
  t.source = spec.fcidump_as_written;
  return t;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive VQE laboratory: gradient and parameter selection on an exact simulator",
               "padapt"};
  app.require_subcommand(1);

  std::string run_config, run_out = ".";
  std::optional<std::string> run_criterion;
  auto* run = app.add_subcommand("run", "Run the adaptive loop from a JSON config");
  run->add_option("config", run_config, "run config (JSON)")->required();
  run->add_option("--out", run_out, "output directory");
  run->add_option("--criterion", run_criterion, "gradient | parameter | both")
      ->check(CLI::IsMember({"gradient", "parameter", "both"}));

  std::string fci_path;
  bool fci_json = false;
  auto* fci = app.add_subcommand("fci", "Print HF and exact energies of an FCIDUMP");
  fci->add_option("fcidump", fci_path, "integral file")->required();
  fci->add_flag("--json", fci_json, "machine-readable output");

  std::string cmp_a, cmp_b;
  double cmp_target = 0.0;
  auto* cmp = app.add_subcommand("compare", "Operators and cost to reach a target error (B vs A)");
  cmp->add_option("trace_a", cmp_a, "reference trace")->required();
  cmp->add_option("trace_b", cmp_b, "compared trace")->required();
  cmp->add_option("--target-error", cmp_target, "error threshold in Hartree")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string sweep_config, sweep_out = ".";
  auto* sweep = app.add_subcommand("sweep", "Run a config over a grid of FCIDUMP files");
  sweep->add_option("config", sweep_config, "sweep config (JSON)")->required();
  sweep->add_option("--out", sweep_out, "output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (*run) return cmd_run(run_config, run_out, run_criterion, out, err);
    if (*fci) return cmd_fci(fci_path, fci_json, out, err);
    if (*cmp) return cmd_compare(cmp_a, cmp_b, cmp_target, out, err);
    if (*sweep) return cmd_sweep(sweep_config, sweep_out, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPartialFailure;
  }
  return kInvalidConfig;
}

}  // namespace paramadapt::cli
