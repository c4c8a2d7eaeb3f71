// Copyright 2026 The gzz-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gzzforge: command-line front end for the GZZ compiler.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 infeasible.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gzz/chempass.hpp"
#include "gzz/circuit.hpp"
#include "gzz/cliffordpass.hpp"
#include "gzz/diagpass.hpp"
#include "gzz/io.hpp"
#include "gzz/qftpass.hpp"
#include "gzz/schedule.hpp"
#include "gzz/simulate.hpp"
#include "gzz/solver.hpp"
#include "gzz/trapmodel.hpp"

namespace fs = std::filesystem;
using namespace gzz;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kInfeasible = 3;

// ---------------------------------------------------------------- utilities

int worker_count() {
  int n = int(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GZZ_FORGE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

// Runs job(i) for i in [0, count) on the worker pool. Results are written by
// index, so output order never depends on scheduling.
void parallel_for(int count, const std::function<void(int)>& job) {
  int workers = std::min(worker_count(), std::max(count, 1));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Independent stream per (seed, n, sample).
std::mt19937_64 sample_rng(std::uint64_t seed, int n, int sample) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(n), std::uint32_t(sample)};
  return std::mt19937_64(seq);
}

HollowSymmetricd random_binary(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  HollowSymmetricd a(n);
  for (auto& v : a.upper()) v = coin(rng) ? 1.0 : 0.0;
  return a;
}

BinaryMatrix random_lower_unitriangular(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  BinaryMatrix b = BinaryMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) b(i, j) = coin(rng) ? 1 : 0;
  return b;
}

HollowSymmetricd preset_coupling(int n) { return coupling_matrix(TrapParams::yb171_paper(n)); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

void emit_json(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

// Circuit goes to -o (stdout by default), the report to --report (stderr by default).
void emit_compiled(const Circuit& c, json report, const std::string& out, const std::string& report_path) {
  emit(to_text(c), out);
  if (report_path.empty())
    std::cerr << report.dump() << "\n";
  else
    emit_json(report, report_path);
}

json census_json(const Circuit& c) {
  Census cs = census(c);
  json j;
  j["gzz"] = cs.gzz;
  j["cz"] = cs.count(Op::CZ);
  j["two_qubit"] = cs.two_qubit;
  j["encoding_cost"] = cs.encoding_cost;
  json counts = json::object();
  for (auto [op, k] : cs.counts) counts[std::string(op_name(op))] = k;
  j["counts"] = counts;
  return j;
}

// Sum of LP times of every GZZ in c against J; Evolve-free circuits only.
double gzz_time(const Circuit& c, const HollowSymmetricd& j) {
  double t = 0;
  for (const Gate& g : c.gates())
    if (g.op == Op::GZZ) t += solve_lp(hadamard_quotient(*g.a, j)).total_time();
  return t;
}

Circuit load_circuit(const std::string& path) {
  return parse_circuit(read_file(path), fs::path(path).parent_path());
}

bool diagonal_or_x(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(),
                     [](const Gate& g) { return g.op == Op::X || op_is_diagonal(g.op); });
}

// Phase comparison of a (possibly ancilla-extended) circuit against a diagonal.
double diagonal_error(const Circuit& c, const DiagonalPhases& want) {
  if (c.n() < want.n) throw std::invalid_argument("verify: circuit narrower than reference");
  if (c.n() == want.n && diagonal_or_x(c)) return phase_distance(simulate_diagonal(c), want);
  RestrictedDiagonal r = restricted_diagonal(c, want.n);
  double err = phase_distance(r.phases, want);
  return std::max({err, r.off_diagonal, 1 - r.min_modulus});
}

double dense_error(const Circuit& c, const Eigen::MatrixXcd& want) {
  if (c.n() > 10) throw std::invalid_argument("verify: dense simulation is capped at 10 qubits");
  Eigen::MatrixXcd u = simulate_dense(c);
  if (u.rows() != want.rows()) throw std::invalid_argument("verify: circuit width does not match reference");
  // align the global phase on the largest reference entry
  Eigen::Index r, col;
  want.cwiseAbs().maxCoeff(&r, &col);
  std::complex<double> ph = u(r, col) == 0.0 ? 1.0 : want(r, col) / u(r, col);
  ph /= std::abs(ph);
  return (u * ph - want).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- commands

struct TrapArgs {
  std::string preset = "yb171-paper";
  std::string params;
  int n = 5;
  std::string out;
};

int run_trap(const TrapArgs& a) {
  TrapParams p;
  if (!a.params.empty())
    p = trap_params_from_json(read_json(a.params));
  else if (a.preset == "yb171-paper")
    p = TrapParams::yb171_paper(a.n);
  else
    throw std::invalid_argument("trap: unknown preset '" + a.preset + "'");
  p.validate();
  json j = to_json(coupling_matrix(p));
  j["units"] = "rad/s";
  j["length_scale"] = length_scale(p);
  Eigen::VectorXd z = equilibrium_positions(p);
  j["positions"] = std::vector<double>(z.data(), z.data() + z.size());
  j["params"] = to_json(p);
  emit_json(j, a.out);
  return kOk;
}

struct SynthArgs {
  std::string m, a, j, out;
  bool mip = false;
  double eps_l = 27e-6;
  double eps_u = -1;
  double alpha = 0.5, gap = 0.6, tol = 1e-9;
  double truncate_eps = -1;
};

int run_synth(const SynthArgs& s) {
  HollowSymmetricd m;
  HollowSymmetricd jmat;
  if (!s.m.empty()) {
    m = hollow_from_json(read_json(s.m));
  } else {
    if (s.a.empty() || s.j.empty()) throw std::invalid_argument("synth: give --m, or both --a and --j");
    jmat = hollow_from_json(read_json(s.j));
    m = hadamard_quotient(hollow_from_json(read_json(s.a)), jmat);
  }
  SolveOptions opts;
  opts.feas_tol = s.tol;
  opts.eps_l = s.eps_l;
  if (s.eps_u > 0) opts.eps_u = s.eps_u;
  opts.alpha = s.alpha;
  opts.mip_rel_gap = s.gap;

  json j;
  Decomposition d;
  if (s.mip) {
    MipResult r = solve_mip(m, opts);
    d = r.decomposition;
    j = to_json(d);
    j["mip"] = {{"objective", r.report.objective},
                {"bound", r.report.bound},
                {"gap", r.report.gap},
                {"nodes", r.report.nodes},
                {"eps_l", r.report.eps_l},
                {"eps_u", r.report.eps_u},
                {"status", r.report.status == MipStatus::optimal     ? "optimal"
                           : r.report.status == MipStatus::gap_reached ? "gap_reached"
                                                                       : "node_limit"}};
  } else {
    LpStats st;
    d = solve_lp(m, opts, &st);
    j = to_json(d);
    j["lp"] = {{"iterations", st.iterations}, {"residual", st.residual}};
  }
  if (s.truncate_eps >= 0) {
    if (jmat.n() == 0) throw std::invalid_argument("synth: --truncate needs --j");
    Truncation t = truncate(d, jmat, s.truncate_eps);
    j = to_json(t.kept);
    j["truncation"] = {{"dropped_time", t.dropped_time}, {"bound", t.bound}};
    if (t.exact) j["truncation"]["exact"] = *t.exact;
  }
  emit_json(j, s.out);
  return kOk;
}

struct ScheduleArgs {
  std::string decomp, j, out, circuit_out;
  std::string tour = "nn-2opt";
  bool raw = false;
};

int run_schedule(const ScheduleArgs& a) {
  Decomposition d = decomposition_from_json(read_json(a.decomp));
  TourHeuristic h = a.tour == "index"  ? TourHeuristic::index_order
                    : a.tour == "nn"   ? TourHeuristic::nearest_neighbor
                                       : TourHeuristic::nn_2opt;
  Schedule s = order_encodings(d, h);
  emit_json(to_json(s), a.out);
  if (!a.circuit_out.empty()) {
    if (a.j.empty()) throw std::invalid_argument("schedule: --circuit needs --j");
    HollowSymmetricd j = hollow_from_json(read_json(a.j));
    write_file(a.circuit_out, to_text(emit_gzz_circuit(s, j, a.raw ? EmitForm::raw : EmitForm::merged)));
  }
  return kOk;
}

struct CompileArgs {
  std::string out, report, j;
  std::string b, a, layers, spec, phases;
  int n = 5;
  bool with_swaps = false;
  double phi = 0;
  bool allow_size2 = false;
  std::string ancillas = "auto";
};

json with_time(json r, const Circuit& c, const CompileArgs& a) {
  if (!a.j.empty()) r["total_time"] = gzz_time(c, hollow_from_json(read_json(a.j)));
  return r;
}

int run_compile_cx(const CompileArgs& a) {
  BinaryMatrix b = binary_from_json(read_json(a.b));
  Circuit c = compile_cx_layer(b);
  json r = with_time(census_json(c), c, a);
  r["baseline_encoding_cost"] = census(fanout_circuit(b)).encoding_cost;
  emit_compiled(c, r, a.out, a.report);
  return kOk;
}

int run_compile_cz(const CompileArgs& a) {
  Circuit c = compile_cz_layer(hollow_from_json(read_json(a.a)));
  emit_compiled(c, with_time(census_json(c), c, a), a.out, a.report);
  return kOk;
}

int run_compile_clifford(const CompileArgs& a) {
  BruhatLayers l = bruhat_from_json(read_json(a.layers));
  Circuit c = compile_clifford(l);
  json r = with_time(census_json(c), c, a);
  CliffordCounts cc = clifford_layer_counts(l.n);
  r["worst_case"] = {{"gzz", cc.gzz}, {"cz", cc.cz}, {"multi_qubit_total", cc.multi_qubit_total()}};
  emit_compiled(c, r, a.out, a.report);
  return kOk;
}

int run_compile_qft(const CompileArgs& a) {
  Circuit c = qft_compile(a.n, a.with_swaps);
  json r = with_time(census_json(c), c, a);
  r["cs"] = census(c).count(Op::CS);
  emit_compiled(c, r, a.out, a.report);
  return kOk;
}

int run_compile_givens(const CompileArgs& a) {
  Circuit c = a.n == 2 ? givens_compile(a.phi) : givens_layer_compile(a.phi, a.n);
  emit_compiled(c, with_time(census_json(c), c, a), a.out, a.report);
  return kOk;
}

int run_compile_dynamics(const CompileArgs& a) {
  DynamicsSpec s = dynamics_from_json(read_json(a.spec));
  Circuit c = dynamics_circuit(s);
  emit_compiled(c, with_time(census_json(c), c, a), a.out, a.report);
  return kOk;
}

int run_compile_diagonal(const CompileArgs& a) {
  PhasePolynomial p = phase_poly_from_json(read_json(a.phases));
  DiagOptions o;
  o.allow_size2 = a.allow_size2;
  if (a.ancillas == "0")
    o.use_ancillas = false;
  else if (a.ancillas != "auto")
    throw std::invalid_argument("compile diagonal: --ancillas must be auto or 0");
  DiagonalCompilation dc = compile_diagonal(p, o);
  emit_compiled(dc.circuit, to_json(dc.report), a.out, a.report);
  return kOk;
}

struct VerifyArgs {
  std::string circuit;
  std::string gzz, gcx, phases;
  int qft = 0;
  bool with_swaps = false;
  double tol = 1e-9;
};

int run_verify(const VerifyArgs& v) {
  Circuit c = load_circuit(v.circuit);
  int refs = !v.gzz.empty() + !v.gcx.empty() + !v.phases.empty() + (v.qft > 0);
  if (refs != 1) throw std::invalid_argument("verify: give exactly one of --gzz, --qft, --gcx, --phases");

  double err = 0;
  std::string kind;
  if (!v.gzz.empty()) {
    kind = "gzz";
    HollowSymmetricd a = hollow_from_json(read_json(v.gzz));
    DiagonalPhases want = gzz_phases(a);
    err = (c.n() == a.n() && !diagonal_or_x(c)) ? dense_error(c, diagonal_matrix(want)) : diagonal_error(c, want);
  } else if (!v.phases.empty()) {
    kind = "phases";
    err = diagonal_error(c, phase_poly_from_json(read_json(v.phases)).phases());
  } else if (!v.gcx.empty()) {
    kind = "gcx";
    err = dense_error(c, gcx_matrix(binary_from_json(read_json(v.gcx))));
  } else {
    kind = "qft";
    err = dense_error(c, qft_reference(v.qft, v.with_swaps));
  }
  bool ok = err <= v.tol;
  json r = {{"reference", kind}, {"error", err}, {"tol", v.tol}, {"pass", ok}};
  std::cout << r.dump() << "\n";
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- benches

struct BenchArgs {
  int n_min = 4, n_max = 12, samples = 20;
  std::uint64_t seed = 1;
  std::string mode = "lp";
  double eps_l = 27e-6;
  std::string out;
};

std::vector<int> n_range(const BenchArgs& b) {
  if (b.n_min < 2 || b.n_max < b.n_min) throw std::invalid_argument("bench: bad n range");
  std::vector<int> ns;
  for (int n = b.n_min; n <= b.n_max; ++n) ns.push_back(n);
  return ns;
}

// CSV: n,sample,total_time,encoding_cost
int run_bench_gzz(const BenchArgs& b) {
  if (b.mode != "lp" && b.mode != "mip" && b.mode != "naive")
    throw std::invalid_argument("bench gzz: --mode must be lp, mip or naive");
  std::vector<int> ns = n_range(b);
  if (b.mode != "naive" && b.n_max > SolveOptions{}.max_n)
    throw std::invalid_argument("bench gzz: n exceeds the solver cap");
  struct Row {
    double time = 0;
    int cost = 0;
  };
  std::vector<Row> rows(ns.size() * std::size_t(b.samples));
  std::vector<HollowSymmetricd> js;
  for (int n : ns) js.push_back(preset_coupling(n));

  parallel_for(int(rows.size()), [&](int k) {
    std::size_t ni = std::size_t(k) / std::size_t(b.samples);
    int n = ns[ni], s = k % b.samples;
    auto rng = sample_rng(b.seed, n, s);
    HollowSymmetricd a = random_binary(n, rng);
    const HollowSymmetricd& j = js[ni];
    if (b.mode == "naive") {
      NaiveCost c = naive_cost(a, j);
      rows[std::size_t(k)] = {c.total_time, c.encoding_cost};
    } else if (b.mode == "lp") {
      Decomposition d = solve_lp(hadamard_quotient(a, j));
      rows[std::size_t(k)] = {d.total_time(), d.encoding_cost()};
    } else {
      SolveOptions o;
      o.eps_l = b.eps_l;
      Decomposition d = solve_mip(hadamard_quotient(a, j), o).decomposition;
      rows[std::size_t(k)] = {d.total_time(), d.encoding_cost()};
    }
  });

  std::ostringstream csv;
  csv << "n,sample,total_time,encoding_cost\n";
  for (std::size_t k = 0; k < rows.size(); ++k)
    csv << ns[k / std::size_t(b.samples)] << ',' << k % std::size_t(b.samples) << ',' << format_double(rows[k].time)
        << ',' << rows[k].cost << '\n';
  emit(csv.str(), b.out);
  return kOk;
}

// CSV: n,mean_bound,min_bound,max_bound,mean_exact,max_exact
int run_bench_truncation(const BenchArgs& b) {
  std::vector<int> ns = n_range(b);
  std::vector<double> bound(ns.size() * std::size_t(b.samples)), exact(bound.size());
  std::vector<HollowSymmetricd> js;
  for (int n : ns) js.push_back(preset_coupling(n));
  parallel_for(int(bound.size()), [&](int k) {
    std::size_t ni = std::size_t(k) / std::size_t(b.samples);
    auto rng = sample_rng(b.seed, ns[ni], k % b.samples);
    HollowSymmetricd a = random_binary(ns[ni], rng);
    Decomposition d = solve_lp(hadamard_quotient(a, js[ni]));
    Truncation t = truncate(d, js[ni], b.eps_l);
    bound[std::size_t(k)] = t.bound;
    exact[std::size_t(k)] = t.exact.value_or(std::nan(""));
  });
  std::ostringstream csv;
  csv << "n,mean_bound,min_bound,max_bound,mean_exact,max_exact\n";
  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    auto lo = bound.begin() + std::ptrdiff_t(ni * std::size_t(b.samples));
    auto hi = lo + b.samples;
    auto elo = exact.begin() + std::ptrdiff_t(ni * std::size_t(b.samples));
    auto ehi = elo + b.samples;
    double mean = 0, emean = 0;
    for (auto it = lo; it != hi; ++it) mean += *it;
    for (auto it = elo; it != ehi; ++it) emean += *it;
    csv << ns[ni] << ',' << format_double(mean / b.samples) << ',' << format_double(*std::min_element(lo, hi)) << ','
        << format_double(*std::max_element(lo, hi)) << ',' << format_double(emean / b.samples) << ','
        << format_double(*std::max_element(elo, ehi)) << '\n';
  }
  emit(csv.str(), b.out);
  return kOk;
}

// CSV: n,sample,compiled_cost,baseline_cost,gzz,cz
int run_bench_dircx(const BenchArgs& b) {
  std::vector<int> ns = n_range(b);
  struct Row {
    long compiled = 0, baseline = 0;
    int gzz = 0, cz = 0;
  };
  std::vector<Row> rows(ns.size() * std::size_t(b.samples));
  parallel_for(int(rows.size()), [&](int k) {
    int n = ns[std::size_t(k) / std::size_t(b.samples)];
    auto rng = sample_rng(b.seed, n, k % b.samples);
    BinaryMatrix m = random_lower_unitriangular(n, rng);
    Census c = census(compile_cx_layer(m));
    rows[std::size_t(k)] = {c.encoding_cost, census(fanout_circuit(m)).encoding_cost, c.gzz, c.count(Op::CZ)};
  });
  std::ostringstream csv;
  csv << "n,sample,compiled_cost,baseline_cost,gzz,cz\n";
  for (std::size_t k = 0; k < rows.size(); ++k)
    csv << ns[k / std::size_t(b.samples)] << ',' << k % std::size_t(b.samples) << ',' << rows[k].compiled << ','
        << rows[k].baseline << ',' << rows[k].gzz << ',' << rows[k].cz << '\n';
  emit(csv.str(), b.out);
  return kOk;
}

// CSV: n,gzz,cs,encoding_cost,lp_time,naive_time
int run_bench_qft(const BenchArgs& b) {
  std::vector<int> ns = n_range(b);
  struct Row {
    Census c;
    double lp = 0, naive = 0;
  };
  std::vector<Row> rows(ns.size());
  parallel_for(int(ns.size()), [&](int k) {
    Circuit c = qft_compile(ns[std::size_t(k)]);
    HollowSymmetricd j = preset_coupling(ns[std::size_t(k)]);
    Row r{census(c), gzz_time(c, j), 0};
    for (const Gate& g : c.gates())
      if (g.op == Op::GZZ) r.naive += naive_cost(*g.a, j).total_time;
    rows[std::size_t(k)] = r;
  });
  std::ostringstream csv;
  csv << "n,gzz,cs,encoding_cost,lp_time,naive_time\n";
  for (std::size_t k = 0; k < ns.size(); ++k)
    csv << ns[k] << ',' << rows[k].c.gzz << ',' << rows[k].c.count(Op::CS) << ',' << rows[k].c.encoding_cost << ','
        << format_double(rows[k].lp) << ',' << format_double(rows[k].naive) << '\n';
  emit(csv.str(), b.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gzzforge: GZZ gate synthesis and compilation"};
  app.require_subcommand(1);
  std::function<int()> action;

  TrapArgs trap;
  auto* trap_cmd = app.add_subcommand("trap", "Coupling matrix J of a linear ion chain");
  trap_cmd->add_option("--preset", trap.preset, "Parameter preset")->check(CLI::IsMember({"yb171-paper"}));
  trap_cmd->add_option("--n", trap.n, "Number of ions")->check(CLI::Range(1, 64));
  trap_cmd->add_option("--params", trap.params, "TrapParams JSON (overrides the preset)");
  trap_cmd->add_option("-o,--out", trap.out, "Output JSON");
  trap_cmd->callback([&] { action = [&] { return run_trap(trap); }; });

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Decompose M (or A/J) into encoding terms");
  synth_cmd->add_option("--m", synth.m, "M JSON");
  synth_cmd->add_option("--a", synth.a, "A JSON");
  synth_cmd->add_option("--j", synth.j, "J JSON");
  synth_cmd->add_flag("--mip", synth.mip, "Bounded mixed-integer solve");
  synth_cmd->add_option("--eps-l", synth.eps_l, "Lower time bound");
  synth_cmd->add_option("--eps-u", synth.eps_u, "Upper time bound (default 1.5 max|M|)");
  synth_cmd->add_option("--alpha", synth.alpha, "Time vs encoding-count weight")->check(CLI::Range(0.0, 1.0));
  synth_cmd->add_option("--gap", synth.gap, "Relative MIP gap");
  synth_cmd->add_option("--tol", synth.tol, "Feasibility tolerance");
  synth_cmd->add_option("--truncate", synth.truncate_eps, "Drop terms shorter than this (needs --j)");
  synth_cmd->add_option("-o,--out", synth.out, "Output JSON");
  synth_cmd->callback([&] { action = [&] { return run_synth(synth); }; });

  ScheduleArgs sched;
  auto* sched_cmd = app.add_subcommand("schedule", "Order encodings into X layers");
  sched_cmd->add_option("--decomp", sched.decomp, "Decomposition JSON")->required();
  sched_cmd->add_option("--tour", sched.tour, "Tour heuristic")->check(CLI::IsMember({"index", "nn", "nn-2opt"}));
  sched_cmd->add_option("--j", sched.j, "J JSON, for --circuit");
  sched_cmd->add_option("--circuit", sched.circuit_out, "Also write the X/EVOLVE circuit here");
  sched_cmd->add_flag("--raw", sched.raw, "Emit X layers per step without merging");
  sched_cmd->add_option("-o,--out", sched.out, "Output JSON");
  sched_cmd->callback([&] { action = [&] { return run_schedule(sched); }; });

  CompileArgs comp;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit family to GZZ form");
  compile_cmd->require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("-o,--out", comp.out, "Circuit text output");
    c->add_option("--report", comp.report, "Report JSON (default: stderr)");
    c->add_option("--j", comp.j, "J JSON; adds total_time to the report");
  };
  auto* cx = compile_cmd->add_subcommand("cx", "Directed CX layer");
  cx->add_option("--b", comp.b, "B JSON")->required();
  common(cx);
  cx->callback([&] { action = [&] { return run_compile_cx(comp); }; });
  auto* cz = compile_cmd->add_subcommand("cz", "CZ layer");
  cz->add_option("--a", comp.a, "Binary A JSON")->required();
  common(cz);
  cz->callback([&] { action = [&] { return run_compile_cz(comp); }; });
  auto* cl = compile_cmd->add_subcommand("clifford", "Bruhat-form Clifford layers");
  cl->add_option("--layers", comp.layers, "Layers JSON")->required();
  common(cl);
  cl->callback([&] { action = [&] { return run_compile_clifford(comp); }; });
  auto* qft = compile_cmd->add_subcommand("qft", "Quantum Fourier transform");
  qft->add_option("--n", comp.n, "Qubits")->required()->check(CLI::Range(1, 64));
  qft->add_flag("--with-swaps", comp.with_swaps, "Append the output swaps");
  common(qft);
  qft->callback([&] { action = [&] { return run_compile_qft(comp); }; });
  auto* giv = compile_cmd->add_subcommand("givens", "Givens rotation layer");
  giv->add_option("--phi", comp.phi, "Angle")->required();
  giv->add_option("--n", comp.n, "Qubits (even)")->required();
  common(giv);
  giv->callback([&] { action = [&] { return run_compile_givens(comp); }; });
  auto* dyn = compile_cmd->add_subcommand("dynamics", "Factorized dynamics circuit");
  dyn->add_option("--spec", comp.spec, "Spec JSON")->required();
  common(dyn);
  dyn->callback([&] { action = [&] { return run_compile_dynamics(comp); }; });
  auto* diag = compile_cmd->add_subcommand("diagonal", "Diagonal unitary from a phase function");
  diag->add_option("--phases", comp.phases, "Phase JSON")->required();
  diag->add_flag("--allow-size2", comp.allow_size2, "Treat two-qubit parities as hard terms");
  diag->add_option("--ancillas", comp.ancillas, "auto or 0")->check(CLI::IsMember({"auto", "0"}));
  common(diag);
  diag->callback([&] { action = [&] { return run_compile_diagonal(comp); }; });

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a circuit against a reference");
  verify_cmd->add_option("--circuit", ver.circuit, "Circuit text")->required();
  verify_cmd->add_option("--gzz", ver.gzz, "Reference GZZ(A), A JSON");
  verify_cmd->add_option("--qft", ver.qft, "Reference QFT on n qubits");
  verify_cmd->add_flag("--with-swaps", ver.with_swaps, "QFT reference includes the output swaps");
  verify_cmd->add_option("--gcx", ver.gcx, "Reference GCX(B), B JSON");
  verify_cmd->add_option("--phases", ver.phases, "Reference diagonal, phase JSON");
  verify_cmd->add_option("--tol", ver.tol, "Tolerance");
  verify_cmd->callback([&] { action = [&] { return run_verify(ver); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Random-instance benchmarks (CSV)");
  bench_cmd->require_subcommand(1);
  auto bench_common = [&](CLI::App* c) {
    c->add_option("--n-min", bench.n_min, "Smallest n");
    c->add_option("--n-max", bench.n_max, "Largest n");
    c->add_option("--samples", bench.samples, "Samples per n")->check(CLI::PositiveNumber);
    c->add_option("--seed", bench.seed, "RNG seed");
    c->add_option("-o,--out", bench.out, "CSV output");
  };
  auto* bg = bench_cmd->add_subcommand("gzz", "GZZ synthesis: lp, mip or naive");
  bench_common(bg);
  bg->add_option("--mode", bench.mode, "lp, mip or naive")->check(CLI::IsMember({"lp", "mip", "naive"}));
  bg->add_option("--eps-l", bench.eps_l, "MIP lower bound");
  bg->callback([&] { action = [&] { return run_bench_gzz(bench); }; });
  auto* bt = bench_cmd->add_subcommand("truncation", "Truncation error vs n");
  bench_common(bt);
  bt->add_option("--eps-l", bench.eps_l, "Truncation threshold");
  bt->callback([&] { action = [&] { return run_bench_truncation(bench); }; });
  auto* bd = bench_cmd->add_subcommand("dircx", "Directed CX cost vs n");
  bench_common(bd);
  bd->callback([&] { action = [&] { return run_bench_dircx(bench); }; });
  auto* bq = bench_cmd->add_subcommand("qft", "QFT cost and time vs n");
  bench_common(bq);
  bq->callback([&] { action = [&] { return run_bench_qft(bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
