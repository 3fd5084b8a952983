// critchar: exact characters of irreducible highest-weight modules of
// non-twisted affine Lie algebras at the critical level, with independent
// cross-checks. Batch front end; all outputs are deterministic.

#include <CLI11.hpp>

#include "critchar/serialize.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace critchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct CommonArgs {
  std::string type;
  int rank = 1;
  std::string lambda = "0";
  int depth = 4;
  int height = -1;
  std::string formula = "main";
  std::string format = "table";
  std::string output;
};

IntVec parse_lambda(const std::string& text, int rank) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    coords.push_back(std::stoi(item, &used));
    if (used != item.size())
      throw std::invalid_argument("lambda coordinates must be integers");
  }
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("lambda must have one coordinate per rank");
  IntVec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = coords[i];
  return v;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "table") return OutputFormat::Table;
  if (f == "records") return OutputFormat::Records;
  if (f == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format: " + f);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

struct Job {
  RootSystem rs;
  Weight lambda;
  CharacterMeta meta;
};

Job make_job(const CommonArgs& args) {
  if (args.type.size() != 1)
    throw std::invalid_argument("type must be a single letter A..G");
  Job job{build_root_system(args.type[0], args.rank), Weight{}, {}};
  const IntVec lam = parse_lambda(args.lambda, args.rank);
  job.lambda = critical_weight(job.rs, lam);
  if (!is_admissible_highest_weight(job.rs, job.lambda))
    throw std::invalid_argument(
        "lambda is not admissible: finite part must be dominant integral");
  job.meta.system = job.rs.label();
  for (int i = 0; i < args.rank; ++i) job.meta.lambda_bar.push_back(lam[i]);
  job.meta.level = -job.rs.dual_coxeter();
  job.meta.depth = args.depth;
  job.meta.formula = args.formula;
  return job;
}

AffineCharacter compute_character(const Job& job, const CommonArgs& args,
                                  int* height_used) {
  if (args.depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (args.formula == "main")
    return critical_character(job.rs, job.lambda, args.depth);
  if (args.formula == "weyl-module")
    return weyl_module_character(job.rs, job.lambda, args.depth);
  if (args.formula == "generic") {
    const int h =
        args.height >= 0 ? args.height : default_height_cutoff(job.rs, args.depth);
    if (height_used) *height_used = h;
    return generic_character(job.rs, job.lambda, args.depth, h);
  }
  if (args.formula == "endring") {
    const QSeries s = endring_character(job.rs, job.lambda, args.depth);
    AffineCharacter c(job.rs.type(), job.rs.rank(), job.lambda, args.depth);
    const IntVec zero = IntVec::Zero(job.rs.rank());
    for (int n = 0; n <= args.depth; ++n) c.slice(n).add(zero, s.coeffs[n]);
    return c;
  }
  throw std::invalid_argument("unknown formula: " + args.formula);
}

int run_char(const CommonArgs& args, bool qdims_only) {
  Job job = make_job(args);
  int height_used = -1;
  const AffineCharacter c = compute_character(job, args, &height_used);
  job.meta.height_cutoff = height_used;
  const OutputFormat format = parse_format(args.format);
  if (qdims_only)
    emit(render_qdims(qdims(c), job.meta, format), args.output);
  else
    emit(render_character(c, job.meta, format), args.output);
  return kExitOk;
}

VerificationReport run_verification(const std::string& identity, const Job& job,
                                    int depth, int height, int max_rank) {
  if (identity == "factorization")
    return verify_factorization(job.rs, job.lambda, depth);
  if (identity == "multiplicities")
    return verify_decomposition(job.rs, job.lambda, depth);
  if (identity == "upper-bound")
    return check_upper_bound(job.rs, job.lambda, depth, height);
  if (identity == "oracle-compare") {
    OracleLimits limits;
    limits.max_rank = std::max(limits.max_rank, max_rank);
    limits.max_depth = std::max(limits.max_depth, depth);
    limits.max_depth_trivial = std::max(limits.max_depth_trivial, depth);
    return compare_oracle_vs_formula(job.rs, job.lambda, depth, limits);
  }
  if (identity == "pbw-dimensions") {
    OracleLimits limits;
    limits.max_rank = std::max(limits.max_rank, max_rank);
    limits.max_depth = std::max(limits.max_depth, depth);
    limits.max_depth_trivial = std::max(limits.max_depth_trivial, depth);
    return compare_pbw_vs_weyl_module(job.rs, job.lambda, depth, limits);
  }
  throw std::invalid_argument("unknown verification: " + identity);
}

int run_verify(const std::string& identity, const CommonArgs& args, int max_rank) {
  const Job job = make_job(args);
  const VerificationReport rep =
      run_verification(identity, job, args.depth, args.height, max_rank);
  const OutputFormat format = parse_format(args.format);
  emit(render_report(rep, format), args.output);
  if (!args.output.empty())
    std::cout << render_report(rep, OutputFormat::Table);
  return rep.exact_match ? kExitOk : kExitMismatch;
}

int run_oracle(const CommonArgs& args, bool emit_gram, bool bounded, int max_rank) {
  const Job job = make_job(args);
  OracleLimits limits;
  limits.max_rank = std::max(limits.max_rank, max_rank);
  if (!bounded) {
    limits.max_depth = std::max(limits.max_depth, args.depth);
    limits.max_depth_trivial = std::max(limits.max_depth_trivial, args.depth);
  }
  const WeylModuleOracle oracle(job.rs, job.lambda, limits);
  const GramReport report = oracle.simple_quotient_dims(args.depth);
  std::string text = render_gram_report(report, parse_format(args.format));
  if (emit_gram) text += render_gram_matrices(oracle, args.depth);
  emit(text, args.output);
  return kExitOk;
}

struct SweepJob {
  int index = 0;
  CommonArgs args;
  std::vector<std::string> checks;
};

struct SweepResult {
  std::vector<std::string> summary;
  std::vector<std::pair<std::string, std::string>> reports;  // filename, body
  bool passed = true;
};

SweepResult run_sweep_job(const SweepJob& sj, int height) {
  SweepResult result;
  const Job job = make_job(sj.args);
  for (const std::string& check : sj.checks) {
    std::ostringstream line;
    line << "job " << sj.index << ": " << job.meta.system << " lambda=[";
    for (size_t i = 0; i < job.meta.lambda_bar.size(); ++i) {
      if (i) line << ",";
      line << job.meta.lambda_bar[i];
    }
    line << "] depth=" << sj.args.depth << " " << check << ": ";
    VerificationReport rep;
    if (check.rfind("expect=", 0) == 0) {
      const std::string path = check.substr(7);
      const AffineCharacter c =
          critical_character(job.rs, job.lambda, sj.args.depth);
      rep = compare_with_records_file(c, path);
      rep.system = job.meta.system;
      rep.lambda_bar = job.meta.lambda_bar;
    } else {
      rep = run_verification(check, job, sj.args.depth, height, job.rs.rank());
    }
    if (rep.exact_match) {
      line << "PASS";
    } else {
      line << "FAIL";
      if (rep.first_discrepancy) {
        const Discrepancy& d = *rep.first_discrepancy;
        line << " at (slice=" << d.slice << ", offset=[";
        for (Eigen::Index i = 0; i < d.offset.size(); ++i) {
          if (i) line << ",";
          line << d.offset[i];
        }
        line << "]): expected " << d.expected << " actual " << d.actual;
      }
      result.passed = false;
    }
    result.summary.push_back(line.str());
    std::ostringstream name;
    const std::string check_tag =
        check.rfind("expect=", 0) == 0 ? "expect" : check;
    name << "job_" << sj.index << "_" << check_tag << ".json";
    result.reports.emplace_back(name.str(),
                                render_report(rep, OutputFormat::Records));
  }
  return result;
}

int worker_count(size_t jobs) {
  if (const char* env = std::getenv("CRITCHAR_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return static_cast<int>(std::min<size_t>(w, jobs));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<size_t>(hw == 0 ? 1 : hw, jobs));
}

int run_sweep(const std::string& config_path, const std::string& out_dir,
              int height) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "critchar: cannot read config file: " << config_path << "\n";
    return kExitInvalid;
  }
  std::vector<SweepJob> jobs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    SweepJob sj;
    sj.index = static_cast<int>(jobs.size()) + 1;
    std::string checks;
    if (!(ls >> sj.args.type >> sj.args.rank >> sj.args.lambda >>
          sj.args.depth >> checks)) {
      std::cerr << "critchar: malformed config line " << lineno << "\n";
      return kExitInvalid;
    }
    std::stringstream cs(checks);
    std::string item;
    while (std::getline(cs, item, ','))
      if (!item.empty()) sj.checks.push_back(item);
    if (sj.checks.empty()) {
      std::cerr << "critchar: config line " << lineno << " lists no checks\n";
      return kExitInvalid;
    }
    jobs.push_back(std::move(sj));
  }
  if (jobs.empty()) {
    std::cout << "sweep: 0 jobs\n";
    return kExitOk;
  }

  std::vector<SweepResult> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<size_t> next{0};
  const int workers = worker_count(jobs.size());
  const auto work = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = run_sweep_job(jobs[i], height);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  for (size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "critchar: job " << jobs[i].index << " failed: " << errors[i]
                << "\n";
      return kExitInvalid;
    }
  }

  if (!out_dir.empty()) fs::create_directories(out_dir);
  bool all_passed = true;
  int checks_run = 0;
  for (const SweepResult& r : results) {
    for (const std::string& s : r.summary) {
      std::cout << s << "\n";
      ++checks_run;
    }
    if (!out_dir.empty())
      for (const auto& [name, body] : r.reports) {
        std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
        out << body;
      }
    all_passed = all_passed && r.passed;
  }
  std::cout << "sweep: " << jobs.size() << " jobs, " << checks_run
            << " checks, " << (all_passed ? "all passed" : "FAILURES") << "\n";
  return all_passed ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_formula) {
  cmd->add_option("--type", args.type, "simple type letter A..G")->required();
  cmd->add_option("--rank", args.rank, "rank of the finite algebra")->required();
  cmd->add_option("--lambda", args.lambda,
                  "finite highest weight, comma separated fundamental-weight "
                  "coordinates");
  cmd->add_option("--depth", args.depth, "delta-degree truncation");
  cmd->add_option("--height", args.height,
                  "finite height cutoff (generic formula / upper bound)");
  if (with_formula)
    cmd->add_option("--formula", args.formula,
                    "main | generic | weyl-module | endring");
  cmd->add_option("--format", args.format, "table | records | csv");
  cmd->add_option("--output", args.output, "write to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "critchar: exact critical-level characters of affine Lie algebras"};
  app.require_subcommand(1);

  CommonArgs char_args, qdims_args, verify_args, oracle_args;
  std::string verify_identity;
  int verify_max_rank = 2;
  bool oracle_emit_gram = false, oracle_bounded = false;
  int oracle_max_rank = 2;
  std::string sweep_config, sweep_out_dir = "sweep_reports";
  int sweep_height = -1;

  CLI::App* ccmd = app.add_subcommand("char", "character table of a formula");
  add_common(ccmd, char_args, true);

  CLI::App* qcmd = app.add_subcommand("qdims", "graded dimension series");
  add_common(qcmd, qdims_args, true);

  CLI::App* vcmd = app.add_subcommand("verify", "cross-check an identity");
  vcmd->add_option("identity", verify_identity,
                   "factorization | multiplicities | upper-bound | "
                   "oracle-compare | pbw-dimensions")
      ->required();
  add_common(vcmd, verify_args, false);
  vcmd->add_option("--max-rank", verify_max_rank, "oracle rank bound");

  CLI::App* ocmd =
      app.add_subcommand("oracle", "brute-force Gram-rank dimension table");
  add_common(ocmd, oracle_args, false);
  ocmd->add_flag("--emit-gram", oracle_emit_gram,
                 "dump exact Gram matrices for external audit");
  ocmd->add_flag("--bounded", oracle_bounded,
                 "respect the library's default depth bounds");
  ocmd->add_option("--max-rank", oracle_max_rank, "oracle rank bound");

  CLI::App* scmd = app.add_subcommand("sweep", "run checks from a config file");
  scmd->add_option("--config", sweep_config, "config file path")->required();
  scmd->add_option("--output-dir", sweep_out_dir,
                   "directory for per-job reports");
  scmd->add_option("--height", sweep_height, "height cutoff for upper-bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "critchar: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (ccmd->parsed()) return run_char(char_args, false);
    if (qcmd->parsed()) return run_char(qdims_args, true);
    if (vcmd->parsed())
      return run_verify(verify_identity, verify_args, verify_max_rank);
    if (ocmd->parsed())
      return run_oracle(oracle_args, oracle_emit_gram, oracle_bounded,
                        oracle_max_rank);
    if (scmd->parsed())
      return run_sweep(sweep_config, sweep_out_dir, sweep_height);
  } catch (const std::exception& ex) {
    std::cerr << "critchar: " << ex.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
