#include "rsklab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "rsklab/errors.hpp"
#include "rsklab/greene.hpp"
#include "rsklab/minimal.hpp"
#include "rsklab/report.hpp"
#include "rsklab/rsk.hpp"

namespace rsklab::cli {

namespace {

// Worked example whose published tableaux (shape 4,2,1) do not match what
// row insertion produces.
const Matrix kDiscrepantExample = Matrix::from_rows({{1, 1, 0}, {0, 2, 1}, {1, 0, 1}});

std::string shape_text(const Partition& p) { return p.empty() ? "empty" : p.to_string(); }

void render_tableau(std::ostream& out, const char* name, const Tableau& t) {
  out << name << ":";
  if (t.empty()) {
    out << " (empty)\n";
    return;
  }
  out << '\n' << render(t);
}

struct CapFlags {
  std::optional<int> weight_cap;
  std::optional<int> max_n;
};

SearchCaps resolve_caps(const CapFlags& flags, std::ostream& err) {
  SearchCaps caps;
  std::optional<int> weight = flags.weight_cap;
  if (!weight) {
    if (const char* env = std::getenv(kMaxWeightEnv); env && *env) {
      try {
        weight = std::stoi(env);
      } catch (const std::exception&) {
        err << "ignoring malformed " << kMaxWeightEnv << "='" << env << "'\n";
      }
    }
  }
  if (weight) caps = SearchCaps::uniform(*weight, caps.max_n);
  if (flags.max_n) caps.max_n = *flags.max_n;
  return caps;
}

int cmd_rsk(const RunConfig& cfg, bool check_greene, std::ostream& out, std::ostream& err) {
  const Matrix m = Matrix::parse(cfg.input);
  const auto pair = rsk_forward(m);
  const Partition shape = pair.p.shape();
  render_tableau(out, "P", pair.p);
  render_tableau(out, "Q", pair.q);
  out << "shape: " << shape_text(shape) << '\n';

  std::optional<Partition> greene;
  const GreeneLimits limits{cfg.caps.max_weight_small_n};
  if (check_greene || m == kDiscrepantExample) greene = greene_shape(m, limits);
  if (check_greene) out << "greene shape: " << shape_text(*greene) << '\n';
  if (m == kDiscrepantExample) {
    out << "notice: documented discrepancy: a published worked example lists tableaux of shape "
           "4,2,1 for this matrix; insertion gives "
        << shape_text(shape) << " and Greene invariants give " << shape_text(*greene) << '\n';
  }
  if (greene && *greene != shape) {
    err << "oracle disagreement: RSK shape " << shape_text(shape) << " vs Greene shape "
        << shape_text(*greene) << '\n';
    return kOracleDisagreement;
  }
  return kOk;
}

int cmd_inversions(const RunConfig& cfg, std::ostream& out) {
  out << inversion_count(Matrix::parse(cfg.input)) << '\n';
  return kOk;
}

int cmd_minimal(const RunConfig& cfg, bool formula, bool construct, bool brute, std::ostream& out) {
  const Partition p = Partition::parse(cfg.input);
  if (!formula && !construct && !brute) formula = construct = true;

  std::vector<Matrix> candidates;
  if (construct) {
    candidates = minimal_hankel_candidates(p);
    out << "hankel candidates (" << candidates.size() << "):\n";
    for (const auto& c : candidates) {
      out << "  " << c.to_string() << "  inversions=" << inversion_count(c)
          << "  shape=" << shape_text(shape_of_matrix(c)) << '\n';
    }
  }
  std::int64_t formula_value = 0;
  if (formula) {
    formula_value = minimal_inversion_formula(p);
    out << "formula: " << formula_value << '\n';
  }
  if (brute) {
    const auto result = brute_force_minimum(p, cfg.caps, cfg.jobs);
    out << "class size: " << result.class_size << '\n';
    out << "brute force minimum: " << result.min_inversions << '\n';
    out << "minimal matrices (" << result.minimal_set.size() << "):\n";
    for (const auto& m : result.minimal_set) out << "  " << m.to_string() << '\n';
    if (formula) {
      out << "formula vs brute force: "
          << (formula_value == result.min_inversions ? "AGREE" : "DISAGREE") << " (formula "
          << formula_value << ", brute force " << result.min_inversions << ")\n";
    }
    if (construct) {
      out << "candidates vs minimal set: "
          << (candidates == result.minimal_set ? "EQUAL" : "DIFFER") << '\n';
    }
  }
  return kOk;
}

struct VerifyFlags {
  int max_weight = 0;
  std::optional<int> min_weight;
  std::vector<int> parts;
  std::optional<std::string> csv_path;
  bool resume = false;
};

int cmd_verify(const RunConfig& cfg, const VerifyFlags& flags, std::ostream& out,
               std::ostream& err) {
  if (flags.resume && (!cfg.out_path || cfg.format != OutputFormat::kJsonl)) {
    err << "--resume needs --out with the jsonl format\n";
    return kUsage;
  }

  std::set<Partition> done;
  if (flags.resume) {
    std::ifstream existing(*cfg.out_path);
    for (std::string line; std::getline(existing, line);) {
      if (auto p = partition_of_jsonl_line(line)) done.insert(*p);
    }
  }

  std::ofstream file;
  if (cfg.out_path) {
    file.open(*cfg.out_path, flags.resume ? std::ios::app : std::ios::trunc);
    if (!file) {
      err << "cannot open " << *cfg.out_path << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& records_out = cfg.out_path ? static_cast<std::ostream&>(file) : out;
  std::ostream& summary_out = cfg.out_path ? out : err;

  std::ofstream csv;
  if (flags.csv_path) {
    csv.open(*flags.csv_path);
    if (!csv) {
      err << "cannot open " << *flags.csv_path << " for writing\n";
      return kUsage;
    }
    csv << csv_header() << '\n';
  }
  if (cfg.format == OutputFormat::kCsv && !(flags.resume && !done.empty())) {
    records_out << csv_header() << '\n';
  }

  std::size_t verified = 0, flagged = 0, mismatched = 0, skipped = 0, broken = 0;
  auto emit = [&](const VerificationRecord& rec) {
    switch (cfg.format) {
      case OutputFormat::kJsonl: records_out << to_jsonl_line(rec) << '\n'; break;
      case OutputFormat::kCsv: records_out << to_csv_row(rec) << '\n'; break;
      case OutputFormat::kText: records_out << render_text(rec) << '\n'; break;
    }
    if (csv.is_open()) csv << to_csv_row(rec) << '\n';
    if (rec.skipped) {
      ++skipped;
      return;
    }
    ++verified;
    if (!rec.conjecture_holds()) ++flagged;
    if (!rec.formula_matches_bruteforce) ++mismatched;
    if (!rec.oracle_disagreements.empty()) ++broken;
  };

  SweepRange range{flags.max_weight, flags.parts, flags.min_weight};
  VerifyOptions options{cfg.caps, cfg.jobs};
  const auto records = sweep(range, options, emit,
                             [&](const Partition& p) { return done.contains(p); });
  records_out.flush();

  summary_out << "records: " << records.size() << "  verified: " << verified
              << "  conjecture-flagged: " << flagged << "  formula-mismatch: " << mismatched
              << "  skipped: " << skipped << "  oracle-disagreement: " << broken;
  if (flags.resume) summary_out << "  resumed-past: " << done.size();
  summary_out << '\n';

  if (broken > 0) return kOracleDisagreement;
  if (skipped > 0) return kCapRefused;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RSK shapes, inversion statistics and minimal-matrix verification", "rsklab"};
  app.require_subcommand(1);

  RunConfig cfg;
  CapFlags cap_flags;
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--weight-cap", cap_flags.weight_cap,
                    "Largest weight searched exhaustively (overrides $RSKLAB_MAX_WEIGHT)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-n", cap_flags.max_n, "Largest number of parts searched")
        ->check(CLI::PositiveNumber);
    sub->add_option("-j,--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  bool check_greene = false;
  auto* rsk = app.add_subcommand("rsk", "RSK tableau pair and shape of a matrix");
  rsk->add_option("matrix", cfg.input, "Matrix as \"1,0,2;0,2,0;1,1,0\"")->required();
  rsk->add_flag("--check-greene", check_greene, "Cross-check the shape with Greene invariants");
  rsk->add_option("--weight-cap", cap_flags.weight_cap,
                  "Heaviest matrix the Greene oracle accepts (overrides $RSKLAB_MAX_WEIGHT)")
      ->check(CLI::PositiveNumber);

  auto* inversions = app.add_subcommand("inversions", "Inversion count of a matrix");
  inversions->add_option("matrix", cfg.input, "Matrix as \"1,0,2;0,2,0;1,1,0\"")->required();

  bool formula = false, construct = false, brute = false;
  auto* minimal = app.add_subcommand("minimal", "Minimal matrices of a shape");
  minimal->add_option("partition", cfg.input, "Partition as \"4,2,2,1\"")->required();
  minimal->add_flag("--formula", formula, "Closed-form conjectured minimum");
  minimal->add_flag("--construct", construct, "Hankel candidates from the column splits");
  minimal->add_flag("--brute", brute, "Exhaustive minimum over the shape class");
  add_caps(minimal);

  VerifyFlags vflags;
  std::string format = "jsonl";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Sweep partitions and verify each one");
  verify->add_option("--max-weight", vflags.max_weight, "Weight of the swept partitions")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--min-weight", vflags.min_weight,
                     "Also sweep lighter partitions down to this weight")
      ->check(CLI::PositiveNumber);
  verify->add_option("--parts", vflags.parts, "Part counts, e.g. 2,3")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Record file (default: stdout)");
  verify->add_option("--format", format, "Record format")
      ->check(CLI::IsMember({"jsonl", "csv", "text"}));
  verify->add_option("--csv", vflags.csv_path, "Additional CSV summary file");
  verify->add_flag("--resume", vflags.resume, "Append, skipping partitions already in --out");
  add_caps(verify);

  std::vector<const char*> argv{"rsklab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.caps = resolve_caps(cap_flags, err);
  if (!out_path.empty()) cfg.out_path = out_path;
  cfg.format = format == "csv" ? OutputFormat::kCsv
               : format == "text" ? OutputFormat::kText
                                  : OutputFormat::kJsonl;

  try {
    if (rsk->parsed()) {
      cfg.command = "rsk";
      return cmd_rsk(cfg, check_greene, out, err);
    }
    if (inversions->parsed()) {
      cfg.command = "inversions";
      return cmd_inversions(cfg, out);
    }
    if (minimal->parsed()) {
      cfg.command = "minimal";
      return cmd_minimal(cfg, formula, construct, brute, out);
    }
    cfg.command = "verify";
    return cmd_verify(cfg, vflags, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kCapRefused;
  } catch (const OracleDisagreement& e) {
    err << "oracle disagreement: " << e.what() << '\n';
    return kOracleDisagreement;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rsklab::cli
