// mx1: stopping-time tables, F(k), sieve verification, trajectories and
// word solutions for the 3x+1 and 5x+1 maps.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 verification mismatch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "mx1/diophantine.hpp"
#include "mx1/io.hpp"
#include "mx1/sieve.hpp"
#include "mx1/stopping_table.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputFlags {
  std::string format = "csv";
  unsigned precision = 8;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "csv | json | markdown")->capture_default_str();
    cmd->add_option("--precision", precision, "significant digits for decimals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", out, "output file (default stdout)");
  }

  mx1::OutputSpec spec() const {
    try {
      return {mx1::parse_format(format), precision, out};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

// Writes via `emit` to the destination; stdout when it is empty or "-".
template <typename Emit>
void emit_to(const mx1::OutputSpec& spec, Emit&& emit) {
  if (spec.destination.empty() || spec.destination == "-") {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(spec.destination, std::ios::binary);
  if (!file) throw IoError("cannot open " + spec.destination);
  emit(file);
  file.flush();
  if (!file) throw IoError("failed writing " + spec.destination);
}

mx1::BigInt parse_positive(const std::string& text) {
  mx1::BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v) <= 0) {
    throw UsageError("--n must be a positive decimal integer");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stopping-time distribution tables for the 3x+1 and 5x+1 maps"};
  app.require_subcommand(1);

  unsigned m = 3;
  auto add_m = [&m](CLI::App* cmd) {
    cmd->add_option("--m", m, "multiplier (3 or 5)")->required()->check(CLI::IsMember({3u, 5u}));
  };

  std::size_t kmax = 0;
  OutputFlags table_out;
  auto* table_cmd = app.add_subcommand("table", "recursive count table n(k2, k) for k = 0..kmax");
  add_m(table_cmd);
  table_cmd->add_option("--kmax", kmax, "last column")->required();
  table_out.attach(table_cmd);

  std::vector<std::size_t> fk_ks;
  OutputFlags fk_out;
  auto* fk_cmd = app.add_subcommand("fk", "N(chi > k), 2^k and F(k) at the given columns");
  add_m(fk_cmd);
  fk_cmd->add_option("--k", fk_ks, "column or comma-separated list")->required()->delimiter(',');
  fk_out.attach(fk_cmd);

  std::size_t verify_kmax = 0;
  std::size_t chunks = 0;
  OutputFlags verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "sieve [2, 2^k + 1] and compare with the table");
  add_m(verify_cmd);
  verify_cmd->add_option("--kmax", verify_kmax, "last k to sieve")->required();
  verify_cmd->add_option("--chunks", chunks, "parallel chunk count (0 = auto)");
  verify_out.attach(verify_cmd);

  std::string traj_n;
  std::size_t traj_k = 0;
  auto* traj_cmd = app.add_subcommand("traj", "trajectory, parity word and stopping status");
  traj_cmd->add_option("--n", traj_n, "start value")->required();
  add_m(traj_cmd);
  traj_cmd->add_option("--k", traj_k, "number of steps")->required();

  std::string word_text;
  auto* solve_cmd = app.add_subcommand("solve", "solution family of c = by - ax for a word");
  solve_cmd->add_option("--word", word_text, "parity word, t_0 first")->required();
  add_m(solve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto params = mx1::MapParams::make(m);

    if (*table_cmd) {
      const auto spec = table_out.spec();
      const auto table = mx1::chi_table(kmax, params);
      emit_to(spec, [&](std::ostream& os) { mx1::write_table(os, table, spec); });
      return 0;
    }

    if (*fk_cmd) {
      const auto spec = fk_out.spec();
      const auto table = mx1::chi_table(*std::max_element(fk_ks.begin(), fk_ks.end()), params);
      const auto rows = mx1::n_chi_report(table, fk_ks, spec.precision);
      emit_to(spec, [&](std::ostream& os) { mx1::write_fk(os, params, rows, spec); });
      return 0;
    }

    if (*verify_cmd) {
      const auto spec = verify_out.spec();
      const std::size_t ceiling = mx1::sieve_ceiling();
      if (verify_kmax < 1 || verify_kmax > ceiling) {
        throw UsageError("--kmax must be in [1, " + std::to_string(ceiling) +
                         "] (MX1_SIEVE_CEILING raises the limit)");
      }
      const auto table = mx1::chi_table(verify_kmax, params);
      std::vector<mx1::SieveReport> reports;
      bool mismatch = false;
      for (std::size_t k = 1; k <= verify_kmax; ++k) {
        reports.push_back(mx1::make_report(mx1::sieve_counts(k, params, chunks), table));
        const auto v = reports.back().verdict;
        if (v == mx1::Verdict::BoundViolated || (m == 3 && v != mx1::Verdict::Equal)) {
          mismatch = true;
        }
      }
      emit_to(spec, [&](std::ostream& os) { mx1::write_verify(os, reports, spec); });
      const bool stdout_json = spec.format == mx1::Format::Json &&
                               (spec.destination.empty() || spec.destination == "-");
      (stdout_json ? std::cerr : std::cout) << mx1::verify_summary(reports.back()) << '\n';
      return mismatch ? kExitMismatch : 0;
    }

    if (*traj_cmd) {
      const auto n = parse_positive(traj_n);
      const auto rec = mx1::trajectory(n, params, traj_k);
      std::ostringstream line;
      for (std::size_t j = 0; j < rec.iterates.size(); ++j) {
        line << (j ? " " : "") << mx1::to_string(rec.iterates[j]);
      }
      line << " | word " << rec.word.to_string() << " | ";
      if (n < 2) {
        line << "chi undefined";
      } else if (traj_k == 0) {
        line << "chi > 0";
      } else if (auto chi = mx1::stopping_time(n, params, traj_k)) {
        line << "chi = " << *chi;
      } else {
        line << "chi > " << traj_k;
      }
      std::cout << line.str() << '\n';
      return std::cout ? 0 : kExitIo;
    }

    if (*solve_cmd) {
      mx1::DyadicWord word;
      try {
        word = mx1::DyadicWord::parse(word_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (word.empty()) throw UsageError("--word must not be empty");
      const auto family = mx1::solve_word(word, params);
      std::cout << family.describe() << '\n';
      return std::cout ? 0 : kExitIo;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
