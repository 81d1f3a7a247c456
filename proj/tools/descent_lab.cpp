// descent-lab: multiplication tables, character tables, tables of marks and
// verification suites for the descent algebras of W(A_n).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity, 4 I/O.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "descent_lab/descent_lab.hpp"

namespace {

namespace fs = std::filesystem;
using namespace descent_lab;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3, kIo = 4 };

class IoError : public Error {
 public:
  using Error::Error;
};

/// Writes to a sibling temp file, then renames over the target.
void write_atomically(const fs::path& target, const std::string& payload) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << payload;
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + target.string() + "'");
  }
}

void emit(const std::string& output, const std::string& payload) {
  if (output.empty() || output == "-") {
    std::cout << payload << std::flush;
    return;
  }
  write_atomically(output, payload);
}

struct Options {
  int rank = 0;
  std::string algebra = "class";
  std::string format = "json";
  std::string strategy = "auto";
  std::string output;
  std::string suite = "all";
  bool verify_cross = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--rank,-n", opt.rank, "rank n of W(A_n) = S_{n+1}")->required();
  cmd->add_option("--strategy", opt.strategy, "brute | matrix | auto")
      ->check(CLI::IsMember({"brute", "matrix", "auto"}));
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output,-o", opt.output, "output path (default stdout)");
}

int run(int argc, char** argv) {
  CLI::App app{"descent-lab: Solomon and class descent algebras of type A"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options opt;

  auto* table = app.add_subcommand("table", "basis multiplication table");
  add_common(table, opt);
  add_output(table, opt);
  table->add_option("--algebra", opt.algebra, "class | solomon")
      ->check(CLI::IsMember({"class", "solomon"}));
  table->add_flag("--verify-cross", opt.verify_cross, "compute with both strategies and compare");

  auto* check = app.add_subcommand("check", "run verification suites");
  add_common(check, opt);
  check->add_option("--suite", opt.suite, "all | welldef | commute | semisimple | oracle | characters | burnside")
      ->check(CLI::IsMember({"all", "welldef", "commute", "semisimple", "oracle", "characters", "burnside"}));
  check->add_option("--output,-o", opt.output, "report path (default stdout)");

  auto* chars = app.add_subcommand("chars", "permutation character table");
  add_common(chars, opt);
  add_output(chars, opt);

  auto* marks = app.add_subcommand("marks", "parabolic table of marks");
  add_common(marks, opt);
  add_output(marks, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Rank rank(opt.rank);
    const Strategy strategy = parse_strategy(opt.strategy);
    const bool csv = opt.format == "csv";

    if (*table) {
      const auto doc = build_table(rank, parse_algebra(opt.algebra), strategy, opt.verify_cross);
      emit(opt.output, csv ? to_csv(doc) : to_json(doc));
    } else if (*chars) {
      const auto doc = build_characters(rank, strategy);
      emit(opt.output, csv ? to_csv(doc) : to_json(doc));
    } else if (*marks) {
      const auto doc = build_marks(rank, strategy);
      emit(opt.output, csv ? to_csv(doc) : to_json(doc));
    } else if (*check) {
      const auto report = run_checks(rank, parse_suite(opt.suite), strategy);
      emit(opt.output, report.to_json());
      if (const auto* failure = report.first_failure()) {
        std::cerr << "check failed: " << failure->suite << "/" << failure->name << " at rank "
                  << failure->rank << ": " << failure->detail << "\n";
        return kVerifyFailed;
      }
    }
    return kOk;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvalidRank& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const IoError& e) {
    std::cerr << "i/o: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
