#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "coarsekit/cli/run.hpp"

namespace ck = coarsekit;
namespace cli = coarsekit::cli;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

cli::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw cli::InputError("", "cannot open " + path);
  }
  try {
    return cli::Json::parse(in);
  } catch (const cli::Json::parse_error& e) {
    throw cli::InputError("", std::string("parse error: ") + e.what());
  }
}

void write_output(const cli::Json& doc, const std::string& path) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw cli::InputError("", "cannot write " + path);
  }
  out << text;
}

ck::Distance global_cap(const std::optional<ck::Distance>& flag) {
  ck::Distance cap = cli::kDefaultCap;
  if (const char* env = std::getenv("COARSEKIT_CAP")) {
    try {
      cap = std::stoll(env);
    } catch (const std::exception&) {
      throw cli::InputError("", std::string("COARSEKIT_CAP is not an integer: ") + env);
    }
  }
  if (flag) {
    // The flag can lower the limit but never lift it past the environment.
    cap = std::getenv("COARSEKIT_CAP") ? std::min(cap, *flag) : *flag;
  }
  if (cap < 1) {
    throw cli::InputError("", "cap must be positive");
  }
  return cap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarsekit: referee-checked coarse geometry experiments"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::optional<ck::Distance> window;
  std::optional<ck::Distance> cap;

  auto* run = app.add_subcommand("run", "Run a scenario file and write a JSON report");
  run->add_option("--scenario", scenario_path, "Scenario file (object or array)")->required();
  run->add_option("--out", out_path, "Report path (stdout if omitted)");
  run->add_option("--window", window, "Override every scenario window size");
  run->add_option("--cap", cap, "Largest radius any scenario may request");

  std::string report_path;
  auto* replay = app.add_subcommand("replay", "Re-referee a report from its serialized data");
  replay->add_option("report", report_path, "Report file")->required();
  replay->add_option("--out", out_path, "Replay summary path (stdout if omitted)");
  replay->add_option("--cap", cap, "Largest radius the report may use");

  auto* models = app.add_subcommand("list-models", "List groups, actions, and strategies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (models->parsed()) {
      std::cout << cli::list_models().dump(2) << "\n";
      return kPass;
    }
    if (run->parsed()) {
      cli::RunOptions options;
      options.cap = global_cap(cap);
      options.window = window;
      auto start = std::chrono::steady_clock::now();
      auto report = cli::run_document(read_json(scenario_path), options);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      write_output(report, out_path);
      std::cerr << "elapsed " << ms << " ms\n";
      return cli::document_passes(report) ? kPass : kFail;
    }
    auto outcome = cli::replay_document(read_json(report_path), global_cap(cap));
    write_output(outcome.summary, out_path);
    if (!outcome.pass) {
      std::cerr << "replay mismatch: " << outcome.first_mismatch << "\n";
      return kFail;
    }
    return kPass;
  } catch (const cli::InputError& e) {
    std::cerr << "input error at " << e.what() << "\n";
    return kInputError;
  } catch (const ck::Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
