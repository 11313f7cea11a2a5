#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilloops/big_count.hpp"
#include "nilloops/closed_form.hpp"
#include "nilloops/enumerator.hpp"
#include "nilloops/error.hpp"
#include "nilloops/isomorphism.hpp"
#include "nilloops/library.hpp"
#include "nilloops/loop.hpp"
#include "nilloops/loop_io.hpp"
#include "nilloops/report.hpp"

namespace fs = std::filesystem;
using namespace nilloops;

namespace {

constexpr int kExitError = 2;

std::string one_based(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i] + 1);
  }
  return out;
}

Loop first_loop(const fs::path& path) {
  std::vector<Loop> loops = read_loops_file(path);
  if (loops.empty()) throw Error(Errc::kParse, path.string() + ": no loop found");
  return loops.front();
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("NILLOOPS_CACHE"); env && *env) return env;
  return "cache";
}

int cmd_enumerate(int n, const EnumConfig& config, bool machine) {
  Enumerator enumerator(config);
  const CountReport report = enumerator.count_order(n);
  if (!config.cache_dir.empty()) write_report(config.cache_dir, report);
  std::cout << (machine ? render_machine(report) : render_text(report));
  return 0;
}

int cmd_count2q(int q, bool ratio) {
  std::cout << to_grouped_decimal(count_2q(q)) << '\n';
  if (ratio) {
    std::cout << "ratio " << to_decimal(asymptotic_ratio(q), 30) << '\n'
              << "bound " << to_decimal(squeeze_bound(q), 30) << '\n';
  }
  return 0;
}

int cmd_loop(const std::string& what, const std::vector<fs::path>& files) {
  const Loop loop = first_loop(files.at(0));
  if (what == "center") {
    std::cout << one_based(center(loop)) << '\n';
    return 0;
  }
  if (what == "class") {
    const auto cls = nilpotency_class(loop);
    if (cls) {
      std::cout << *cls << '\n';
    } else {
      std::cout << "not nilpotent\n";
    }
    return 0;
  }
  if (what == "aut") {
    const auto group = automorphism_group(loop);
    std::cout << "order " << group.size() << '\n';
    for (const auto& g : generating_set(group)) std::cout << one_based(g) << '\n';
    return 0;
  }
  if (files.size() < 2) throw Error(Errc::kParse, "iso needs two files");
  const Loop other = first_loop(files[1]);
  if (const auto map = isomorphic(loop, other)) {
    std::cout << "isomorphic " << one_based(*map) << '\n';
    return 0;
  }
  std::cout << "not isomorphic\n";
  return 1;
}

int cmd_export(int n, const fs::path& dir, const fs::path& cache_dir) {
  LibraryOptions options;
  options.cache_dir = cache_dir;
  const LoopLibrary lib = build_library(n, options);
  fs::create_directories(dir);
  const fs::path path = dir / ("loops-" + std::to_string(n) + ".txt");
  write_loops_file(path, lib.loops(),
                   std::to_string(lib.size()) + " nilpotent loops of order " + std::to_string(n));
  std::cout << path.string() << ": " << lib.size() << " loops\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate nilpotent loops of small order"};
  app.require_subcommand(1);

  EnumConfig config;
  std::string cache;
  int n = 0;
  bool machine = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count nilpotent loops of order n");
  enumerate->add_option("n", n, "Order (1..23)")->required();
  enumerate->add_flag("--deep", config.deep, "Allow the long runs for n = 16, 18, 20");
  enumerate->add_option("--workers", config.workers, "Worker threads (0 = all cores)");
  enumerate->add_option("--cache", cache, "Cache directory (default $NILLOOPS_CACHE or ./cache)");
  enumerate->add_option("--group-cap", config.group_order_cap, "Largest automorphism group handled");
  enumerate->add_flag("--machine", machine, "Tab-separated rows with bare digits");

  int q = 0;
  bool ratio = false;
  auto* count2q = app.add_subcommand("count2q", "Closed-form count of nilpotent loops of order 2q");
  count2q->add_option("q", q, "Odd prime")->required();
  count2q->add_flag("--ratio", ratio, "Also print N(2q)(q-1)/2^((q-2)(q-1)) and its bound");

  std::string what;
  std::vector<fs::path> files;
  auto* loop = app.add_subcommand("loop", "Inspect a loop given in a file");
  loop->add_option("what", what, "center | class | aut | iso")
      ->required()
      ->check(CLI::IsMember({"center", "class", "aut", "iso"}));
  loop->add_option("files", files, "Loop files")->required()->expected(1, 2);

  int export_n = 0;
  fs::path export_dir;
  auto* exp = app.add_subcommand("export", "Write all nilpotent loops of order n");
  exp->add_option("n", export_n, "Order")->required();
  exp->add_option("dir", export_dir, "Output directory")->required();
  exp->add_option("--cache", cache, "Cache directory (default $NILLOOPS_CACHE or ./cache)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    config.cache_dir = cache.empty() ? default_cache_dir() : fs::path(cache);
    if (*enumerate) return cmd_enumerate(n, config, machine);
    if (*count2q) return cmd_count2q(q, ratio);
    if (*loop) return cmd_loop(what, files);
    if (*exp) return cmd_export(export_n, export_dir, config.cache_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
