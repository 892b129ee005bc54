#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "hybridisc/errors.hpp"

namespace fs = std::filesystem;
using namespace hybridisc;

namespace {

int env_threads() {
  if (const char* v = std::getenv("HYBRIDISC_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return 1;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-scale disc potential solver: experiment runner"};
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  bool dump = false;
  app.add_option("--config", config_path, "Experiment config (INI)")->required();
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Sweep workers (default: HYBRIDISC_THREADS or 1)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--dump-reports", dump, "Also write the solve reports as JSON");
  CLI11_PARSE(app, argc, argv);
  if (threads == 0) threads = env_threads();

  try {
    const cli::ExperimentConfig cfg = cli::load_config(config_path);
    fs::create_directories(out_dir);
    const cli::RunResult result = cli::run_experiment(cfg, threads, dump);
    const fs::path csv = fs::path(out_dir) / cfg.output;
    write_file(csv, result.csv);
    if (dump) {
      write_file(fs::path(out_dir) / (fs::path(cfg.output).stem().string() + ".reports.json"),
                 result.reports_json);
    }
    std::cout << "wrote " << csv.string() << "\n";
    return 0;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const InvalidGeometry& e) {
    std::cerr << "invalid geometry: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateSystem& e) {
    std::cerr << "degenerate system: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
