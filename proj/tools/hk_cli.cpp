#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hk/driver.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients of parameter ideals in quotient rings"};
  std::string path;
  std::optional<std::uint32_t> characteristic;
  hk::RunOptions opt;
  bool json = false;
  bool print = false;
  app.add_option("session", path, "session file ('-' for stdin)")->required();
  app.add_option("--char", characteristic, "override the field characteristic (prime)");
  app.add_option("--seed", opt.seed, "seed for randomized certificates and search");
  app.add_option("--nmax", opt.n_max, "largest power sampled when fitting")->check(CLI::PositiveNumber);
  app.add_option("--guard", opt.guard, "extra agreeing samples required by fits")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "emit hk-report/1 JSON");
  app.add_flag("--print", print, "print the parsed session in canonical form and exit");
  CLI11_PARSE(app, argc, argv);

  try {
    hk::Session session = hk::parse_session(read_input(path), characteristic);
    if (print) {
      std::cout << hk::print_session(session);
      return 0;
    }
    hk::SessionRunner runner(std::move(session), opt);
    hk::Json report = runner.run_all();
    if (json) std::cout << report.dump(2) << "\n";
    else std::cout << hk::render_text(report);
    return runner.red_alerts() ? 2 : 0;
  } catch (const hk::ParseError& e) {
    std::cerr << "error: " << path << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
