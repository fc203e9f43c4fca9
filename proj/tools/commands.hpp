#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eisp/modgroup.hpp"
#include "eisp/real.hpp"

namespace eisp::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string command;
  int k_min = 0, k_max = 0;
  int N_min = 1, N_max = 1;
  int l = 0;
  int m_min = 2, m_max = 4;
  int r = 0;  // 0: all
  int delta = 0;
  std::vector<std::pair<long, long>> lambdas;  // empty: all admissible
  std::vector<std::string> gammas;
  prec_t prec = 192;
  long trunc = 0;  // 0: command default
  long radius = 400;
  double tol = 0;  // 0: command default
  long den_bound = 1000000;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::string out;
  std::string preset;
  std::string data_file;
  bool congruence = false;
  bool check = false;
  bool details = false;
};

// Full command line to exit code; JSON goes to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eisp::cli
