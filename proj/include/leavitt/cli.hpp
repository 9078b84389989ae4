#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace leavitt::cli {

struct Config {
  std::size_t d = 2;
  std::string p = "2";
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iter = 10000;
  double tol = 1e-10;
  std::size_t r_max = 0;  // 0: use the default cap
  bool json = false;
};

inline constexpr const char* kSchema = "leavitt-lp/1";

/// Runs one command line (args[0] is the program name). Exit codes: 0 ok,
/// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace leavitt::cli
