#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shatter/output_record.hpp"

namespace shatter::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFail = 2, kNonConvergence = 3 };

OutputRecord cmd_coef(std::uint64_t n, std::uint32_t h, std::uint32_t p);
OutputRecord cmd_bound(std::uint64_t n, double eps, std::uint32_t h, std::uint32_t p, bool clamp);
OutputRecord cmd_solve_n(double delta, double eps, std::uint32_t h, std::uint32_t p,
                         std::optional<std::uint64_t> ceiling = std::nullopt);
OutputRecord cmd_solve_eps(std::uint64_t n, double delta, std::uint32_t h, std::uint32_t p);

struct CurveRequest {
  std::uint64_t n_start = 100;
  std::uint64_t n_end = 10'000'000;
  int n_points = 50;
  std::vector<std::uint32_t> h_list{1, 2, 3};
  std::vector<std::uint32_t> p_list{1};
  std::string out_path;
};

/// Curve table as written to file: header `n,h,p,epsilon`, LF endings,
/// epsilon with 10 significant digits.
std::string curve_csv(const CurveRequest& req);
OutputRecord cmd_curve(const CurveRequest& req);

OutputRecord cmd_verify(std::size_t n, std::size_t h, int trials, std::uint64_t seed, int workers);

/// Full command line: parses, dispatches, renders, and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shatter::cli
