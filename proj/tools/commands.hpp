#pragma once

// Command implementations behind fpdir_cli. Every command writes a table to
// `out` (CSV or JSON) and returns an exit code: 0 success, 1 verification
// failure, 2 usage or domain error (message on `err`).
//
// CSV headers:
//   dircount  p,n,lambda,method,count_fp,predicted,abs_error,rel_error
//   nsolve    p,n,lambda,method,value,predicted,abs_error,rel_error
//   curve     lambda,D_lambda,lambda_squared
//   sweep     p,lambda,n,exact,main_term,error,error_p34,error_sqrtp
//   moments   p,n,n1,n_minus1,even_moment,odd_moment,odd_even_ratio,moment_main
//   equidist  p,b,tau_b,d_quarter,d_half,d_full,max_ratio,et_min_bound,et_best_k,kloosterman_t1,kloosterman_t2,kloosterman_t3
//   verify    id,name,passed,detail
// Floats are printed with 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpdir/verify.hpp"

namespace fpdir::cli {

enum class Command { dircount, nsolve, curve, sweep, moments, equidist, verify };
enum class Format { csv, json };
enum class MethodChoice { fast, brute, both };
enum class SweepQuantity { nsolve, directions };

// Seeds std::mt19937_64 for sampled b lists.
inline constexpr std::uint64_t kDefaultSeed = 20240611;
// Number of b values drawn when equidist gets no --b list.
inline constexpr std::uint64_t kDefaultSamples = 16;

struct RunConfig {
  Command command = Command::verify;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> pmin;
  std::optional<std::uint64_t> pmax;
  std::optional<std::uint64_t> n;
  std::vector<double> lambdas;
  MethodChoice method = MethodChoice::fast;
  unsigned threads = 1;
  std::string out_path;  // empty: the stream passed to run()
  Format format = Format::csv;
  std::uint64_t seed = kDefaultSeed;
  double grid = 0.01;
  verify::Suite suite = verify::Suite::small;
  std::vector<std::uint64_t> b;
  std::uint64_t samples = kDefaultSamples;
  SweepQuantity quantity = SweepQuantity::nsolve;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fpdir::cli
