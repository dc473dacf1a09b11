#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ffhg/cyclotomic.hpp"
#include "ffhg/picard.hpp"

namespace ffhg {

/// Frozen CSV header for report rows.
inline constexpr const char* kCsvHeader = "q,lambda,mu,count,trace,rhs_trace,match";

/// {"order": n, "coefficients": [[num, den], ...]}; integers that do not fit
/// in 64 bits are written as decimal strings.
nlohmann::json to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TraceReport& report);
nlohmann::json to_json(std::span<const TraceReport> reports);
void write_csv(std::ostream& os, std::span<const TraceReport> reports);

/// Multi-line human-readable report for the `count` subcommand.
std::string format_report(const TraceReport& report, const TheoremValue* theorem = nullptr);

/// Splits [0, count) into `jobs` contiguous shards and runs
/// fn(begin, end) for each on its own thread. Results must be written to
/// per-index slots so the merged output does not depend on the worker count.
template <typename Fn>
void parallel_shards(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = std::min(count, w * chunk), end = std::min(count, begin + chunk);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : workers) t.join();
}

/// One Picard report per admissible (lambda, mu), ordered by
/// (code(lambda), code(mu)). Requires p > 3 and q = 1 (mod 3).
std::vector<TraceReport> picard_table(const Field& f, unsigned jobs = 1);

}  // namespace ffhg
