#pragma once

// Doubling benchmark of the cut search with precomputed embeddings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdcut {

struct BenchOptions {
  std::string family = "carved";
  std::vector<int> sizes;
  int repetitions = 5;
  /// Instances per size use seeds seed, seed + 1, ...; the row reports the
  /// median over instances of each instance's median call time.
  int instances = 7;
  std::uint64_t seed = 1;
  /// Large faces to carve; 0 picks max(2, n / 16).
  int faces = 0;
  /// Each timed sample repeats the call until it covers this many ms.
  double min_sample_ms = 20.0;
};

struct BenchRow {
  int n = 0;
  /// Median milliseconds per call.
  double ms = 0;
  /// t(n) / t(previous n); absent for the first row.
  std::optional<double> ratio;
  int faces = 0;
};

/// "1k,2k,4k", "1024,2048" or "2^10..2^20" (every power in between).
std::vector<int> parse_sizes(std::string_view text);

/// All instances are generated first, untimed; timed samples then run in
/// round-robin passes over every instance.
std::vector<BenchRow> run_bench(const BenchOptions& options, std::ostream* progress = nullptr);

/// Header "n,ms,ratio"; the ratio column is dropped for a single size.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mdcut
