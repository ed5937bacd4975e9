#include "mdcut/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "mdcut/cut.hpp"
#include "mdcut/errors.hpp"
#include "mdcut/generators.hpp"

namespace mdcut {

namespace {

int parse_size(std::string_view s) {
  if (s.starts_with("2^")) {
    int e = 0;
    const auto body = s.substr(2);
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), e);
    if (ec != std::errc() || ptr != body.data() + body.size() || e < 0 || e > 30) {
      throw InputError("bad size '" + std::string(s) + "'");
    }
    return 1 << e;
  }
  long long scale = 1;
  if (!s.empty() && (s.back() == 'k' || s.back() == 'K')) scale = 1000;
  if (!s.empty() && (s.back() == 'm' || s.back() == 'M')) scale = 1000000;
  const auto body = scale == 1 ? s : s.substr(0, s.size() - 1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || v <= 0 || v * scale > 100'000'000) {
    throw InputError("bad size '" + std::string(s) + "'");
  }
  return static_cast<int>(v * scale);
}

}  // namespace

std::vector<int> parse_sizes(std::string_view text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = parse_size(text.substr(0, dots));
    const int hi = parse_size(text.substr(dots + 2));
    if (lo > hi) throw InputError("empty size range");
    for (long long n = lo; n <= hi; n *= 2) out.push_back(static_cast<int>(n));
    return out;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_size(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InputError("no sizes given");
  return out;
}

namespace {

double median_of(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options, std::ostream* progress) {
  using clock = std::chrono::steady_clock;
  if (options.repetitions < 1) throw InputError("need at least one repetition");
  if (options.instances < 1) throw InputError("need at least one instance");

  struct Instance {
    std::size_t row;
    CarveResult carved;
    int inner = 1;
    std::vector<double> samples;
  };
  std::vector<Instance> instances;
  std::vector<BenchRow> rows;
  for (int n : options.sizes) {
    BenchRow row;
    row.n = n;
    for (int i = 0; i < options.instances; ++i) {
      GeneratorSpec spec;
      spec.family = options.family;
      spec.n = n;
      spec.faces = options.faces > 0 ? options.faces : std::max(2, n / 16);
      spec.seed = options.seed + static_cast<std::uint64_t>(i);
      instances.push_back({rows.size(), generate(spec), 1, {}});
      row.faces = instances.back().carved.faces;
    }
    rows.push_back(row);
    if (progress != nullptr) *progress << "generated n=" << n << " faces=" << row.faces << '\n';
  }

  auto time_calls = [](const Instance& inst, int calls) {
    MinDiscCutOptions cut_options;
    cut_options.rotation = &inst.carved.plane.rotation;
    cut_options.self_verify = false;
    const auto start = clock::now();
    for (int j = 0; j < calls; ++j) {
      const auto result = find_min_disc_cut(inst.carved.plane.graph, cut_options);
      if (inst.carved.faces >= 2 && !result.cut) throw ContractViolation("benchmark instance produced no cut");
    }
    return std::chrono::duration<double, std::milli>(clock::now() - start).count() / calls;
  };
  for (Instance& inst : instances) {
    const double first_ms = time_calls(inst, 1);
    inst.inner = std::max(1, static_cast<int>(std::ceil(options.min_sample_ms / std::max(first_ms, 1e-3))));
  }
  // Round-robin passes spread slow stretches of the machine over all sizes.
  for (int r = 0; r < options.repetitions; ++r) {
    for (Instance& inst : instances) inst.samples.push_back(time_calls(inst, inst.inner));
  }

  std::vector<std::vector<double>> per_row(rows.size());
  for (Instance& inst : instances) per_row[inst.row].push_back(median_of(std::move(inst.samples)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].ms = median_of(std::move(per_row[i]));
    if (i > 0 && rows[i - 1].ms > 0) rows[i].ratio = rows[i].ms / rows[i - 1].ms;
    if (progress != nullptr) {
      *progress << "n=" << rows[i].n << " ms=" << rows[i].ms << " (" << options.instances << " instances)\n";
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const bool ratios = rows.size() > 1;
  out << (ratios ? "n,ms,ratio\n" : "n,ms\n");
  char buf[64];
  for (const BenchRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.4f", row.ms);
    out << row.n << ',' << buf;
    if (ratios) {
      out << ',';
      if (row.ratio) {
        std::snprintf(buf, sizeof buf, "%.3f", *row.ratio);
        out << buf;
      }
    }
    out << '\n';
  }
}

}  // namespace mdcut
