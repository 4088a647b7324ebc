#include "qrcomp/mc_oracle.hpp"

#include <fmt/format.h>

#include <cmath>
#include <future>
#include <random>

#include "qrcomp/synthesize.hpp"

namespace qrcomp {

namespace {

constexpr std::uint64_t kShards = 4;

// 53 random bits into [0,1); identical on every platform, unlike
// std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class Trial>
Estimate run_sharded(std::uint64_t trials, std::uint64_t seed, Trial trial) {
  if (trials == 0) throw ValidationError("trial count must be positive");
  std::vector<std::future<std::uint64_t>> shards;
  for (std::uint64_t s = 0; s < kShards; ++s) {
    const std::uint64_t n = trials / kShards + (s < trials % kShards ? 1 : 0);
    shards.push_back(std::async(std::launch::async, [n, s, seed, &trial] {
      std::mt19937_64 rng(shard_seed(seed, s));
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < n; ++i) hits += trial(rng) ? 1 : 0;
      return hits;
    }));
  }
  Estimate e;
  e.trials = trials;
  for (auto& f : shards) e.hits += f.get();
  e.mean = static_cast<double>(e.hits) / static_cast<double>(trials);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
  return e;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard) {
  std::uint64_t state = root;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= shard; ++i) out = splitmix64(state);
  return out;
}

SuspensionSchedule SuspensionSchedule::matching(const Configuration& target) {
  SuspensionSchedule s;
  for (ModeStatus m : target.slots()) s.suspended.push_back(m == ModeStatus::Suspended);
  return s;
}

Estimate simulate_state_probability(const QRModel& model, const Configuration& target,
                                    const SuspensionSchedule& schedule, std::uint64_t trials,
                                    std::uint64_t seed) {
  const SlotLayout& layout = model.layout();
  if (!layout.is_valid(target)) {
    throw ValidationError(fmt::format("target {} is not a configuration of the model", target.str()));
  }
  if (schedule.suspended.size() != layout.width) {
    throw ValidationError("suspension schedule does not cover every slot");
  }
  for (std::size_t i = 0; i < layout.width; ++i) {
    const bool susp = schedule.suspended[i];
    const ModeStatus s = target[i];
    if ((s == ModeStatus::Suspended) != susp && s != ModeStatus::NotAvailed) {
      throw ValidationError(fmt::format("target {} inconsistent with the suspension schedule at slot {}",
                                        target.str(), i + 1));
    }
  }
  std::vector<double> z(layout.width);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    for (std::size_t k = 0; k < layout.mode_counts[c]; ++k) {
      z[layout.offsets[c] + k] = model.components()[c].mode_reliabilities[k];
    }
  }
  return run_sharded(trials, seed, [&](std::mt19937_64& rng) {
    bool realized = true;
    for (std::size_t c = 0; c < layout.size(); ++c) {
      const std::size_t off = layout.offsets[c];
      bool operating = false;
      for (std::size_t k = 0; k < layout.mode_counts[c]; ++k) {
        ModeStatus got;
        if (operating) {
          got = ModeStatus::NotAvailed;
        } else if (schedule.suspended[off + k]) {
          got = ModeStatus::Suspended;
        } else if (unit(rng) < z[off + k]) {
          got = ModeStatus::Operating;
          operating = true;
        } else {
          got = ModeStatus::Failed;
        }
        if (got != target[off + k]) realized = false;
      }
    }
    return realized;
  });
}

Estimate simulate_mode_reliability(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                   const SlotLayout& layout, const Configuration& config,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (!layout.is_valid(config)) {
    throw ValidationError(fmt::format("configuration {} does not fit the layout", config.str()));
  }
  std::vector<double> z(layout.size(), 0.0);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (auto mode = operating_mode(layout.segment(config, c))) {
      const ComponentSpec* spec = find_spec(specs, layout.components[c]);
      if (!spec) throw ValidationError(fmt::format("no specification for {}", layout.components[c]));
      z[c] = spec->mode_reliabilities.at(*mode - 1);
    }
  }
  std::vector<std::vector<std::size_t>> paths;
  for (const auto& p : graph.component_paths()) {
    std::vector<std::size_t> idx;
    for (const auto& name : p) {
      auto c = layout.index_of(name);
      if (!c) throw ValidationError(fmt::format("component {} missing from configuration", name));
      idx.push_back(*c);
    }
    paths.push_back(std::move(idx));
  }
  return run_sharded(trials, seed, [&](std::mt19937_64& rng) {
    std::vector<char> up(z.size());
    for (std::size_t c = 0; c < z.size(); ++c) up[c] = z[c] > 0.0 && unit(rng) < z[c];
    for (const auto& p : paths) {
      bool ok = true;
      for (std::size_t c : p) ok = ok && up[c];
      if (ok) return true;
    }
    return false;
  });
}

bool agrees_within(double analytic, const Estimate& e, double sigmas) {
  const double p = std::clamp(analytic, 0.0, 1.0);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(e.trials));
  return std::fabs(e.mean - analytic) <= sigmas * sigma + 1e-12;
}

std::vector<OracleRow> cross_validate(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                      const QRModel& model, std::uint64_t trials, std::uint64_t seed,
                                      double sigmas) {
  const Assignment values = model.assignment();
  std::vector<OracleRow> rows;
  std::uint64_t seeds = seed;
  for (const ModelState& s : model.states()) {
    OracleRow r;
    r.config = s.config;
    r.analytic_prob = poly_eval(s.expr, values);
    r.simulated_prob = simulate_state_probability(model, s.config, SuspensionSchedule::matching(s.config),
                                                  trials, splitmix64(seeds));
    r.analytic_reliability = structural_reliability(graph, specs, model.layout(), s.config);
    r.simulated_reliability =
        simulate_mode_reliability(graph, specs, model.layout(), s.config, trials, splitmix64(seeds));
    r.prob_ok = agrees_within(r.analytic_prob, r.simulated_prob, sigmas);
    r.reliability_ok = agrees_within(r.analytic_reliability, r.simulated_reliability, sigmas);
    rows.push_back(std::move(r));
  }
  return rows;
}

Table oracle_table(const std::vector<OracleRow>& rows, std::uint64_t trials, std::uint64_t seed) {
  Table t;
  t.title = fmt::format("monte-carlo check ({} trials per state, seed {})", trials, seed);
  t.headers = {"configuration", "operate_prob", "simulated", "stderr", "ok",
               "reliability", "simulated_rel", "stderr_rel", "ok_rel"};
  std::size_t bad = 0;
  for (const OracleRow& r : rows) {
    bad += (r.prob_ok ? 0 : 1) + (r.reliability_ok ? 0 : 1);
    t.rows.push_back({Cell::of(r.config.str()), Cell::number(r.analytic_prob, 5),
                      Cell::number(r.simulated_prob.mean, 5), Cell::number(r.simulated_prob.std_error, 6),
                      Cell{r.prob_ok ? "yes" : "NO", r.prob_ok}, Cell::number(r.analytic_reliability, 5),
                      Cell::number(r.simulated_reliability.mean, 5),
                      Cell::number(r.simulated_reliability.std_error, 6),
                      Cell{r.reliability_ok ? "yes" : "NO", r.reliability_ok}});
  }
  t.footnotes.push_back(fmt::format("{} of {} comparisons outside 3 standard errors", bad, 2 * rows.size()));
  return t;
}

}  // namespace qrcomp
