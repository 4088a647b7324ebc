#pragma once

#include <cstdint>
#include <vector>

#include "qrcomp/qr_model.hpp"
#include "qrcomp/render.hpp"

namespace qrcomp {

struct Estimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double mean = 0.0;
  double std_error = 0.0;  // from the sample mean
};

// Which slots the designer suspends. Never sampled.
struct SuspensionSchedule {
  std::vector<bool> suspended;  // per slot

  // Suspends exactly the target's SUSPENDED slots.
  static SuspensionSchedule matching(const Configuration& target);
};

std::uint64_t splitmix64(std::uint64_t& state);
// Seed of shard `shard` derived from `root`.
std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard);

// Per trial every component walks its modes in order: suspended slots are
// skipped, the others operate with probability Z or fail. Counts trials
// that realize `target`.
Estimate simulate_state_probability(const QRModel& model, const Configuration& target,
                                    const SuspensionSchedule& schedule, std::uint64_t trials,
                                    std::uint64_t seed);

// Fraction of trials with at least one input-to-output path whose live
// components all succeed with their current-mode reliability.
Estimate simulate_mode_reliability(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                   const SlotLayout& layout, const Configuration& config,
                                   std::uint64_t trials, std::uint64_t seed);

// |analytic - estimate| <= sigmas * sqrt(p(1-p)/n) with p the analytic value.
bool agrees_within(double analytic, const Estimate& e, double sigmas);

struct OracleRow {
  Configuration config;
  double analytic_prob = 0.0;
  Estimate simulated_prob;
  double analytic_reliability = 0.0;
  Estimate simulated_reliability;
  bool prob_ok = false;
  bool reliability_ok = false;
};

std::vector<OracleRow> cross_validate(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                      const QRModel& model, std::uint64_t trials, std::uint64_t seed,
                                      double sigmas = 3.0);

Table oracle_table(const std::vector<OracleRow>& rows, std::uint64_t trials, std::uint64_t seed);

}  // namespace qrcomp
