#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qrcomp/model_core.hpp"

namespace qrcomp::testing {

// 1 to max_modes modes, reliabilities in [0.05, 0.99], 2 to 4 levels per mode
// drawn from multiples of 10 so that chained lookups land on listed levels.
ComponentSpec random_component(const std::string& name, std::mt19937_64& rng,
                               std::size_t max_modes = 3);

struct LawReport {
  std::size_t triples = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // "law: seed detail"
};

// Parallel idempotence, commutativity and associativity, series
// associativity and distribution of series over parallel, on `triples`
// random component triples.
LawReport check_algebraic_laws(std::uint64_t seed, std::size_t triples);

// Series is neither commutative nor idempotent: both must come out
// non-equivalent on the example components.
std::vector<std::string> check_series_counterexamples();

}  // namespace qrcomp::testing
