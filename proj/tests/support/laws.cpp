#include "laws.hpp"

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "qrcomp/characterize.hpp"
#include "qrcomp/compose.hpp"

namespace qrcomp::testing {

ComponentSpec random_component(const std::string& name, std::mt19937_64& rng,
                               std::size_t max_modes) {
  std::uniform_int_distribution<std::size_t> modes(1, max_modes), count(2, 4);
  std::uniform_int_distribution<int> rel(5, 99);
  RawComponentSpec raw{name, {}, {}};
  std::size_t d = modes(rng);
  for (std::size_t k = 0; k < d; ++k) {
    raw.reliabilities.push_back(rel(rng) / 100.0);
    std::vector<int> pool = {10, 20, 30, 40, 50, 60};
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count(rng));
    std::sort(pool.rbegin(), pool.rend());
    std::vector<QualityPair> pairs;
    for (int level : pool) {
      int out = 5 * std::uniform_int_distribution<int>(1, level / 5)(rng);
      pairs.push_back({static_cast<double>(level), static_cast<double>(out)});
    }
    raw.quality.push_back(pairs);
  }
  return validate_component_spec(raw);
}

LawReport check_algebraic_laws(std::uint64_t seed, std::size_t triples) {
  LawReport report;
  std::mt19937_64 rng(seed);
  const auto Max = ParallelPolicy::Max;
  const auto Ordered = ParallelPolicy::Ordered;
  for (std::size_t t = 0; t < triples; ++t) {
    auto a = build_component_model(random_component("A", rng));
    auto b = build_component_model(random_component("B", rng));
    auto c = build_component_model(random_component("C", rng));
    auto check = [&](const char* law, const QRModel& lhs, const QRModel& rhs) {
      ++report.checks;
      if (!models_equivalent(lhs, rhs)) {
        report.failures.push_back(std::string(law) + ": triple " + std::to_string(t) +
                                  " of seed " + std::to_string(seed));
      }
    };
    check("parallel idempotence (max)", compose_parallel(a, a, Max), a);
    check("parallel idempotence (ordered)", compose_parallel(a, a, Ordered), a);
    check("parallel commutativity (max)", compose_parallel(a, b, Max), compose_parallel(b, a, Max));
    check("parallel associativity (max)",
          compose_parallel(compose_parallel(a, b, Max), c, Max),
          compose_parallel(a, compose_parallel(b, c, Max), Max));
    check("parallel associativity (ordered)",
          compose_parallel(compose_parallel(a, b, Ordered), c, Ordered),
          compose_parallel(a, compose_parallel(b, c, Ordered), Ordered));
    check("series associativity", compose_series(compose_series(a, b), c),
          compose_series(a, compose_series(b, c)));
    check("series left-distributes over parallel",
          compose_series(a, compose_parallel(b, c, Max)),
          compose_parallel(compose_series(a, b), compose_series(a, c), Max));
    check("series right-distributes over parallel",
          compose_series(compose_parallel(b, c, Max), a),
          compose_parallel(compose_series(b, a), compose_series(c, a), Max));
    ++report.triples;
  }
  return report;
}

std::vector<std::string> check_series_counterexamples() {
  std::vector<std::string> problems;
  auto c2 = component_model("C2");
  auto c3 = component_model("C3");
  if (models_equivalent(compose_series(c3, c2), compose_series(c2, c3))) {
    problems.push_back("C3 then C2 is equivalent to C2 then C3");
  }
  if (models_equivalent(compose_series(c2, c2), c2)) {
    problems.push_back("C2 then C2 is equivalent to C2");
  }
  return problems;
}

}  // namespace qrcomp::testing
