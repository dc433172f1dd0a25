#include "setfam/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "setfam/boolean_algebra.hpp"
#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"
#include "setfam/parallel.hpp"
#include "setfam/rng.hpp"

namespace setfam {

unsigned configured_threads() {
  if (const char* env = std::getenv("SETFAM_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

double default_probability(std::uint64_t m, std::uint32_t d) {
  if (m < 2 || d < 2) throw Error("default probability needs m >= 2 and d >= 2");
  double p;
  if (d == 2) {
    p = std::pow(2.0, -1.0 / 3.0) * std::pow(static_cast<double>(m), -1.0 / 3.0);
  } else {
    const double num = static_cast<double>(ceil_log2(d + 2)) - 1.0;
    const double den = std::pow(2.0, d) - 1.0;
    p = std::pow(static_cast<double>(m), -num / den);
  }
  return std::min(p, 1.0);
}

double deletion_guarantee(std::uint64_t m, std::uint32_t d, double p,
                          std::uint64_t witness_count) {
  return static_cast<double>(m) * p -
         std::pow(p, std::pow(2.0, d)) * static_cast<double>(witness_count);
}

namespace {

std::vector<std::uint32_t> run_deletion_trial(const SetFamily& f, std::uint32_t d, double p,
                                              std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng = stream_rng(seed, trial);
  IndexMask kept(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (unit_uniform(rng) < p) kept.set(i);
  }
  const Property prop = BdFree{d};
  while (true) {
    const auto participation = violation_participation(f, kept, prop);
    std::uint64_t best = 0;
    std::uint32_t victim = 0;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      if (participation[i] > best) {
        best = participation[i];
        victim = i;
      }
    }
    if (best == 0) break;
    kept.reset(victim);
  }
  return kept.to_indices();
}

void post_verify(const SetFamily& f, const ExtractionResult& r) {
  if (!holds(f, IndexMask::from_indices(f.size(), r.indices), r.property)) {
    throw InternalVerificationError(r.method + " produced a subfamily failing " +
                                    property_name(r.property));
  }
}

}  // namespace

ExtractionResult random_deletion_bd_free(const SetFamily& f, std::uint32_t d, double p,
                                         std::uint64_t seed, std::uint32_t trials) {
  if (!(p > 0.0 && p <= 1.0)) throw Error("probability must be in (0,1]");
  if (d < 2) throw Error("random deletion needs d >= 2");
  if (trials < 1) throw Error("need at least one trial");

  std::vector<std::vector<std::uint32_t>> outcomes(trials);
  const unsigned workers = std::min<unsigned>(configured_threads(), trials);
  if (workers <= 1) {
    for (std::uint32_t t = 0; t < trials; ++t) outcomes[t] = run_deletion_trial(f, d, p, seed, t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned wkr = 0; wkr < workers; ++wkr) {
      pool.emplace_back([&, wkr] {
        for (std::uint32_t t = wkr; t < trials; t += workers) {
          outcomes[t] = run_deletion_trial(f, d, p, seed, t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t best_trial = 0;
  double size_sum = 0.0;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    size_sum += static_cast<double>(outcomes[t].size());
    if (outcomes[t].size() > outcomes[best_trial].size()) best_trial = t;
  }

  ExtractionResult r;
  r.indices = outcomes[best_trial];
  r.property = BdFree{d};
  r.method = "random-deletion";
  r.randomized = true;
  r.seed = seed;
  r.probability = p;
  r.stats = {trials, static_cast<std::uint32_t>(outcomes[best_trial].size()),
             size_sum / static_cast<double>(trials)};

  // Exact witness count when the generator-pair space is small; otherwise
  // the binomial cap stands in and the guarantee is marked pessimistic.
  const std::uint64_t m = f.size();
  std::uint64_t count;
  if (binomial(m, d) <= 200'000) {
    count = count_boolean_algebras(f, d);
    r.guarantee_pessimistic = false;
  } else {
    count = witness_count_bound(m, d);
    r.guarantee_pessimistic = true;
  }
  r.guarantee = deletion_guarantee(m, d, p, count);

  post_verify(f, r);
  return r;
}

ExtractionResult kleitman_extract(const SetFamily& f, std::uint32_t a) {
  if (a < 2) throw Error("kleitman extraction needs a >= 2");
  ExtractionResult r;
  r.property = AUnionFree{a};
  r.method = "kleitman";
  if (f.size() == 0) return r;

  const RankTable t = rank_partition(f);
  std::uint32_t best_k = 1;
  std::size_t best_value = 0;
  for (std::uint32_t k = 1; k <= t.max_rank; ++k) {
    const std::size_t value = t.levels[k - 1].size() + k - 1;
    if (value > best_value) {
      best_value = value;
      best_k = k;
    }
  }

  IndexMask chosen = IndexMask::from_indices(f.size(), t.levels[best_k - 1]);
  // Chain into the level: walk predecessors from the level's lowest-index
  // member; ranks strictly decrease along the walk, so the chain adds
  // exactly best_k - 1 new members below the level.
  std::int64_t cur = t.levels[best_k - 1].front();
  while (t.predecessor[cur] >= 0) {
    cur = t.predecessor[cur];
    chosen.set(static_cast<std::size_t>(cur));
  }

  r.indices = chosen.to_indices();
  if (r.indices.size() != best_value) {
    throw InternalVerificationError("level plus chain has size " +
                                    std::to_string(r.indices.size()) + ", expected " +
                                    std::to_string(best_value));
  }
  r.guarantee = std::max(static_cast<double>(best_value),
                         std::sqrt(2.0 * static_cast<double>(f.size())) - 0.5);
  if (static_cast<double>(r.indices.size()) < std::ceil(r.guarantee - 1e-9)) {
    throw InternalVerificationError("extracted size " + std::to_string(r.indices.size()) +
                                    " falls short of guarantee " + std::to_string(r.guarantee));
  }
  post_verify(f, r);
  return r;
}

ExtractionResult greedy_extract(const SetFamily& f, const Property& p, GreedyOrder order) {
  if (std::holds_alternative<ABUnionFree>(p)) {
    throw Error("greedy extraction supports bd and uf properties only");
  }
  std::vector<std::uint32_t> scan(f.size());
  std::iota(scan.begin(), scan.end(), 0);
  if (order != GreedyOrder::Given) {
    std::stable_sort(scan.begin(), scan.end(), [&](std::uint32_t x, std::uint32_t y) {
      return order == GreedyOrder::SizeAscending ? f.member_size(x) < f.member_size(y)
                                                 : f.member_size(x) > f.member_size(y);
    });
  }

  IndexMask selected(f.size());
  for (std::uint32_t i : scan) {
    selected.set(i);
    if (!holds(f, selected, p)) selected.reset(i);
  }

  ExtractionResult r;
  r.indices = selected.to_indices();
  r.property = p;
  r.guarantee = static_cast<double>(r.indices.size());
  switch (order) {
    case GreedyOrder::Given: r.method = "greedy-given"; break;
    case GreedyOrder::SizeAscending: r.method = "greedy-size-ascending"; break;
    case GreedyOrder::SizeDescending: r.method = "greedy-size-descending"; break;
  }
  post_verify(f, r);
  return r;
}

}  // namespace setfam
