#include "setfam/bench.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/extraction.hpp"
#include "setfam/grid.hpp"
#include "setfam/oracle.hpp"
#include "setfam/property.hpp"

namespace setfam {
namespace {

using nlohmann::json;

struct RowJob {
  std::string family_label;
  std::function<void(BenchRow&, std::uint64_t seed)> run;
};

void fill_extraction(BenchRow& row, const ExtractionResult& r) {
  row.property = property_name(r.property);
  row.method = r.method;
  row.size = static_cast<std::uint32_t>(r.indices.size());
  row.guarantee = r.guarantee;
}

// Each scenario contributes an extraction row and an exact row over the
// same family; the oracle starts from the extracted subfamily, so the
// exact size can never print below the extracted one even when the node
// budget runs out before the tree is exhausted.
void append_b2_scenario(std::vector<RowJob>& jobs, std::uint32_t n,
                        std::uint64_t node_limit) {
  auto family = std::make_shared<SetFamily>(power_set_family(n));
  auto extracted = std::make_shared<std::vector<std::uint32_t>>();
  std::string label = "power-set-" + std::to_string(n);
  const std::uint64_t m = family->size();

  jobs.push_back({label, [family, extracted, m](BenchRow& row, std::uint64_t seed) {
                    auto r = random_deletion_bd_free(
                        *family, 2, default_probability(m, 2), seed, 40);
                    fill_extraction(row, r);
                    auto [lo, hi] = b2_bounds(m);
                    row.bounds = {lo, hi};
                    *extracted = r.indices;
                  }});
  jobs.push_back({label, [family, extracted, m, node_limit](BenchRow& row,
                                                            std::uint64_t) {
                    SearchConfig cfg;
                    cfg.node_limit = node_limit;
                    if (!extracted->empty()) cfg.initial = *extracted;
                    auto r = max_subfamily(*family, BdFree{2}, cfg);
                    row.property = property_name(BdFree{2});
                    row.method = "exact";
                    row.size = r.optimum;
                    row.proven = r.proven;
                    auto [lo, hi] = b2_bounds(m);
                    row.bounds = {lo, hi};
                  }});
}

void append_uf_scenario(std::vector<RowJob>& jobs, std::uint32_t k) {
  auto family = std::make_shared<SetFamily>(erdos_shelah_family(k));
  std::string label = "es-" + std::to_string(k);
  const std::uint64_t m = family->size();

  auto uf_bounds = [m, k] {
    auto ub = union_free_bounds(m, 2);
    std::vector<NamedBound> out{
        {"lemma41", static_cast<double>(lemma41_bound(k, 2)), false, ""},
        ub.kleitman_lower, ub.eq3_upper, ub.fls_lower};
    return out;
  };
  jobs.push_back({label, [family, uf_bounds](BenchRow& row, std::uint64_t) {
                    auto r = kleitman_extract(*family, 2);
                    fill_extraction(row, r);
                    row.bounds = uf_bounds();
                  }});
  jobs.push_back({label, [family, uf_bounds](BenchRow& row, std::uint64_t) {
                    SearchConfig cfg;
                    cfg.node_limit = 200'000;
                    auto r = max_subfamily(*family, AUnionFree{2}, cfg);
                    row.property = property_name(AUnionFree{2});
                    row.method = "exact";
                    row.size = r.optimum;
                    row.proven = r.proven;
                    row.bounds = uf_bounds();
                  }});
}

std::vector<RowJob> suite_jobs(const std::string& suite) {
  std::vector<RowJob> jobs;
  if (suite == "b2-small" || suite == "all") {
    append_b2_scenario(jobs, 3, 200'000);
    append_b2_scenario(jobs, 4, 200'000);
    append_b2_scenario(jobs, 5, 20'000);
  }
  if (suite == "uf-es" || suite == "all") {
    append_uf_scenario(jobs, 2);
    append_uf_scenario(jobs, 3);
  }
  return jobs;
}

}  // namespace

bool known_suite(const std::string& suite) {
  return suite == "b2-small" || suite == "uf-es" || suite == "all" ||
         suite == "none";
}

BenchTable run_bench(const std::string& suite, std::uint64_t seed,
                     bool timing) {
  if (!known_suite(suite)) throw Error("unknown bench suite: " + suite);

  BenchTable table;
  table.manifest.command = "bench";
  table.manifest.flags["suite"] = suite;
  table.manifest.flags["format"] = "json";
  table.manifest.seed = seed;
  table.manifest.seeded = true;

  auto jobs = suite_jobs(suite);
  table.rows.resize(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    BenchRow& row = table.rows[i];
    row.family = jobs[i].family_label;
    // The family behind a label is fixed, so m is recomputed cheaply here
    // instead of being threaded through every job.
    auto start = std::chrono::steady_clock::now();
    try {
      jobs[i].run(row, seed + i);
    } catch (const Error& e) {
      row.error = e.what();
    }
    if (timing) {
      auto end = std::chrono::steady_clock::now();
      row.elapsed_ms =
          std::chrono::duration<double, std::milli>(end - start).count();
    }
  }
  // m per label, filled after the fact so error rows still carry it.
  for (BenchRow& row : table.rows) {
    if (row.family.rfind("power-set-", 0) == 0)
      row.m = 1ull << std::stoul(row.family.substr(10));
    else if (row.family.rfind("es-", 0) == 0) {
      std::uint64_t k = std::stoul(row.family.substr(3));
      row.m = k * k;
    }
  }
  return table;
}

json to_json(const BenchTable& t, bool timing) {
  json rows = json::array();
  for (const BenchRow& r : t.rows) {
    json jr{{"family", r.family}, {"m", r.m},         {"property", r.property},
            {"method", r.method}, {"size", r.size},   {"error", r.error}};
    if (r.guarantee) jr["guarantee"] = *r.guarantee;
    if (r.proven) jr["proven"] = *r.proven;
    json bounds = json::array();
    for (const NamedBound& b : r.bounds) bounds.push_back(to_json(b));
    jr["bounds"] = bounds;
    if (timing) jr["elapsed_ms"] = r.elapsed_ms;
    rows.push_back(jr);
  }
  return json{{"manifest", to_json(t.manifest)}, {"rows", rows}};
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string bench_csv(const BenchTable& t) {
  std::string out = "family,m,property,method,size,guarantee,proven,bounds,error\n";
  for (const BenchRow& r : t.rows) {
    out += r.family + ',' + std::to_string(r.m) + ',' + r.property + ',' +
           r.method + ',' + std::to_string(r.size) + ',';
    if (r.guarantee) out += json(*r.guarantee).dump();
    out += ',';
    if (r.proven) out += *r.proven ? "true" : "false";
    out += ',';
    std::string bounds;
    for (const NamedBound& b : r.bounds) {
      if (!bounds.empty()) bounds += '|';
      bounds += b.name + '=' + json(b.value).dump();
    }
    out += csv_escape(bounds) + ',' + csv_escape(r.error) + '\n';
  }
  return out;
}

BenchTable replay_bench(const RunManifest& m) {
  auto it = m.flags.find("suite");
  if (m.command != "bench" || it == m.flags.end())
    throw Error("manifest does not describe a bench run");
  return run_bench(it->second, m.seed, false);
}

}  // namespace setfam
