// Command line front end.  Every data-producing subcommand emits a JSON
// object embedding its RunManifest; errors come back as JSON objects on
// stdout with a nonzero exit code, so scripted callers never have to parse
// prose.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "setfam/bench.hpp"
#include "setfam/boolean_algebra.hpp"
#include "setfam/bounds.hpp"
#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/extraction.hpp"
#include "setfam/grid.hpp"
#include "setfam/io.hpp"
#include "setfam/oracle.hpp"
#include "setfam/property.hpp"
#include "setfam/serialize.hpp"
#include "setfam/turan.hpp"

namespace {

using nlohmann::json;
using namespace setfam;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + output_path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> flags,
                          const std::string& input_path = "",
                          std::uint64_t seed = 0, bool seeded = false) {
  RunManifest m;
  m.command = command;
  m.flags = std::move(flags);
  m.seed = seed;
  m.seeded = seeded;
  if (!input_path.empty()) m.input_digest = fnv1a_hex(slurp(input_path));
  return m;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  std::cerr << "generated seed: " << seed << "\n";
  return seed;
}

// generate ------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::vector<std::uint32_t> sizes;
  std::uint32_t k = 0, d = 0, q = 0, a = 0, m = 0, n = 0;
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_generate(const GenerateArgs& g) {
  SetFamily f = [&] {
    if (g.kind == "chain-product") {
      if (g.sizes.empty()) throw Error("chain-product needs --sizes");
      return chain_product(g.sizes, g.max_universe);
    }
    if (g.kind == "es") return erdos_shelah_family(g.k);
    if (g.kind == "bd-extremal") return bd_extremal_family(g.k, g.d, g.max_universe);
    if (g.kind == "leveled") {
      if (!g.sizes.empty()) return leveled_family(g.sizes, g.max_universe);
      return leveled_family(g.q, g.k, g.max_universe);
    }
    if (g.kind == "geometric")
      return geometric_leveled_family(g.a, g.k, g.q, g.max_universe);
    if (g.kind == "co-singleton") return co_singleton_family(g.m);
    if (g.kind == "power-set") return power_set_family(g.n, g.max_universe);
    throw Error("unknown generator kind: " + g.kind);
  }();
  emit(format_family(f), g.output);
}

// validate ------------------------------------------------------------

struct ValidateArgs {
  std::string input;
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_validate(const ValidateArgs& v) {
  SetFamily f = read_family_file(v.input, v.max_universe);
  RankTable rt = rank_partition(f);
  std::vector<std::uint64_t> level_sizes;
  for (const auto& level : rt.levels) level_sizes.push_back(level.size());
  json j{{"m", f.size()},
         {"n", f.universe_size()},
         {"max_rank", rt.max_rank},
         {"level_sizes", level_sizes},
         {"manifest", to_json(make_manifest("validate", {{"input", v.input}}, v.input))}};
  emit(canonical_dump(j), v.output);
}

// detect --------------------------------------------------------------

struct DetectArgs {
  std::string input;
  std::uint32_t d = 2;
  std::uint64_t limit = 1'000'000;
  bool strict_base = false;
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_detect(const DetectArgs& a) {
  SetFamily f = read_family_file(a.input, a.max_universe);
  EnumerationOptions opts;
  opts.limit = a.limit;
  opts.require_nonempty_base = a.strict_base;
  EnumerationResult r = enumerate_boolean_algebras(f, a.d, opts);
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json j{{"d", a.d},
         {"count", r.witnesses.size()},
         {"complete", r.complete},
         {"free", r.witnesses.empty() && r.complete},
         {"witnesses", witnesses},
         {"manifest",
          to_json(make_manifest("detect",
                                {{"input", a.input},
                                 {"d", std::to_string(a.d)},
                                 {"limit", std::to_string(a.limit)},
                                 {"strict-base", a.strict_base ? "true" : "false"}},
                                a.input))}};
  emit(canonical_dump(j), a.output);
}

// grid ----------------------------------------------------------------

struct GridArgs {
  std::string input;
  std::uint32_t k = 0;
  std::uint32_t a = 2;
  bool show = false;
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_grid(const GridArgs& g) {
  SetFamily f = read_family_file(g.input, g.max_universe);
  GridPointSet points = to_grid(f, g.k);
  if (g.show) {
    emit(render_grid(points), g.output);
    return;
  }
  auto violation = grid_violation(points, g.a);
  GridPointSet pruned = column_prune(points, g.a);
  json j{{"grid", to_json(points)},
         {"a", g.a},
         {"violation", violation ? to_json(*violation) : json(nullptr)},
         {"pruned", to_json(pruned)},
         {"bound", lemma41_bound(g.k, g.a)},
         {"manifest",
          to_json(make_manifest("grid",
                                {{"input", g.input},
                                 {"k", std::to_string(g.k)},
                                 {"a", std::to_string(g.a)}},
                                g.input))}};
  emit(canonical_dump(j), g.output);
}

// extract -------------------------------------------------------------

struct ExtractArgs {
  std::string input;
  std::string method;
  std::string property;
  std::string p = "auto";
  std::uint64_t seed = 0;
  bool seeded = false;
  std::uint32_t trials = 50;
  std::string order = "given";
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_extract(ExtractArgs& a) {
  SetFamily f = read_family_file(a.input, a.max_universe);
  Property prop = parse_property(a.property);
  ExtractionResult r;
  if (a.method == "random-deletion") {
    const auto* bd = std::get_if<BdFree>(&prop);
    if (bd == nullptr) throw Error("random-deletion extracts bd:<d> properties");
    if (!a.seeded) a.seed = fresh_seed();
    double p = a.p == "auto" ? default_probability(f.size(), bd->d) : std::stod(a.p);
    r = random_deletion_bd_free(f, bd->d, p, a.seed, a.trials);
  } else if (a.method == "kleitman") {
    const auto* uf = std::get_if<AUnionFree>(&prop);
    if (uf == nullptr) throw Error("kleitman extracts uf:<a> properties");
    r = kleitman_extract(f, uf->a);
  } else if (a.method == "greedy") {
    GreedyOrder order = GreedyOrder::Given;
    if (a.order == "size-asc") order = GreedyOrder::SizeAscending;
    else if (a.order == "size-desc") order = GreedyOrder::SizeDescending;
    else if (a.order != "given") throw Error("unknown greedy order: " + a.order);
    r = greedy_extract(f, prop, order);
  } else {
    throw Error("unknown extraction method: " + a.method);
  }
  json j = to_json(r);
  j["manifest"] = to_json(make_manifest("extract",
                                        {{"input", a.input},
                                         {"method", a.method},
                                         {"property", a.property},
                                         {"p", a.p},
                                         {"trials", std::to_string(a.trials)},
                                         {"order", a.order}},
                                        a.input, a.seed, a.seeded || r.randomized));
  emit(canonical_dump(j), a.output);
}

// exact / exact-min ---------------------------------------------------

struct ExactArgs {
  std::string input;
  std::string property;
  std::uint64_t node_limit = 5'000'000;
  std::uint32_t max_universe = 4096;
  std::string output;
};

void run_exact(const ExactArgs& a) {
  SetFamily f = read_family_file(a.input, a.max_universe);
  SearchConfig cfg;
  cfg.node_limit = a.node_limit;
  OracleResult r = max_subfamily(f, parse_property(a.property), cfg);
  json j = to_json(r);
  j["manifest"] = to_json(make_manifest("exact",
                                        {{"input", a.input},
                                         {"property", a.property},
                                         {"node-limit", std::to_string(a.node_limit)}},
                                        a.input));
  emit(canonical_dump(j), a.output);
}

struct ExactMinArgs {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::string property;
  std::uint64_t budget = 1'000'000;
  std::string output;
};

void run_exact_min(const ExactMinArgs& a) {
  MinFamiliesResult r =
      min_over_families(a.m, a.n, parse_property(a.property), {}, a.budget);
  json j = to_json(r);
  j["manifest"] = to_json(make_manifest("exact-min",
                                        {{"m", std::to_string(a.m)},
                                         {"n", std::to_string(a.n)},
                                         {"property", a.property},
                                         {"budget", std::to_string(a.budget)}}));
  emit(canonical_dump(j), a.output);
}

// turan ---------------------------------------------------------------

struct TuranArgs {
  std::uint32_t k = 0;
  std::uint32_t d = 2;
  bool exact = false;
  bool bound = false;
  bool bijection = false;
  std::uint64_t node_limit = 5'000'000;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::uint32_t samples = 16;
  std::string output;
};

void run_turan(TuranArgs& a) {
  if (a.exact + a.bound + a.bijection != 1)
    throw Error("turan needs exactly one of --exact, --bound, --bijection");
  std::map<std::string, std::string> flags{{"k", std::to_string(a.k)},
                                           {"d", std::to_string(a.d)}};
  json j;
  if (a.exact) {
    flags["mode"] = "exact";
    MultipartiteHypergraph h = build_kdk(a.k, a.d);
    SearchConfig cfg;
    cfg.node_limit = a.node_limit;
    OracleResult r = ex_exact(h, cfg);
    j = json{{"edges", h.edge_count()},
             {"result", to_json(r)},
             {"turan_bound", turan_bound(a.k, a.d)}};
    if (a.d == 2) j["base_case_bound"] = base_case_bound(a.k);
    j["manifest"] = to_json(make_manifest("turan", flags));
  } else if (a.bound) {
    flags["mode"] = "bound";
    MultipartiteHypergraph h = build_kdk(a.k, a.d);
    j = json{{"edges", h.edge_count()},
             {"complete_copies", count_kd2_complete(h)},
             {"turan_bound", turan_bound(a.k, a.d)}};
    if (a.d == 2) j["base_case_bound"] = base_case_bound(a.k);
    j["manifest"] = to_json(make_manifest("turan", flags));
  } else {
    flags["mode"] = "bijection";
    flags["samples"] = std::to_string(a.samples);
    if (!a.seeded) a.seed = fresh_seed();
    BijectionReport r = family_hypergraph_bijection(a.k, a.d, a.seed, a.samples);
    j = to_json(r);
    j["manifest"] = to_json(make_manifest("turan", flags, "", a.seed, true));
  }
  emit(canonical_dump(j), a.output);
}

// bounds --------------------------------------------------------------

struct BoundsArgs {
  std::uint32_t d = 2;
  std::uint64_t m = 0;
  std::uint32_t a = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::string output;
};

void run_bounds(const BoundsArgs& b) {
  ExponentPair e = exponents(b.d);
  json bounds = json::array();
  auto push = [&bounds](const NamedBound& nb) { bounds.push_back(to_json(nb)); };
  if (b.m > 0 && b.d == 2) {
    auto [lo, hi] = b2_bounds(b.m);
    push(lo);
    push(hi);
  }
  if (b.m > 0 && b.a >= 2) {
    UnionFreeBounds ub = union_free_bounds(b.m, b.a);
    push(ub.kleitman_lower);
    push(ub.eq3_upper);
    push(ub.fls_lower);
    if (b.a >= 4)
      push({"geometric-refinement", geometric_refinement_bound(b.m, b.a), true, ""});
  }
  if (b.a >= 2 && b.k > 0 && b.q > 0)
    push({"eq4", static_cast<double>(eq4_bound(b.a, b.k, b.q)), false, ""});
  if (b.n > 0)
    push({"grs-reference", grs_reference(b.n, b.d), true,
          "order only, constant unknown"});
  json j{{"d", b.d},
         {"exponents",
          json{{"e", e.e.str()},
               {"e_value", e.e.value()},
               {"e_prime", e.e_prime.str()},
               {"e_prime_value", e.e_prime.value()}}},
         {"bounds", bounds}};
  std::map<std::string, std::string> flags{{"d", std::to_string(b.d)}};
  if (b.m > 0) flags["m"] = std::to_string(b.m);
  if (b.a > 0) flags["a"] = std::to_string(b.a);
  if (b.n > 0) flags["n"] = std::to_string(b.n);
  if (b.k > 0) flags["k"] = std::to_string(b.k);
  if (b.q > 0) flags["q"] = std::to_string(b.q);
  j["manifest"] = to_json(make_manifest("bounds", flags));
  emit(canonical_dump(j), b.output);
}

// report --------------------------------------------------------------

struct ReportArgs {
  std::string input;
  std::string output;
};

void run_report(const ReportArgs& a) {
  json j = json::parse(slurp(a.input));
  if (!j.contains("rows")) throw Error("report expects a bench table JSON");
  std::string csv = "family,m,method,size,bound,value,slack\n";
  for (const json& row : j["rows"]) {
    for (const json& b : row["bounds"]) {
      double value = b["value"].get<double>();
      double slack = value - row["size"].get<double>();
      csv += row["family"].get<std::string>() + ',' +
             std::to_string(row["m"].get<std::uint64_t>()) + ',' +
             row["method"].get<std::string>() + ',' +
             std::to_string(row["size"].get<std::uint32_t>()) + ',' +
             b["name"].get<std::string>() + ',' + json(value).dump() + ',' +
             json(slack).dump() + '\n';
    }
  }
  emit(csv, a.output);
}

// bench ---------------------------------------------------------------

struct BenchArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string format = "json";
  bool timing = false;
  std::string replay;
  std::string output;
};

int run_bench_cmd(BenchArgs& a) {
  BenchTable table;
  if (!a.replay.empty()) {
    json original = json::parse(slurp(a.replay));
    table = replay_bench(manifest_from_json(original.at("manifest")));
  } else {
    if (!a.seeded) a.seed = fresh_seed();
    table = run_bench(a.suite, a.seed, a.timing);
  }
  if (a.format == "csv") emit(bench_csv(table), a.output);
  else emit(canonical_dump(to_json(table)), a.output);
  if (a.timing) {
    for (const BenchRow& r : table.rows)
      std::cerr << r.family << " " << r.method << " " << r.property << ": "
                << r.elapsed_ms << " ms\n";
  }
  for (const BenchRow& r : table.rows)
    if (!r.error.empty()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite set family toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  GenerateArgs gen;
  auto* cgen = app.add_subcommand("generate", "emit a built-in family as text");
  cgen->add_option("--kind", gen.kind,
                   "chain-product|es|bd-extremal|leveled|geometric|co-singleton|power-set")
      ->required();
  cgen->add_option("--sizes", gen.sizes, "chain or level sizes")->delimiter(',');
  cgen->add_option("--k", gen.k, "");
  cgen->add_option("--d", gen.d, "");
  cgen->add_option("--q", gen.q, "");
  cgen->add_option("--a", gen.a, "");
  cgen->add_option("--m", gen.m, "");
  cgen->add_option("--n", gen.n, "");
  cgen->add_option("--max-universe", gen.max_universe, "");
  cgen->add_option("--output,-o", gen.output, "");
  cgen->callback([&] { run_generate(gen); });

  ValidateArgs val;
  auto* cval = app.add_subcommand("validate", "parse and summarize a family file");
  cval->add_option("--input,-i", val.input, "")->required();
  cval->add_option("--max-universe", val.max_universe, "");
  cval->add_option("--output,-o", val.output, "");
  cval->callback([&] { run_validate(val); });

  DetectArgs det;
  auto* cdet = app.add_subcommand("detect", "enumerate boolean algebra witnesses");
  cdet->add_option("--input,-i", det.input, "")->required();
  cdet->add_option("--d", det.d, "")->required();
  cdet->add_option("--limit", det.limit, "");
  cdet->add_flag("--strict-base", det.strict_base, "reject empty-base witnesses");
  cdet->add_option("--max-universe", det.max_universe, "");
  cdet->add_option("--output,-o", det.output, "");
  cdet->callback([&] { run_detect(det); });

  GridArgs grd;
  auto* cgrd = app.add_subcommand("grid", "grid view of an es-subfamily");
  cgrd->add_option("--input,-i", grd.input, "")->required();
  cgrd->add_option("--k", grd.k, "")->required();
  cgrd->add_option("--a", grd.a, "");
  cgrd->add_flag("--show", grd.show, "ASCII rendering instead of JSON");
  cgrd->add_option("--max-universe", grd.max_universe, "");
  cgrd->add_option("--output,-o", grd.output, "");
  cgrd->callback([&] { run_grid(grd); });

  ExtractArgs ext;
  auto* cext = app.add_subcommand("extract", "extract a property-free subfamily");
  cext->add_option("--input,-i", ext.input, "")->required();
  cext->add_option("--method", ext.method, "random-deletion|kleitman|greedy")->required();
  cext->add_option("--property", ext.property, "bd:<d>|uf:<a>")->required();
  cext->add_option("--p", ext.p, "keep probability, or auto");
  cext->add_option("--seed", ext.seed, "")->each([&](const std::string&) { ext.seeded = true; });
  cext->add_option("--trials", ext.trials, "");
  cext->add_option("--order", ext.order, "given|size-asc|size-desc");
  cext->add_option("--max-universe", ext.max_universe, "");
  cext->add_option("--output,-o", ext.output, "");
  cext->callback([&] { run_extract(ext); });

  ExactArgs exa;
  auto* cexa = app.add_subcommand("exact", "exact maximum property-free subfamily");
  cexa->add_option("--input,-i", exa.input, "")->required();
  cexa->add_option("--property", exa.property, "bd:<d>|uf:<a>|abuf:<a>,<b>")->required();
  cexa->add_option("--node-limit", exa.node_limit, "");
  cexa->add_option("--max-universe", exa.max_universe, "");
  cexa->add_option("--output,-o", exa.output, "");
  cexa->callback([&] { run_exact(exa); });

  ExactMinArgs exm;
  auto* cexm = app.add_subcommand("exact-min", "worst family over all m-member families in 2^[n]");
  cexm->add_option("--m", exm.m, "")->required();
  cexm->add_option("--n", exm.n, "")->required();
  cexm->add_option("--property", exm.property, "")->required();
  cexm->add_option("--budget", exm.budget, "");
  cexm->add_option("--output,-o", exm.output, "");
  cexm->callback([&] { run_exact_min(exm); });

  TuranArgs tur;
  auto* ctur = app.add_subcommand("turan", "multipartite hypergraph side");
  ctur->add_option("--k", tur.k, "")->required();
  ctur->add_option("--d", tur.d, "");
  ctur->add_flag("--exact", tur.exact, "");
  ctur->add_flag("--bound", tur.bound, "");
  ctur->add_flag("--bijection", tur.bijection, "");
  ctur->add_option("--node-limit", tur.node_limit, "");
  ctur->add_option("--seed", tur.seed, "")->each([&](const std::string&) { tur.seeded = true; });
  ctur->add_option("--samples", tur.samples, "");
  ctur->add_option("--output,-o", tur.output, "");
  ctur->callback([&] { run_turan(tur); });

  BoundsArgs bnd;
  auto* cbnd = app.add_subcommand("bounds", "theorem-level bounds for given parameters");
  cbnd->add_option("--d", bnd.d, "")->required();
  cbnd->add_option("--m", bnd.m, "");
  cbnd->add_option("--a", bnd.a, "");
  cbnd->add_option("--n", bnd.n, "");
  cbnd->add_option("--k", bnd.k, "");
  cbnd->add_option("--q", bnd.q, "");
  cbnd->add_option("--output,-o", bnd.output, "");
  cbnd->callback([&] { run_bounds(bnd); });

  ReportArgs rep;
  auto* crep = app.add_subcommand("report", "flatten a bench table against its bounds");
  crep->add_option("--input,-i", rep.input, "")->required();
  crep->add_option("--output,-o", rep.output, "");
  crep->callback([&] { run_report(rep); });

  BenchArgs ben;
  auto* cben = app.add_subcommand("bench", "run a measurement suite");
  cben->add_option("--suite", ben.suite, "b2-small|uf-es|all|none");
  cben->add_option("--seed", ben.seed, "")->each([&](const std::string&) { ben.seeded = true; });
  cben->add_option("--format", ben.format, "json|csv");
  cben->add_flag("--timing", ben.timing, "per-row wall time on stderr");
  cben->add_option("--replay", ben.replay, "re-run the manifest inside this table");
  cben->add_option("--output,-o", ben.output, "");
  cben->callback([&] { rc = run_bench_cmd(ben); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return rc;
}
