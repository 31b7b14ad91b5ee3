// Command-line front end: analyze a single graph, run the verification
// campaigns, or emit graphs from the built-in families as edge-list files.
//
// Exit codes: 0 all checks passed, 1 a violation was found, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "edgeideals/campaigns.hpp"
#include "edgeideals/errors.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/graph.hpp"

namespace ei = edgeideals;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ei::InputError("cannot write file: " + path);
  out << content;
}

void print_campaign_summary(const ei::VerificationReport& report) {
  std::printf("campaign %s\n", report.campaign.c_str());
  std::printf("family   %s\n", report.family.c_str());
  std::printf("field    %s\n", report.field.to_string().c_str());
  std::printf("graphs   %llu\n", static_cast<unsigned long long>(report.graphs_checked));
  std::printf("checks   %llu\n", static_cast<unsigned long long>(report.checks_run));
  std::printf("runtime  %.2fs\n", report.runtime_seconds);
  if (report.all_agree()) {
    std::printf("result   PASS (no violations)\n");
  } else {
    std::printf("result   FAIL (%zu violations)\n", report.divergences.size());
    for (const std::string& d : report.divergences) std::printf("violation %s\n", d.c_str());
  }
}

int emit_family(const std::string& family, const std::vector<std::string>& params,
                std::int64_t index, std::int64_t count, const std::string& out_dir) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw ei::InputError("gen " + family + ": expected " + std::to_string(k) + " parameters");
  };
  auto as_int = [&](std::size_t i) {
    try {
      return std::stoi(params.at(i));
    } catch (const std::exception&) {
      throw ei::InputError("gen: bad integer parameter '" + params.at(i) + "'");
    }
  };
  auto as_double = [&](std::size_t i) {
    try {
      return std::stod(params.at(i));
    } catch (const std::exception&) {
      throw ei::InputError("gen: bad numeric parameter '" + params.at(i) + "'");
    }
  };
  auto as_u64 = [&](std::size_t i) {
    try {
      return static_cast<std::uint64_t>(std::stoull(params.at(i)));
    } catch (const std::exception&) {
      throw ei::InputError("gen: bad seed parameter '" + params.at(i) + "'");
    }
  };

  // The family is exposed as (size, graph-at-index); deterministic families
  // report their exact size, seeded ones are unbounded streams.
  std::function<ei::Graph(std::uint64_t)> at;
  std::uint64_t family_size = 0;
  bool unbounded = false;

  if (family == "path") {
    need(1);
    at = [n = as_int(0)](std::uint64_t) { return ei::path_graph(n); };
    family_size = 1;
  } else if (family == "cycle") {
    need(1);
    at = [n = as_int(0)](std::uint64_t) { return ei::cycle_graph(n); };
    family_size = 1;
  } else if (family == "star") {
    need(1);
    at = [n = as_int(0)](std::uint64_t) { return ei::star_graph(n); };
    family_size = 1;
  } else if (family == "complete_bipartite") {
    need(2);
    at = [a = as_int(0), b = as_int(1)](std::uint64_t) { return ei::complete_bipartite(a, b); };
    family_size = 1;
  } else if (family == "all_bipartite") {
    need(2);
    ei::AllBipartite fam(as_int(0), as_int(1));
    family_size = fam.size();
    at = [fam](std::uint64_t i) { return fam.at(i); };
  } else if (family == "all_graphs") {
    need(1);
    ei::AllGraphs fam(as_int(0));
    family_size = fam.size();
    at = [fam](std::uint64_t i) { return fam.at(i); };
  } else if (family == "random_bipartite") {
    need(4);
    int a = as_int(0), b = as_int(1);
    double p = as_double(2);
    std::uint64_t seed = as_u64(3);
    at = [=](std::uint64_t i) { return ei::random_bipartite(a, b, p, seed, i); };
    unbounded = true;
  } else if (family == "random_tree") {
    need(2);
    int n = as_int(0);
    std::uint64_t seed = as_u64(1);
    at = [=](std::uint64_t i) { return ei::random_tree(n, seed, i); };
    unbounded = true;
  } else {
    throw ei::InputError("gen: unknown family '" + family + "'");
  }

  if (index >= 0) {
    if (!unbounded && static_cast<std::uint64_t>(index) >= family_size)
      throw ei::InputError("gen: index out of range");
    std::fputs(ei::write_edge_list(at(static_cast<std::uint64_t>(index))).c_str(), stdout);
    return kExitOk;
  }

  std::uint64_t emit = unbounded ? static_cast<std::uint64_t>(count > 0 ? count : 1)
                                 : (count > 0 ? std::min<std::uint64_t>(
                                                    static_cast<std::uint64_t>(count), family_size)
                                              : family_size);
  if (out_dir.empty()) {
    if (emit != 1)
      throw ei::InputError(
          "gen: emitting several graphs needs --out <dir> (or pick one with --index)");
    std::fputs(ei::write_edge_list(at(0)).c_str(), stdout);
    return kExitOk;
  }
  std::filesystem::create_directories(out_dir);
  for (std::uint64_t i = 0; i < emit; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "g%06llu.el", static_cast<unsigned long long>(i));
    write_file(out_dir + "/" + name, ei::write_edge_list(at(i)));
  }
  std::printf("wrote %llu file(s) to %s\n", static_cast<unsigned long long>(emit),
              out_dir.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge ideal invariants and theorem-verification campaigns"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_file, analyze_field = "q", analyze_report;
  bool analyze_recheck = false;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one graph from an edge-list file");
  analyze->add_option("file", analyze_file, "edge-list file")->required();
  analyze->add_option("--field", analyze_field, "coefficient field: q or p:<prime>");
  analyze->add_flag("--recheck", analyze_recheck, "replay emitted certificates");
  analyze->add_option("--report", analyze_report, "also write the text report to a file");

  // verify thm1|thm2|structure
  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->require_subcommand(1);

  int thm1_max_part = 3;
  std::string thm1_field = "q", thm1_report;
  int thm1_threads = 0;
  CLI::App* thm1 = verify->add_subcommand(
      "thm1", "bipartite equivalence: SCM = shellable = vertex decomposable");
  thm1->add_option("--max-part", thm1_max_part, "largest bipartition part (<= 4)")->required();
  thm1->add_option("--field", thm1_field, "coefficient field: q or p:<prime>");
  thm1->add_option("--report", thm1_report, "write the machine-readable report here");
  thm1->add_option("--threads", thm1_threads, "worker threads (0 = all cores)");

  int thm2_max_part = 3, thm2_trees = 0, thm2_threads = 0;
  std::string thm2_field = "q", thm2_report;
  CLI::App* thm2 =
      verify->add_subcommand("thm2", "regularity of SCM bipartite graphs: reg(R/I(G)) = a(G)");
  thm2->add_option("--max-part", thm2_max_part, "largest bipartition part (<= 4)")->required();
  thm2->add_option("--trees", thm2_trees, "also check all trees on up to this many vertices (<= 9)");
  thm2->add_option("--field", thm2_field, "coefficient field: q or p:<prime>");
  thm2->add_option("--report", thm2_report, "write the machine-readable report here");
  thm2->add_option("--threads", thm2_threads, "worker threads (0 = all cores)");

  int structure_max_n = 6, structure_sample = 0, structure_threads = 0;
  std::uint64_t structure_seed = 0;
  std::string structure_field = "q", structure_report;
  CLI::App* structure = verify->add_subcommand(
      "structure", "structural checks: degree-one vertices, deletions, duality, bounds");
  structure->add_option("--max-n", structure_max_n, "largest vertex count (<= 8)")->required();
  structure->add_option("--sample", structure_sample, "random graphs per n beyond 6");
  structure->add_option("--seed", structure_seed, "random seed");
  structure->add_option("--field", structure_field, "coefficient field: q or p:<prime>");
  structure->add_option("--report", structure_report, "write the machine-readable report here");
  structure->add_option("--threads", structure_threads, "worker threads (0 = all cores)");

  // gen
  std::string gen_family, gen_out;
  std::vector<std::string> gen_params;
  std::int64_t gen_index = -1, gen_count = -1;
  CLI::App* gen = app.add_subcommand("gen", "emit graphs from a family as edge-list files");
  gen->add_option("family", gen_family,
                  "path|cycle|star|complete_bipartite|all_bipartite|all_graphs|"
                  "random_bipartite|random_tree")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--index", gen_index, "emit only the graph at this index (to stdout)");
  gen->add_option("--count", gen_count, "how many graphs to emit");
  gen->add_option("--out", gen_out, "directory for emitted files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      ei::Graph g = ei::read_edge_list_file(analyze_file);
      ei::AnalyzeResult result =
          ei::analyze_graph(g, ei::FieldSpec::parse(analyze_field), analyze_recheck);
      std::string text = result.to_text();
      std::fputs(text.c_str(), stdout);
      if (!analyze_report.empty()) write_file(analyze_report, text);
      return (analyze_recheck && !result.recheck_passed) ? kExitViolation : kExitOk;
    }
    if (*verify) {
      ei::VerificationReport report;
      if (*thm1) {
        report = ei::run_thm1(thm1_max_part, ei::FieldSpec::parse(thm1_field), thm1_threads);
        if (!thm1_report.empty()) write_file(thm1_report, ei::write_report(report));
      } else if (*thm2) {
        report = ei::run_thm2(thm2_max_part, ei::FieldSpec::parse(thm2_field), thm2_trees,
                              thm2_threads);
        if (!thm2_report.empty()) write_file(thm2_report, ei::write_report(report));
      } else {
        report = ei::run_structure(structure_max_n, structure_sample, structure_seed,
                                   ei::FieldSpec::parse(structure_field), structure_threads);
        if (!structure_report.empty()) write_file(structure_report, ei::write_report(report));
      }
      print_campaign_summary(report);
      return report.all_agree() ? kExitOk : kExitViolation;
    }
    if (*gen) return emit_family(gen_family, gen_params, gen_index, gen_count, gen_out);
  } catch (const ei::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitViolation;
  }
  return kExitUsage;
}
