#include "edgeideals/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "edgeideals/errors.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/ideals.hpp"
#include "edgeideals/invariants.hpp"
#include "edgeideals/simplicial_complex.hpp"

namespace edgeideals {

void parallel_for(std::uint64_t count, int threads,
                  const std::function<void(std::uint64_t)>& body) {
  if (count == 0) return;
  unsigned int workers = threads > 0 ? static_cast<unsigned int>(threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned int>(
      std::min<std::uint64_t>(workers, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&]() {
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error) return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

int ideal_projective_dimension(const SquareFreeMonomialIdeal& ideal, const FieldSpec& field,
                               AlgebraCaches* caches) {
  if (ideal.is_zero()) throw InputError("ideal_projective_dimension: zero ideal");
  if (ideal.is_unit()) return 0;
  return projective_dimension(hochster_betti(ideal, field, caches)) - 1;
}

namespace {

std::string bool01(bool b) { return b ? "1" : "0"; }

std::string edges_to_string(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    if (!out.empty()) out += ",";
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void add_divergences_in_order(VerificationReport& report) {
  for (const GraphRecord& r : report.records)
    if (!r.ok) report.divergences.push_back(r.id);
}

}  // namespace

std::string write_report(const VerificationReport& report) {
  std::string out;
  out += "report " + report.campaign + "\n";
  out += "family " + report.family + "\n";
  out += "field " + report.field.to_string() + "\n";
  out += "seed " + std::to_string(report.seed) + "\n";
  for (const GraphRecord& r : report.records) {
    out += "\ngraph " + r.id + "\n";
    for (const auto& [key, value] : r.fields) out += key + " " + value + "\n";
  }
  out += "\nsummary\n";
  out += "graphs " + std::to_string(report.graphs_checked) + "\n";
  out += "checks " + std::to_string(report.checks_run) + "\n";
  out += "violations " + std::to_string(report.divergences.size()) + "\n";
  for (const std::string& d : report.divergences) out += "violation " + d + "\n";
  out += "all_agree " + bool01(report.all_agree()) + "\n";
  return out;
}

namespace {

struct BipartiteShape {
  int a = 0, b = 0;
  std::uint64_t offset = 0;  // global index of this shape's first graph
  std::uint64_t count = 0;
};

std::vector<BipartiteShape> bipartite_shapes(int max_part) {
  if (max_part < 1 || max_part > 4)
    throw InputError("verify: max_part must be between 1 and 4");
  std::vector<BipartiteShape> shapes;
  std::uint64_t offset = 0;
  for (int a = 1; a <= max_part; ++a)
    for (int b = a; b <= max_part; ++b) {
      BipartiteShape s;
      s.a = a;
      s.b = b;
      s.offset = offset;
      s.count = AllBipartite(a, b).size();
      offset += s.count;
      shapes.push_back(s);
    }
  return shapes;
}

struct ShapeGraph {
  Graph graph;
  std::string id;
};

ShapeGraph bipartite_graph_at(const std::vector<BipartiteShape>& shapes, std::uint64_t index) {
  for (const BipartiteShape& s : shapes) {
    if (index < s.offset + s.count) {
      std::uint64_t local = index - s.offset;
      ShapeGraph out;
      out.graph = AllBipartite(s.a, s.b).at(local);
      out.id = "bip" + std::to_string(s.a) + "x" + std::to_string(s.b) + "#" +
               std::to_string(local);
      return out;
    }
  }
  throw InputError("bipartite family: index out of range");
}

}  // namespace

VerificationReport run_thm1(int max_part, const FieldSpec& field, int threads) {
  Timer timer;
  std::vector<BipartiteShape> shapes = bipartite_shapes(max_part);
  std::uint64_t total = shapes.back().offset + shapes.back().count;

  VerificationReport report;
  report.campaign = "thm1";
  report.family = "all_bipartite parts<=" + std::to_string(max_part);
  report.field = field;
  report.records.resize(total);

  AlgebraCaches algebra;
  DecompositionCaches decomposition;

  parallel_for(total, threads, [&](std::uint64_t index) {
    ShapeGraph sg = bipartite_graph_at(shapes, index);
    const Graph& g = sg.graph;
    SimplicialComplex complex = independence_complex(g);

    bool scm = is_sequentially_cm(complex, field, &algebra);
    auto shelling = is_shellable(complex, &decomposition);
    auto vd = is_vd_graph(g, &decomposition);

    GraphRecord rec;
    rec.id = sg.id;
    rec.fields.emplace_back("n", std::to_string(g.vertex_count()));
    rec.fields.emplace_back("edges", edges_to_string(g));
    rec.fields.emplace_back("scm", bool01(scm));
    rec.fields.emplace_back("shellable", bool01(shelling.has_value()));
    rec.fields.emplace_back("vd", bool01(vd.has_value()));
    if (vd)
      rec.fields.emplace_back("vd_cert", certificate_digest(write_certificate(*vd)));
    if (shelling)
      rec.fields.emplace_back("shelling_cert",
                              certificate_digest(write_certificate(*shelling)));
    rec.ok = (scm == shelling.has_value()) && (scm == vd.has_value());
    rec.fields.emplace_back("agree", bool01(rec.ok));
    report.records[index] = std::move(rec);
  });

  report.graphs_checked = total;
  report.checks_run = total * 3;
  add_divergences_in_order(report);
  report.runtime_seconds = timer.seconds();
  return report;
}


VerificationReport run_thm2(int max_part, const FieldSpec& field, int trees_max_n, int threads) {
  Timer timer;
  if (trees_max_n < 0 || trees_max_n > 9)
    throw InputError("verify: trees_max_n must be between 0 and 9");
  std::vector<BipartiteShape> shapes = bipartite_shapes(max_part);
  std::uint64_t total = shapes.back().offset + shapes.back().count;

  VerificationReport report;
  report.campaign = "thm2";
  report.family = "all_bipartite parts<=" + std::to_string(max_part);
  if (trees_max_n > 0) report.family += " + all_trees n<=" + std::to_string(trees_max_n);
  report.field = field;

  AlgebraCaches algebra;

  std::vector<GraphRecord> bip_records(total);
  parallel_for(total, threads, [&](std::uint64_t index) {
    ShapeGraph sg = bipartite_graph_at(shapes, index);
    const Graph& g = sg.graph;
    bool scm = is_sequentially_cm(independence_complex(g), field, &algebra);
    int reg = regularity(hochster_betti(edge_ideal(g), field, &algebra));
    int a = a_invariant(g);

    GraphRecord rec;
    rec.id = sg.id;
    rec.fields.emplace_back("n", std::to_string(g.vertex_count()));
    rec.fields.emplace_back("edges", edges_to_string(g));
    rec.fields.emplace_back("scm", bool01(scm));
    rec.fields.emplace_back("reg", std::to_string(reg));
    rec.fields.emplace_back("a", std::to_string(a));
    if (scm) {
      rec.ok = (reg == a);
    } else {
      rec.ok = (reg >= a);
      // Mixed non-SCM graphs with reg > a are the open-question exhibits.
      if (reg > a) rec.fields.emplace_back("exhibit", "reg-a=" + std::to_string(reg - a));
    }
    rec.fields.emplace_back("agree", bool01(rec.ok));
    bip_records[index] = std::move(rec);
  });
  report.records = std::move(bip_records);
  report.graphs_checked = total;
  report.checks_run = total;

  if (trees_max_n > 0) {
    for (int n = 1; n <= trees_max_n; ++n) {
      auto reps = tree_representatives(n);
      std::vector<GraphRecord> tree_records(reps.size());
      parallel_for(reps.size(), threads, [&](std::uint64_t idx) {
        const Graph& t = reps[idx].first;
        bool scm = is_sequentially_cm(independence_complex(t), field, &algebra);
        int reg = regularity(hochster_betti(edge_ideal(t), field, &algebra));
        int a = a_invariant(t);
        GraphRecord rec;
        rec.id = "tree" + std::to_string(n) + "#" + std::to_string(reps[idx].second);
        rec.fields.emplace_back("n", std::to_string(n));
        rec.fields.emplace_back("edges", edges_to_string(t));
        rec.fields.emplace_back("scm", bool01(scm));
        rec.fields.emplace_back("reg", std::to_string(reg));
        rec.fields.emplace_back("a", std::to_string(a));
        rec.ok = scm && reg == a;
        rec.fields.emplace_back("agree", bool01(rec.ok));
        tree_records[idx] = std::move(rec);
      });
      for (auto& rec : tree_records) report.records.push_back(std::move(rec));
      report.graphs_checked += AllTrees(n).size();
      report.checks_run += reps.size() * 2;
    }
  }

  add_divergences_in_order(report);
  report.runtime_seconds = timer.seconds();
  return report;
}

VerificationReport run_structure(int max_n, int sample, std::uint64_t seed,
                                 const FieldSpec& field, int threads) {
  Timer timer;
  if (max_n < 1 || max_n > 8) throw InputError("verify: max_n must be between 1 and 8");
  if (sample < 0) throw InputError("verify: sample must be non-negative");

  VerificationReport report;
  report.campaign = "structure";
  report.family = "all_graphs n<=" + std::to_string(std::min(max_n, 6));
  if (max_n > 6)
    report.family += " + random n<=" + std::to_string(max_n) + " sample " +
                     std::to_string(sample);
  report.field = field;
  report.seed = seed;

  struct Job {
    Graph graph;
    std::string id;
  };
  std::vector<Job> jobs;
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    AllGraphs family(n);
    for (std::uint64_t i = 0; i < family.size(); ++i)
      jobs.push_back({family.at(i), "g" + std::to_string(n) + "#" + std::to_string(i)});
  }
  for (int n = 7; n <= max_n; ++n)
    for (int i = 0; i < sample; ++i)
      jobs.push_back({random_graph(n, 0.5, seed, static_cast<std::uint64_t>(n) << 32 | i),
                      "r" + std::to_string(n) + "#" + std::to_string(i)});

  AlgebraCaches algebra;
  DecompositionCaches decomposition;
  report.records.resize(jobs.size());
  std::atomic<std::uint64_t> checks{0};

  parallel_for(jobs.size(), threads, [&](std::uint64_t index) {
    const Graph& g = jobs[index].graph;
    SimplicialComplex complex = independence_complex(g);
    std::uint64_t local_checks = 0;

    GraphRecord rec;
    rec.id = jobs[index].id;
    rec.fields.emplace_back("n", std::to_string(g.vertex_count()));
    rec.fields.emplace_back("edges", edges_to_string(g));
    std::vector<std::string> failures;

    bool scm = is_sequentially_cm(complex, field, &algebra);
    bool bipartite = g.is_bipartite();
    rec.fields.emplace_back("scm", bool01(scm));
    rec.fields.emplace_back("bipartite", bool01(bipartite));

    // (a) SCM bipartite graphs with an edge have a degree-one vertex.
    if (scm && bipartite && g.edge_count() > 0) {
      ++local_checks;
      if (!g.degree_one_vertex()) failures.push_back("degree_one_missing");
    }

    // (b) closed-neighborhood deletion preserves SCM.
    if (scm) {
      for (int x : g.labels()) {
        ++local_checks;
        if (!is_sequentially_cm(independence_complex(g.closed_neighborhood_delete(x)), field,
                                &algebra)) {
          failures.push_back("cn_delete_breaks_scm@" + std::to_string(x));
          break;
        }
      }
    }

    // (c) cover-ideal splitting identities at every degree-one vertex.
    for (int x : g.labels()) {
      if (g.degree(x) != 1) continue;
      ++local_checks;
      CoverIdealSplitting split = cover_ideal_splitting(g, x);
      if (!split.claim1_holds) failures.push_back("claim1@" + std::to_string(x));
      if (!split.claim2_holds) failures.push_back("claim2@" + std::to_string(x));
    }

    // (d) duality: pd of the cover ideal equals reg of the edge-ideal quotient.
    int reg = regularity(hochster_betti(edge_ideal(g), field, &algebra));
    int cover_pd = ideal_projective_dimension(cover_ideal(g), field, &algebra);
    ++local_checks;
    rec.fields.emplace_back("reg", std::to_string(reg));
    rec.fields.emplace_back("cover_pd", std::to_string(cover_pd));
    if (cover_pd != reg) failures.push_back("terai");

    // (e) lower bound reg >= a.
    int a = a_invariant(g);
    ++local_checks;
    rec.fields.emplace_back("a", std::to_string(a));
    if (reg < a) failures.push_back("katzman");

    // (f) vertex decomposable => shellable => SCM.
    auto vd = is_vd_graph(g, &decomposition);
    auto shelling = is_shellable(complex, &decomposition);
    ++local_checks;
    rec.fields.emplace_back("vd", bool01(vd.has_value()));
    rec.fields.emplace_back("shellable", bool01(shelling.has_value()));
    if (vd)
      rec.fields.emplace_back("vd_cert", certificate_digest(write_certificate(*vd)));
    if (shelling)
      rec.fields.emplace_back("shelling_cert",
                              certificate_digest(write_certificate(*shelling)));
    if (vd && !shelling) failures.push_back("vd_not_shellable");
    if (shelling && !scm) failures.push_back("shellable_not_scm");

    rec.ok = failures.empty();
    if (!failures.empty()) {
      std::string joined;
      for (const std::string& f : failures) {
        if (!joined.empty()) joined += ",";
        joined += f;
      }
      rec.fields.emplace_back("failures", joined);
    }
    rec.fields.emplace_back("agree", bool01(rec.ok));
    checks += local_checks;
    report.records[index] = std::move(rec);
  });

  report.graphs_checked = jobs.size();
  report.checks_run = checks.load();
  add_divergences_in_order(report);
  report.runtime_seconds = timer.seconds();
  return report;
}

AnalyzeResult analyze_graph(const Graph& g, const FieldSpec& field, bool recheck) {
  AlgebraCaches algebra;
  DecompositionCaches decomposition;
  SimplicialComplex complex = independence_complex(g);

  AnalyzeResult result;
  result.field = field;
  result.vertex_count = g.vertex_count();
  result.edges = g.edges();
  result.bipartition = g.bipartition();
  result.degree_one = g.degree_one_vertex();
  result.unmixed = is_unmixed(g);
  result.a_invariant = a_invariant(g);
  result.matching_number = matching_number(g);
  result.minimal_covers = minimal_vertex_covers(g);

  auto vd = is_vd_graph(g, &decomposition);
  auto shelling = is_shellable(complex, &decomposition);
  if (vd) result.vd_certificate = write_certificate(*vd);
  if (shelling) result.shelling_certificate = write_certificate(*shelling);
  result.scm = is_sequentially_cm(complex, field, &algebra);
  result.cm = is_cohen_macaulay(complex, field, &algebra);
  result.betti = hochster_betti(edge_ideal(g), field, &algebra);
  result.regularity = edgeideals::regularity(result.betti);
  result.cover_pd = ideal_projective_dimension(cover_ideal(g), field, &algebra);

  result.recheck_requested = recheck;
  if (recheck) {
    if (vd && !verify_certificate(complex, *vd)) result.recheck_passed = false;
    if (shelling && !verify_certificate(complex, *shelling)) result.recheck_passed = false;
  }
  return result;
}

std::string AnalyzeResult::to_text() const {
  std::string out;
  out += "n " + std::to_string(vertex_count) + "\n";
  std::string edge_text;
  for (const auto& [u, v] : edges) {
    if (!edge_text.empty()) edge_text += ",";
    edge_text += std::to_string(u) + "-" + std::to_string(v);
  }
  out += "edges " + (edge_text.empty() ? "-" : edge_text) + "\n";
  out += "field " + field.to_string() + "\n";
  out += "bipartite " + std::string(bipartition ? "1" : "0") + "\n";
  if (bipartition)
    out += "bipartition " + set_to_string(bipartition->side_one) + " " +
           set_to_string(bipartition->side_two) + "\n";
  out += "degree_one " + (degree_one ? std::to_string(*degree_one) : std::string("-")) + "\n";
  out += "unmixed " + std::string(unmixed ? "1" : "0") + "\n";
  out += "a " + std::to_string(a_invariant) + "\n";
  out += "matching " + std::to_string(matching_number) + "\n";
  std::string covers;
  for (VertexSet c : minimal_covers) {
    if (!covers.empty()) covers += " ";
    covers += set_to_string(c);
  }
  out += "min_covers " + (covers.empty() ? "-" : covers) + "\n";
  out += "vd " + std::string(vd_certificate ? "1" : "0") + "\n";
  if (vd_certificate) out += "vd_cert " + *vd_certificate + "\n";
  out += "shellable " + std::string(shelling_certificate ? "1" : "0") + "\n";
  if (shelling_certificate) out += "shelling_cert " + *shelling_certificate + "\n";
  out += "scm " + std::string(scm ? "1" : "0") + "\n";
  out += "cm " + std::string(cm ? "1" : "0") + "\n";
  out += "reg " + std::to_string(regularity) + "\n";
  out += "pd_cover_ideal " + std::to_string(cover_pd) + "\n";
  std::string betti_text = write_betti_table(betti);
  out += betti_text;
  if (recheck_requested) out += "recheck " + std::string(recheck_passed ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace edgeideals
