#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideals/decomposition.hpp"
#include "edgeideals/field.hpp"
#include "edgeideals/graph.hpp"
#include "edgeideals/homology.hpp"

namespace edgeideals {

/// Runs body(0..count-1) on a bounded worker pool. Iterations must be
/// independent; the first exception is rethrown after all workers stop.
void parallel_for(std::uint64_t count, int threads,
                  const std::function<void(std::uint64_t)>& body);

/// pd of the ideal itself: pd(I) = pd(R/I) - 1 for nonzero proper ideals.
/// The unit ideal is the free module R, so its pd is 0; the zero ideal is
/// rejected.
int ideal_projective_dimension(const SquareFreeMonomialIdeal& ideal, const FieldSpec& field,
                               AlgebraCaches* caches = nullptr);

struct GraphRecord {
  std::string id;
  std::vector<std::pair<std::string, std::string>> fields;
  bool ok = true;
};

/// Outcome of a verification campaign. Serialized reports are deterministic
/// functions of (command, arguments, seed); the runtime is reported on the
/// human summary only, never in the file, so reruns stay byte-identical.
struct VerificationReport {
  std::string campaign;
  std::string family;
  FieldSpec field;
  std::uint64_t seed = 0;
  std::vector<GraphRecord> records;
  std::vector<std::string> divergences;
  std::uint64_t graphs_checked = 0;
  std::uint64_t checks_run = 0;
  double runtime_seconds = 0.0;

  bool all_agree() const { return divergences.empty(); }
};

std::string write_report(const VerificationReport& report);

/// Over all labeled bipartite graphs with both parts at most max_part
/// (max_part <= 4), decides sequential Cohen-Macaulayness, shellability and
/// vertex decomposability by their three independent oracles and records
/// every disagreement. For bipartite graphs the three are predicted to
/// coincide.
VerificationReport run_thm1(int max_part, const FieldSpec& field, int threads = 0);

/// Same family: every sequentially Cohen-Macaulay graph must satisfy
/// reg(R/I(G)) = a(G) exactly; non-SCM graphs are checked against the lower
/// bound reg >= a(G) and strict-inequality exhibits are logged. With
/// trees_max_n > 0 additionally checks every tree on up to trees_max_n
/// vertices (exhaustive over Pruefer sequences, deduplicated up to
/// isomorphism): trees are SCM and satisfy reg = a(G).
VerificationReport run_thm2(int max_part, const FieldSpec& field, int trees_max_n = 0,
                            int threads = 0);

/// Structural checks over all graphs on up to min(6, max_n) vertices plus
/// `sample` seeded random graphs for each n in 7..max_n (max_n <= 8):
///   (a) an SCM bipartite graph with an edge has a degree-one vertex;
///   (b) closed-neighborhood deletion preserves SCM, for every vertex;
///   (c) the cover-ideal splitting identities hold at every degree-one vertex;
///   (d) pd(I(G)^v) = reg(R/I(G));
///   (e) reg(R/I(G)) >= a(G);
///   (f) vertex decomposable => shellable => SCM.
VerificationReport run_structure(int max_n, int sample, std::uint64_t seed,
                                 const FieldSpec& field, int threads = 0);

struct AnalyzeResult {
  FieldSpec field;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<Bipartition> bipartition;
  std::optional<int> degree_one;
  bool unmixed = false;
  int a_invariant = 0;
  int matching_number = 0;
  std::vector<VertexSet> minimal_covers;
  std::optional<std::string> vd_certificate;
  std::optional<std::string> shelling_certificate;
  bool scm = false;
  bool cm = false;
  BettiTable betti;
  int regularity = 0;
  int cover_pd = 0;
  bool recheck_requested = false;
  bool recheck_passed = true;

  std::string to_text() const;
};

AnalyzeResult analyze_graph(const Graph& g, const FieldSpec& field, bool recheck);

}  // namespace edgeideals
