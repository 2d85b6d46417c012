#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcl/measure/operators.hpp"

namespace mcl {

/// Per-genus data shared by every multiplicity bound.
struct GraphRecord {
  StableGraph graph;  // canonical representative
  std::string canonical;
  std::int64_t aut = 0;
  ZProfile profile;
};

/// All stable graphs of genus g with their Z-profiles, in enumeration
/// order; the result does not depend on `threads`.
std::vector<GraphRecord> build_graph_records(int genus, int threads = 1);
/// Memoized build_graph_records, kept for the life of the process.
const std::vector<GraphRecord>& graph_records(int genus, int threads = 1);

struct MeasureEntry {
  StableGraph graph;
  std::string canonical;
  std::int64_t aut = 0;
  PiScaled z;            // Z_m(F_Gamma)
  PiScaled weight;       // z / aut
  Rational probability;  // weight / total_mass
};

/// At m = inf every weight is rational * pi^(6g-6), so probabilities stay exact.
struct MulticurveMeasure {
  int genus = 0;
  MultBound bound = MultBound::infinity();
  std::vector<MeasureEntry> entries;
  PiScaled total_mass;  // (6g-6)! b_{g,m}

  PiScaled b() const;
};

MulticurveMeasure build_measure(int genus, const MultBound& m, int threads = 1);

/// b_{g,m} = (1/(6g-6)!) sum_Gamma Z_m(F_Gamma) / |Aut Gamma|.
PiScaled total_mass_b(int genus, const MultBound& m, int threads = 1);

/// Largest k with k <= kappa log(6g-6) / 2, capped at g.
int truncation_k_max(int genus, double kappa);

/// Z_m(F_{Gamma_{g,k}}) from the c~ coefficients: A_{g,k} sum_j c~(j) prod zeta_m(2j_i)/(2j_i).
PiScaled single_vertex_z(int genus, int k, const MultBound& m);

/// b~_{g,m,kappa}: the b sum restricted to Gamma_{g,k}, k <= truncation_k_max.
PiScaled truncated_mass_b(int genus, const MultBound& m, double kappa);

/// (1/pi) / ((6g-6) (4g-4)!) * sqrt(m/(m+1)) * (4/3)^(4g-4), and its log.
double mass_asymptote(int genus, const MultBound& m);
double log_mass_asymptote(int genus, const MultBound& m);

/// CSV with columns canonical_graph,aut,Zm,weight,probability.
std::string weights_csv(const MulticurveMeasure& measure);

}  // namespace mcl
