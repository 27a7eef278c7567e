#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Every named constant of the pipeline. The asymptotic separation chain
// between them cannot hold at desk scale; validate_parameters() audits it as
// a soft report while the delta/ell relation stays a hard gate.
struct ParameterSet {
  Vertex n = 499;
  double delta = 0.45;
  int C = 3;        // block size of the design
  int C_prime = 2;  // densifier clique size
  int ell = 5;      // minimum induced-cycle length
  double eta = 0.05;  // matching coverage deficiency
  double c = 0.06;    // pattern-size ratio (pattern has c*n vertices)

  double eps1 = 0.25, eps2 = 0.25, eps3 = 0.25;  // regularity tolerances
  int T1 = 24, T2 = 24, T3 = 24;                 // partition-size caps

  int q = 3;  // densifier family count
  int s = 2;  // biclique size in auxiliary colourings

  double mu = 0.02;     // regular-set size ratio
  double tau = 0.05;    // red density factor target
  double gamma = 0.25;  // density / upper-uniformity constant
  double rho = 0.67;    // certificate excess ratio (|B'| <= rho * C)
  double alpha = 0.75;  // case split: |V'| = alpha_caseII * n at desk scale

  // Probabilities; fill with derive_probabilities().
  double p = 0.0;
  double p_tilde = 0.0;
  double p_prime = 0.0;
  double p_tilde_prime = 0.0;
  double p_dprime = 0.0;
  double p_tilde_dprime = 0.0;
  int z = 0;  // layer count (achieved by the matching partition)

  // Knobs that only exist at desk scale.
  int regular_set_count = 21;  // the "20 + 1" set count for the endgame
  double chain_ratio = 10.0;   // each ">>" audited as a factor >= this
};

// p = n^{delta - 1/2}; p~ from p = 1-(1-p~)^{C(C-1)/2}; p' = log(n)/n;
// p~' from p' = 1-(1-p~')^{C^2}; p'' = 1-(1-p')^z; p~'' = 1-(1-p~')^z.
// All roots are closed-form and good to 1e-12 relative error. Throws
// parameter-infeasible if any value leaves [0,1].
void derive_probabilities(ParameterSet& params);

// Helper inversions, exposed for the samplers and tests.
double invert_all_present_probability(double p, std::int64_t edges_per_unit);
double union_probability(double per_layer, int layers);

struct ChainLink {
  std::string larger;
  std::string smaller;
  double ratio;
  bool pass;
};

struct ParameterReport {
  bool delta_ell_ok = false;      // hard: delta > 1/(4*ell - 6)
  double delta_ell_threshold = 0.0;
  std::vector<ChainLink> chain;   // soft: the separation chain at chain_ratio
  bool chain_ok = false;
  bool probabilities_consistent = false;  // defining equations re-checked
  std::vector<std::string> notes;

  bool hard_ok() const { return delta_ell_ok && probabilities_consistent; }
};

ParameterReport validate_parameters(const ParameterSet& params);

// Plain-text key=value codec; unknown keys are rejected.
ParameterSet parse_parameters(const std::string& text);
std::string serialize_parameters(const ParameterSet& params);

}  // namespace ramsey
