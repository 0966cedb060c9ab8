#pragma once

#include <cstdint>
#include <utility>

#include "hypvol/chains.hpp"

namespace hypvol {

enum class ApproxMetric { Displacement, OperatorNorm };

struct ApproxBudget {
  int ball_depth = 12;      // forward ball depth; pairs reach twice this
  long max_nodes = 2000000; // cap on enumerated words
};

// Request to approximate targets by words in a dense rank-2 representation.
struct ApproxRequest {
  FreeRepresentation rep; // rank 2
  double epsilon = 0.1;
  ApproxMetric metric = ApproxMetric::Displacement;
  H3Point basepoint{cplx(0.0, 0.0), 1.0};
  double probe_radius = 2.0;
  ApproxBudget budget;
  std::uint64_t seed = 0; // recorded for reproducibility
};

struct ApproxResult {
  Word word;
  double distance = 0.0;
  bool within_epsilon = false; // false: budget exceeded, best effort returned
  long nodes = 0;
};

// Sup over the four probe points {x, three points at probe_radius from x} of
// d(g.p, target.p); or min-over-sign max-entry distance of the canonical
// matrices.
double approx_metric(const ApproxRequest &req, const ProjectiveIsometry &g,
                     const ProjectiveIsometry &target);

// Deterministic search: breadth-first ball scan, then meet-in-the-middle
// composition u*v against a spatial hash of basepoint images.
ApproxResult approximate_element(const ApproxRequest &req,
                                 const ProjectiveIsometry &target);

struct TransferConfig {
  double epsilon = 0.5;
  // starting per-element tolerance; 0 picks epsilon / (4 ||Z||_1)
  double element_tolerance = 0.0;
  int max_retries = 6;
  ApproxRequest search; // epsilon overwritten per round
};

struct TransferReport {
  double input_norm = 0.0, input_boundary_norm = 0.0, input_eval = 0.0;
  std::vector<Word> substitution;
  double output_norm = 0.0, output_boundary_norm = 0.0, output_eval = 0.0;
  double deviation = 0.0; // |input_eval - output_eval|, recomputed
  double epsilon = 0.0;
  double element_tolerance = 0.0; // final round value
  int rounds = 0;
  bool success = false;
};

// Z |-> Z(eps): approximates every rep0 generator by a word in the dense
// representation, pushes the chain through the substitution and verifies
// |B(Z) - B(Z(eps))| < eps a posteriori, halving the element tolerance on
// failure.  Norm contractions are exact by construction.
std::pair<GroupChain, TransferReport>
transfer_chain(const Cocycle &B, const FreeRepresentation &rep0,
               const GroupChain &Z, const FreeRepresentation &dense,
               const TransferConfig &cfg);

} // namespace hypvol
