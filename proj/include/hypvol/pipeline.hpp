#pragma once

#include "hypvol/approx.hpp"
#include "hypvol/representations.hpp"

namespace hypvol {

// Chain on a free group whose pushforward hits a target class, together with
// the boundary-norm budget K.
struct FreeApproximation {
  int rank = 0;
  GroupChain chain{2};
  Coeff boundary_bound = 0; // K, with ||dZ||_1 <= K exactly
  std::string target;
};

// Degree-2 chain over F_{2g} triangulating the regular 4g-gon by the fan
// from one vertex: ||Z||_1 = 4g-2 and ||dZ||_1 = 2 exactly; evaluates to the
// polygon area 4pi(g-1) under the Fuchsian representation.
FreeApproximation surface_chain(int g);
// Same with the fan rooted at another polygon vertex.
FreeApproximation surface_chain(int g, int root);

struct SeminormFamilyItem {
  std::string label;
  long parameter = 0;
  GroupChain chain{2};
  FreeRepresentation rep0;
  bool transfer = false; // evaluate through the dense representation
};

struct SeminormItemResult {
  std::string label;
  long parameter = 0;
  double value = 0.0;
  double norm = 0.0;
  double boundary_norm = 0.0;
  double deviation = 0.0;
  double ratio = 0.0; // (|value| - deviation) / norm
  bool ok = false;
  std::string note;
};

// Machine-checked part: for every bounded b and every item,
//   ||rho*B + delta b|| >= |value|/||Z|| - ||b|| ||dZ||/||Z||.
// The seminorm statement needs the infinite family and is only tagged.
struct SeminormLowerBound {
  std::string cocycle_id;
  std::string representation_id;
  std::vector<SeminormItemResult> items;
  double headline = 0.0; // min ratio over the reported tail
  std::vector<double> boundary_ratios;
  std::string certified_statement;
  std::string limit_note;
};

SeminormLowerBound seminorm_bound(const Cocycle &B, const std::string &rep_id,
                                  const std::vector<SeminormFamilyItem> &family,
                                  const FreeRepresentation *dense,
                                  const TransferConfig &transfer_cfg);

std::string seminorm_csv(const SeminormLowerBound &b);

} // namespace hypvol
