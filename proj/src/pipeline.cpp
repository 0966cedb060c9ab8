#include "hypvol/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypvol {

namespace {

// Fan over the identification polygon: vertex words u_0..u_L, boundary edge
// e_j = (u_j, u_{j+1}) carrying a relator letter, triangles (u_0, u_j,
// u_{j+1}).  Each triangle enters the chain through one of the six signed
// orderings representing its fixed geometric orientation; the solver picks
// orderings so every shared edge cancels except the one pair cut open by
// passing to the free group.
struct FanSpec {
  std::vector<Word> verts; // L+1 entries
  std::vector<int> letters; // size L
  int allowed_letter = 0;   // |letter| of the pair permitted to survive
};

struct SignedOrdering {
  int sign;
  std::array<int, 3> perm; // indices into the triangle tuple
};

constexpr SignedOrdering kOrderings[6] = {
    {+1, {0, 1, 2}}, {+1, {1, 2, 0}}, {+1, {2, 0, 1}},
    {-1, {1, 0, 2}}, {-1, {0, 2, 1}}, {-1, {2, 1, 0}},
};

class FanSolver {
public:
  explicit FanSolver(const FanSpec &spec) : spec_(spec) {
    L_ = static_cast<int>(spec.letters.size());
    for (int j = 1; j <= L_ - 2; ++j)
      tris_.push_back({spec.verts[0], spec.verts[j], spec.verts[j + 1]});
    partner_.assign(L_, -1);
    for (int i = 0; i < L_; ++i)
      for (int j = 0; j < L_; ++j)
        if (i != j && std::abs(spec.letters[i]) == std::abs(spec.letters[j]))
          partner_[i] = j;
    choice_.assign(tris_.size(), -1);
  }

  GroupChain solve() {
    if (!dfs(0))
      throw Error("surface_chain: no consistent orientation assignment");
    GroupChain Z(2);
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      const SignedOrdering &o = kOrderings[choice_[t]];
      Z.add(Simplex::from_tuple({tris_[t][o.perm[0]], tris_[t][o.perm[1]],
                                 tris_[t][o.perm[2]]}),
            o.sign);
    }
    return Z;
  }

private:
  const FanSpec &spec_;
  int L_ = 0;
  std::vector<std::array<Word, 3>> tris_;
  std::vector<int> partner_;
  std::vector<int> choice_;
  std::map<Simplex, Coeff> residual_;

  // triangle index (0-based t = j-1) owning boundary edge m
  int owner(int m) const {
    if (m == 0)
      return 0;
    if (m == L_ - 1)
      return L_ - 3;
    return m - 1;
  }

  bool edge_zero(const Word &a, const Word &b) {
    for (const Simplex &s :
         {Simplex::from_tuple({a, b}), Simplex::from_tuple({b, a})}) {
      auto it = residual_.find(s);
      if (it != residual_.end() && it->second != 0)
        return false;
    }
    return true;
  }

  void apply(int t, int c, std::vector<std::pair<Simplex, Coeff>> &undo) {
    const SignedOrdering &o = kOrderings[c];
    const Word w[3] = {tris_[t][o.perm[0]], tris_[t][o.perm[1]],
                       tris_[t][o.perm[2]]};
    const std::pair<Simplex, int> faces[3] = {
        {Simplex::from_tuple({w[1], w[2]}), o.sign},
        {Simplex::from_tuple({w[0], w[2]}), -o.sign},
        {Simplex::from_tuple({w[0], w[1]}), o.sign},
    };
    for (const auto &[s, sgn] : faces) {
      residual_[s] += sgn;
      undo.push_back({s, sgn});
    }
  }

  void revert(const std::vector<std::pair<Simplex, Coeff>> &undo) {
    for (const auto &[s, sgn] : undo) {
      auto it = residual_.find(s);
      it->second -= sgn;
      if (it->second == 0)
        residual_.erase(it);
    }
  }

  bool constraints_ok(int t) {
    int j = t + 1;
    // interior fan edge (u_0, u_j) is complete once T_j is placed
    if (j >= 2 && !edge_zero(spec_.verts[0], spec_.verts[j]))
      return false;
    // glued boundary pairs, once both owners are placed
    std::vector<int> owned = {j};
    if (t == 0)
      owned.push_back(0);
    if (t == static_cast<int>(tris_.size()) - 1)
      owned.push_back(L_ - 1);
    for (int m : owned) {
      int p = partner_[m];
      if (owner(p) > t)
        continue;
      if (std::abs(spec_.letters[m]) == spec_.allowed_letter)
        continue;
      if (!edge_zero(spec_.verts[m], spec_.verts[m + 1]) ||
          !edge_zero(spec_.verts[p], spec_.verts[p + 1]))
        return false;
    }
    return true;
  }

  bool dfs(int t) {
    if (t == static_cast<int>(tris_.size()))
      return true;
    for (int c = 0; c < 6; ++c) {
      std::vector<std::pair<Simplex, Coeff>> undo;
      apply(t, c, undo);
      choice_[t] = c;
      if (constraints_ok(t) && dfs(t + 1))
        return true;
      revert(undo);
      choice_[t] = -1;
    }
    return false;
  }
};

FanSpec fan_spec(int g, int root) {
  int L = 4 * g;
  // relator letters x_1 y_1 x_1^-1 y_1^-1 x_2 ...
  std::vector<int> letters(L);
  for (int i = 0; i < g; ++i) {
    letters[4 * i] = 2 * i + 1;
    letters[4 * i + 1] = 2 * i + 2;
    letters[4 * i + 2] = -(2 * i + 1);
    letters[4 * i + 3] = -(2 * i + 2);
  }
  FanSpec spec;
  spec.verts.resize(L + 1);
  spec.letters.resize(L);
  spec.verts[0] = Word();
  for (int k = 0; k < L; ++k) {
    int l = letters[(root + k) % L];
    spec.letters[k] = l;
    spec.verts[k + 1] = spec.verts[k] * Word::generator(l);
  }
  spec.allowed_letter = std::abs(spec.letters[L - 1]);
  return spec;
}

} // namespace

FreeApproximation surface_chain(int g, int root) {
  if (g < 2)
    throw InvalidInput("surface_chain: genus must be >= 2");
  FanSpec spec = fan_spec(g, ((root % (4 * g)) + 4 * g) % (4 * g));
  FanSolver solver(spec);
  GroupChain Z = solver.solve();

  if (Z.l1_norm() != 4 * g - 2)
    throw Error("surface_chain: chain norm is not 4g-2");
  if (Z.boundary().l1_norm() != 2)
    throw Error("surface_chain: boundary norm is not 2");

  FreeApproximation out;
  out.rank = 2 * g;
  out.chain = std::move(Z);
  out.boundary_bound = 2;
  std::ostringstream s;
  s << "fundamental class of the closed orientable surface of genus " << g;
  out.target = s.str();
  return out;
}

FreeApproximation surface_chain(int g) { return surface_chain(g, 0); }

SeminormLowerBound seminorm_bound(const Cocycle &B, const std::string &rep_id,
                                  const std::vector<SeminormFamilyItem> &family,
                                  const FreeRepresentation *dense,
                                  const TransferConfig &transfer_cfg) {
  if (family.empty())
    throw EmptyFamily("seminorm_bound: empty family");

  SeminormLowerBound out;
  out.cocycle_id = std::holds_alternative<Vol3Cocycle>(B)   ? "vol3"
                   : std::holds_alternative<Vol2Cocycle>(B) ? "vol2"
                                                            : "borel";
  out.representation_id = rep_id;

  for (const SeminormFamilyItem &item : family) {
    SeminormItemResult r;
    r.label = item.label;
    r.parameter = item.parameter;
    r.norm = item.chain.l1_norm_double();
    r.boundary_norm = item.chain.boundary().l1_norm_double();
    try {
      if (item.transfer) {
        if (dense == nullptr)
          throw InvalidInput("seminorm_bound: transfer item without dense rep");
        auto [Zeps, rep] = transfer_chain(B, item.rep0, item.chain, *dense,
                                          transfer_cfg);
        r.value = rep.output_eval;
        r.norm = rep.output_norm;
        r.boundary_norm = rep.output_boundary_norm;
        r.deviation = rep.deviation;
        r.ok = rep.success;
        if (!rep.success)
          r.note = "transfer did not reach the requested deviation";
      } else {
        r.value = evaluate(B, item.rep0, item.chain);
        r.deviation = 0.0;
        r.ok = true;
      }
      r.ratio = (std::abs(r.value) - r.deviation) / r.norm;
    } catch (const std::exception &e) {
      r.ok = false;
      r.note = e.what();
    }
    out.items.push_back(std::move(r));
  }

  for (const auto &r : out.items)
    out.boundary_ratios.push_back(r.norm > 0 ? r.boundary_norm / r.norm : 0.0);

  double headline = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = out.items.size() / 2; i < out.items.size(); ++i)
    if (out.items[i].ok) {
      headline = std::min(headline, out.items[i].ratio);
      any = true;
    }
  out.headline = any ? headline : 0.0;

  out.certified_statement =
      "machine-checked per chain: for every bounded cochain b, "
      "||rho*B + delta b||_inf >= |value|/||Z||_1 - ||b||_inf "
      "||dZ||_1/||Z||_1";
  out.limit_note =
      "seminorm >= lim ratio is a family extrapolation; only the per-chain "
      "inequalities above are machine-checked";
  return out;
}

std::string seminorm_csv(const SeminormLowerBound &b) {
  std::ostringstream out;
  out << "parameter,value,norm,ratio\n";
  out.precision(17);
  for (const auto &r : b.items)
    out << r.parameter << "," << r.value << "," << r.norm << "," << r.ratio
        << "\n";
  return out.str();
}

} // namespace hypvol
