#include "hypvol/approx.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <omp.h>

namespace hypvol {

namespace {

// Words over F_2 packed two bits per letter, oldest letter lowest.
// Symbols: 0 -> z1, 1 -> z1^-1, 2 -> z2, 3 -> z2^-1.
struct Packed {
  std::uint64_t bits = 0;
  std::uint8_t len = 0;

  int symbol(int i) const { return int((bits >> (2 * i)) & 3u); }
  Packed push(int s) const {
    Packed p = *this;
    p.bits |= std::uint64_t(s) << (2 * p.len);
    p.len += 1;
    return p;
  }
};

int symbol_letter(int s) { return (s & 2) ? ((s & 1) ? -2 : 2) : ((s & 1) ? -1 : 1); }
int symbol_inverse(int s) { return s ^ 1; }

Word unpack(const Packed &p) {
  std::vector<int> letters(p.len);
  for (int i = 0; i < p.len; ++i)
    letters[i] = symbol_letter(p.symbol(i));
  return Word::from_letters(letters);
}

struct BallEntry {
  Packed word;
  ProjectiveIsometry m;
};

// Reduced words in deterministic order; index arithmetic keeps the parallel
// fill identical to the serial one.
std::vector<BallEntry> build_ball(const FreeRepresentation &rep, int depth,
                                  long max_nodes) {
  ProjectiveIsometry letter_m[4] = {rep.images[0], rep.images[0].inverse(),
                                    rep.images[1], rep.images[1].inverse()};
  std::vector<BallEntry> out;
  out.push_back({Packed{}, ProjectiveIsometry::identity()});

  std::vector<BallEntry> level = out;
  for (int d = 1; d <= depth; ++d) {
    bool first = (d == 1);
    std::size_t kids = first ? 4 : 3;
    std::vector<BallEntry> next(level.size() * kids);
#pragma omp parallel for schedule(static)
    for (long pi = 0; pi < static_cast<long>(level.size()); ++pi) {
      const BallEntry &parent = level[pi];
      int last = first ? -1 : parent.word.symbol(parent.word.len - 1);
      std::size_t slot = pi * kids;
      for (int s = 0; s < 4; ++s) {
        if (!first && s == symbol_inverse(last))
          continue;
        next[slot].word = parent.word.push(s);
        next[slot].m = parent.m * letter_m[s];
        ++slot;
      }
    }
    level = std::move(next);
    for (const BallEntry &e : level) {
      if (static_cast<long>(out.size()) >= max_nodes)
        return out;
      out.push_back(e);
    }
  }
  return out;
}

} // namespace

double approx_metric(const ApproxRequest &req, const ProjectiveIsometry &g,
                     const ProjectiveIsometry &target) {
  if (req.metric == ApproxMetric::OperatorNorm)
    return distance(g, target);
  const H3Point &x = req.basepoint;
  double s = std::sqrt(2.0 * std::cosh(req.probe_radius) - 2.0) * x.t;
  H3Point probes[4] = {x,
                       {x.z, x.t * std::exp(req.probe_radius)},
                       {x.z + s, x.t},
                       {x.z + cplx(0.0, s), x.t}};
  double worst = 0.0;
  for (const H3Point &p : probes)
    worst = std::max(worst, dist_h3(apply_h3(g, p), apply_h3(target, p)));
  return worst;
}

namespace {

struct CellKey {
  long a, b, c;
  bool operator==(const CellKey &o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

struct CellHash {
  std::size_t operator()(const CellKey &k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(std::uint64_t(k.a));
    mix(std::uint64_t(k.b));
    mix(std::uint64_t(k.c));
    return std::size_t(h);
  }
};

CellKey cell_of(const H3Point &y, double cell) {
  return {long(std::floor(y.z.real() / cell)),
          long(std::floor(y.z.imag() / cell)),
          long(std::floor(std::log(y.t) / cell))};
}

} // namespace

ApproxResult approximate_element(const ApproxRequest &req,
                                 const ProjectiveIsometry &target) {
  if (req.rep.rank != 2)
    throw InvalidInput("approximate_element: dense representation must have rank 2");

  std::vector<BallEntry> ball =
      build_ball(req.rep, req.budget.ball_depth, req.budget.max_nodes);

  ApproxResult best;
  best.distance = std::numeric_limits<double>::infinity();
  best.nodes = static_cast<long>(ball.size());

  // direct scan in enumeration order
  for (const BallEntry &e : ball) {
    double d = approx_metric(req, e.m, target);
    if (d < best.distance) {
      best.distance = d;
      best.word = unpack(e.word);
    }
    if (best.distance < req.epsilon) {
      best.within_epsilon = true;
      return best;
    }
  }

  // meet in the middle: spatial hash of basepoint images, single-writer
  // build then read-only queries
  double cell = std::max(req.epsilon / 4.0, 1e-6);
  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> index;
  index.reserve(ball.size() * 2);
  for (std::uint32_t i = 0; i < ball.size(); ++i)
    index[cell_of(apply_h3(ball[i].m, req.basepoint), cell)].push_back(i);

  for (const BallEntry &u : ball) {
    ProjectiveIsometry rest = u.m.inverse() * target;
    H3Point want = apply_h3(rest, req.basepoint);
    CellKey base = cell_of(want, cell);
    for (long da = -1; da <= 1; ++da)
      for (long db = -1; db <= 1; ++db)
        for (long dc = -1; dc <= 1; ++dc) {
          auto it = index.find({base.a + da, base.b + db, base.c + dc});
          if (it == index.end())
            continue;
          for (std::uint32_t vi : it->second) {
            // avoid cancelling junctions: last symbol of u vs first of v
            const BallEntry &v = ball[vi];
            if (u.word.len > 0 && v.word.len > 0 &&
                v.word.symbol(0) ==
                    symbol_inverse(u.word.symbol(u.word.len - 1)))
              continue;
            double d = approx_metric(req, u.m * v.m, target);
            if (d < best.distance) {
              best.distance = d;
              best.word = unpack(u.word) * unpack(v.word);
              if (d < req.epsilon) {
                best.within_epsilon = true;
                return best;
              }
            }
          }
        }
  }
  return best;
}

std::pair<GroupChain, TransferReport>
transfer_chain(const Cocycle &B, const FreeRepresentation &rep0,
               const GroupChain &Z, const FreeRepresentation &dense,
               const TransferConfig &cfg) {
  // precondition for vol3/borel: pairwise-distinct orbit points per simplex
  if (!std::holds_alternative<Vol2Cocycle>(B)) {
    BoundaryPoint x = std::holds_alternative<Vol3Cocycle>(B)
                          ? std::get<Vol3Cocycle>(B).basepoint
                          : std::get<BorelCocycle>(B).basepoint;
    for (const auto &[s, c] : Z.terms()) {
      std::vector<BoundaryPoint> orbit{x};
      for (const Word &w : s.tail())
        orbit.push_back(apply_boundary(word_eval(rep0, w), x));
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
          if (chordal(orbit[i], orbit[j]) < 1e-10)
            throw InvalidInput(
                "transfer_chain: simplex with coincident orbit points");
    }
  }

  TransferReport rep;
  rep.epsilon = cfg.epsilon;
  rep.input_norm = Z.l1_norm_double();
  rep.input_boundary_norm = Z.boundary().l1_norm_double();
  rep.input_eval = evaluate(B, rep0, Z);

  double tol = cfg.element_tolerance > 0.0
                   ? cfg.element_tolerance
                   : cfg.epsilon / (4.0 * std::max(1.0, rep.input_norm));

  GroupChain out(Z.degree());
  for (int round = 0; round <= cfg.max_retries; ++round) {
    rep.rounds = round + 1;
    rep.element_tolerance = tol;

    Substitution subst;
    bool all_ok = true;
    ApproxRequest search = cfg.search;
    search.epsilon = tol;
    for (int i = 0; i < rep0.rank; ++i) {
      ApproxResult r = approximate_element(search, rep0.images[i]);
      subst.images.push_back(r.word);
      if (!r.within_epsilon)
        all_ok = false;
    }
    rep.substitution = subst.images;

    out = pushforward(subst, Z);
    rep.output_norm = out.l1_norm_double();
    rep.output_boundary_norm = out.boundary().l1_norm_double();
    rep.output_eval = evaluate(B, dense, out);
    rep.deviation = std::abs(rep.input_eval - rep.output_eval);
    if (rep.deviation < cfg.epsilon) {
      rep.success = true;
      return {out, rep};
    }
    if (!all_ok)
      break; // tighter tolerances cannot be met within this budget
    tol /= 2.0;
  }
  rep.success = false;
  return {out, rep};
}

} // namespace hypvol
