// Command-line front end: reproducible runs emitting JSON/CSV artifacts.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

#include <omp.h>

#include "hypvol/borel.hpp"
#include "hypvol/jsonio.hpp"
#include "hypvol/rng.hpp"
#include "hypvol/tolerances.hpp"

using namespace hypvol;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitNoCertificate = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvalid = 4;

struct Common {
  std::uint64_t seed = 42;
  int threads = 0;
  std::string out;
};

void add_common(CLI::App *app, Common &c) {
  if (const char *env = std::getenv("HYPVOL_SEED"))
    c.seed = std::strtoull(env, nullptr, 10);
  app->add_option("--seed", c.seed, "random seed (HYPVOL_SEED as fallback)");
  app->add_option("--threads", c.threads, "cap on OpenMP threads (0 = default)");
  app->add_option("--out", c.out, "write the JSON artifact to this path");
}

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

ordered_json artifact(const std::string &sub, ordered_json config,
                      ordered_json results) {
  return {{"schema_version", kSchemaVersion},
          {"subcommand", sub},
          {"timestamp", timestamp_utc()},
          {"config", std::move(config)},
          {"results", std::move(results)}};
}

void emit(const Common &c, const ordered_json &art) {
  std::string s = art.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(c.out);
    if (!f)
      throw InvalidInput("cannot open output path " + c.out);
    f << s;
  }
}

cplx parse_complex(const std::string &s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

double parse_irrational(const std::string &s) {
  if (s == "sqrt2")
    return std::sqrt(2.0);
  if (s == "sqrt3")
    return std::sqrt(3.0);
  if (s == "sqrt2-1")
    return std::sqrt(2.0) - 1.0;
  if (s == "sqrt3-1")
    return std::sqrt(3.0) - 1.0;
  return std::stod(s);
}

std::vector<double> parse_list(const std::string &s) {
  std::vector<double> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty())
        out.push_back(parse_irrational(cur));
      cur.clear();
    } else
      cur.push_back(ch);
  }
  return out;
}

ProjectiveIsometry random_isometry(Rng &rng, double box = 2.0) {
  for (;;) {
    cplx a = rng.box(box), b = rng.box(box), c = rng.box(box), d = rng.box(box);
    if (std::abs(a * d - b * c) > 0.3)
      return ProjectiveIsometry::from_entries(a, b, c, d);
  }
}

// ---------------------------------------------------------------------------

int run_cocycle_check(const Common &common, long samples, double tol) {
  Rng rng(common.seed);
  struct Sample {
    ProjectiveIsometry g[5];
    BoundaryPoint x;
  };
  std::vector<Sample> data(samples);
  for (auto &s : data) {
    s.x = BoundaryPoint::from_value(rng.box(2.0));
    for (auto &h : s.g)
      h = random_isometry(rng);
  }
  std::vector<double> residual(samples, 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < samples; ++i) {
    double alt = 0.0;
    for (int omit = 0; omit < 5; ++omit) {
      ProjectiveIsometry f[4];
      int k = 0;
      for (int j = 0; j < 5; ++j)
        if (j != omit)
          f[k++] = data[i].g[j];
      double v = vol3_cocycle(data[i].x, f[0], f[1], f[2], f[3]);
      alt += (omit % 2 == 0) ? v : -v;
    }
    residual[i] = std::abs(alt);
  }
  double worst = 0.0;
  for (double r : residual)
    worst = std::max(worst, r);

  bool pass = worst < tol;
  emit(common, artifact("cocycle-check",
                        {{"samples", samples}, {"tol", tol}, {"seed", common.seed}},
                        {{"max_residual", worst}, {"pass", pass}}));
  return pass ? 0 : 1;
}

int run_borel_check(const Common &common, int n, long samples, double tol) {
  Rng rng(common.seed);
  double factor = double(n) * double(n * n - 1) / 6.0;
  struct Sample {
    ProjectiveIsometry g[4];
    BoundaryPoint x;
  };
  std::vector<Sample> data;
  while (static_cast<long>(data.size()) < samples) {
    Sample s;
    s.x = BoundaryPoint::from_value(rng.box(2.0));
    bool distinct = true;
    BoundaryPoint orbit[4];
    for (int k = 0; k < 4; ++k) {
      s.g[k] = random_isometry(rng);
      orbit[k] = apply_boundary(s.g[k], s.x);
    }
    for (int i = 0; i < 4 && distinct; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (chordal(orbit[i], orbit[j]) < 1e-4) {
          distinct = false;
          break;
        }
    if (distinct)
      data.push_back(s);
  }

  std::vector<double> residual(samples, 0.0), magnitude(samples, 0.0);
  bool failed = false;
  std::string what;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < samples; ++i) {
    if (failed)
      continue;
    try {
      const Sample &s = data[i];
      Flag base = veronese_flag(n, s.x);
      Flag F[4] = {apply_flag(veronese_matrix(n, s.g[0]), base),
                   apply_flag(veronese_matrix(n, s.g[1]), base),
                   apply_flag(veronese_matrix(n, s.g[2]), base),
                   apply_flag(veronese_matrix(n, s.g[3]), base)};
      double B = borel_cocycle(F[0], F[1], F[2], F[3]);
      double vol = vol3_cocycle(s.x, s.g[0], s.g[1], s.g[2], s.g[3]);
      residual[i] = std::abs(B - factor * vol);
      magnitude[i] = std::abs(B);
    } catch (const std::exception &e) {
#pragma omp critical
      {
        failed = true;
        what = e.what();
      }
    }
  }
  if (failed)
    throw Error(what);

  double worst = 0.0, biggest = 0.0;
  for (long i = 0; i < samples; ++i) {
    worst = std::max(worst, residual[i]);
    biggest = std::max(biggest, magnitude[i]);
  }
  long msize = static_cast<long>(multi_index_set(n).size());
  bool pass = worst < tol && biggest <= factor * kV3 + 1e-9;
  emit(common,
       artifact("borel-check",
                {{"n", n}, {"samples", samples}, {"tol", tol}, {"seed", common.seed}},
                {{"max_pullback_residual", worst},
                 {"max_abs_value", biggest},
                 {"value_bound", factor * kV3},
                 {"multi_index_count", msize},
                 {"pass", pass}}));
  return pass ? 0 : 1;
}

int run_surface_chain(const Common &common, int genus, int root,
                      const std::string &emit_path) {
  FreeApproximation fa = surface_chain(genus, root);
  SurfaceRep rep = fuchsian_surface_rep(genus);
  Cocycle c = Vol2Cocycle{H2Vertex::finite(cplx(0.0, 1.0))};
  double value = evaluate(c, rep.rep, fa.chain);

  if (!emit_path.empty()) {
    std::ofstream f(emit_path);
    if (!f)
      throw InvalidInput("cannot open " + emit_path);
    f << chain_to_text(fa.chain);
  }
  emit(common,
       artifact("surface-chain",
                {{"genus", genus}, {"root", root}, {"emit", emit_path},
                 {"seed", common.seed}},
                {{"norm", fa.chain.l1_norm_double()},
                 {"boundary_norm", fa.chain.boundary().l1_norm_double()},
                 {"simplices", fa.chain.size()},
                 {"evaluation", value},
                 {"efficiency", std::abs(value) / fa.chain.l1_norm_double()},
                 {"relator_defect",
                  word_eval(rep.rep, rep.relator).identity_distance()}}));
  return 0;
}

struct FamilyParams {
  std::string family = "h-alpha-beta";
  std::string alpha = "101,0";
  std::string beta = "101,0";
  double r = 1.0;
  double t = kPi / 16.0;
  std::string theta = "sqrt2-1";
  long exponent = 0; // 0: scan for the first Schottky window hit
};

FreeRepresentation build_family(const FamilyParams &p, ordered_json &config,
                                std::vector<std::string> &assumptions) {
  config["family"] = p.family;
  if (p.family == "h-alpha-beta") {
    cplx a = parse_complex(p.alpha), b = parse_complex(p.beta);
    config["alpha"] = to_json(a);
    config["beta"] = to_json(b);
    return h_alpha_beta(a, b);
  }
  if (p.family == "rho-theta") {
    double th = parse_irrational(p.theta);
    config["r"] = p.r;
    config["t"] = p.t;
    config["theta"] = th;
    assumptions.push_back("theta = " + p.theta + " declared irrational");
    return rho_theta(p.r, p.t, th);
  }
  if (p.family == "rho-theta-conj") {
    double th = parse_irrational(p.theta);
    long n = p.exponent;
    if (n <= 0) {
      for (long k = 1; k < 1000000; ++k) {
        double f = k * th - std::floor(k * th);
        if (f > 0.125 && f < 0.375) {
          n = k;
          break;
        }
      }
      if (n <= 0)
        throw BudgetExceeded("no exponent with n*theta in (1/8,3/8) found");
    }
    config["r"] = p.r;
    config["t"] = p.t;
    config["theta"] = th;
    config["exponent"] = n;
    assumptions.push_back("theta = " + p.theta + " declared irrational");
    FreeRepresentation base = rho_theta(p.r, p.t, th);
    ProjectiveIsometry bn = word_eval(base, Word::generator(2).pow(int(n)));
    return {2, {base.images[0], bn * base.images[0] * bn.inverse()},
            FieldTag::Complex};
  }
  if (p.family == "dense-psl2r") {
    double q = parse_irrational(p.theta);
    config["l"] = p.r;
    config["q"] = q;
    DensePsl2r d = dense_psl2r(p.r, q);
    assumptions.insert(assumptions.end(), d.assumptions.begin(),
                       d.assumptions.end());
    return d.rep;
  }
  throw InvalidInput("unknown family " + p.family);
}

int run_certify_dense(const Common &common, const FamilyParams &fp, double mu3,
                      int max_len, long max_conj) {
  ordered_json config{{"mu3", mu3},
                      {"max_word_length", max_len},
                      {"max_conjugate_exponent", max_conj},
                      {"seed", common.seed}};
  std::vector<std::string> assumptions;
  FreeRepresentation rep = build_family(fp, config, assumptions);

  Mu3Config mu{mu3};
  DensitySearchBudget budget;
  budget.max_word_length = max_len;
  budget.max_conjugate_exponent = max_conj;
  H3Point base{cplx(0.0, 0.0), 1.0};

  CertifyDenseResult res = certify_dense(rep, base, mu, budget, assumptions);
  ordered_json results;
  if (res.status == DenseStatus::Found) {
    results = to_json(*res.certificate);
    results["reverified"] = verify_density_certificate(rep, *res.certificate);
  } else {
    results = {{"status", "not-found"}, {"note", res.note}};
  }
  emit(common, artifact("certify-dense", config, results));
  return res.status == DenseStatus::Found ? 0 : kExitNoCertificate;
}

int run_certify_schottky(const Common &common, const FamilyParams &fp) {
  ordered_json config{{"seed", common.seed}};
  std::vector<std::string> assumptions;
  FreeRepresentation rep = build_family(fp, config, assumptions);

  CertifySchottkyResult res = certify_schottky(rep);
  ordered_json results;
  if (res.status == SchottkyStatus::Certified) {
    results = to_json(*res.certificate);
    results["reverified"] = verify_schottky_certificate(rep, *res.certificate);
  } else {
    results = {{"status", res.status == SchottkyStatus::DiscsOverlap
                              ? "discs-overlap"
                              : "not-loxodromic"},
               {"note", res.note}};
  }
  emit(common, artifact("certify-schottky", config, results));
  return res.status == SchottkyStatus::Certified ? 0 : kExitNoCertificate;
}

int run_find_exponents(const Common &common, const std::string &thetas,
                       double tau0, long bound) {
  std::vector<double> th = parse_list(thetas);
  ordered_json config{{"thetas", th}, {"tau0", tau0}, {"bound", bound},
                      {"seed", common.seed}};
  std::vector<long> ns = find_exponents(th, tau0, bound);

  // postcondition re-check
  auto frac = [](double x) { return x - std::floor(x); };
  bool ok = true;
  for (std::size_t i = 0; i < th.size(); ++i) {
    double fi = frac(ns[i] * th[i]);
    if (!(fi < tau0 || fi > 1.0 - tau0))
      ok = false;
    for (std::size_t j = 0; j < th.size(); ++j) {
      if (j == i)
        continue;
      double fj = frac(ns[i] * th[j]);
      if (!(fj > 0.125 && fj < 0.375))
        ok = false;
    }
  }
  emit(common, artifact("find-exponents", config,
                        {{"exponents", ns}, {"recheck_pass", ok}}));
  return ok ? 0 : 1;
}

int run_approximate(const Common &common, double l, const std::string &q,
                    const std::string &target_word,
                    const std::string &target_elliptic, double epsilon,
                    int depth, long max_nodes) {
  double qv = parse_irrational(q);
  DensePsl2r d = dense_psl2r(l, qv);

  ProjectiveIsometry target;
  std::string target_desc;
  if (!target_word.empty()) {
    target = word_eval(d.rep, Word::parse(target_word));
    target_desc = "word " + target_word;
  } else if (!target_elliptic.empty()) {
    double ang = parse_irrational(target_elliptic);
    target = ProjectiveIsometry::from_entries(
        std::cos(ang / 2.0), std::sin(ang / 2.0), -std::sin(ang / 2.0),
        std::cos(ang / 2.0));
    target_desc = "elliptic of angle " + target_elliptic + " about i";
  } else {
    throw InvalidInput("approximate: need --target-word or --target-elliptic");
  }

  ApproxRequest req;
  req.rep = d.rep;
  req.epsilon = epsilon;
  req.budget.ball_depth = depth;
  req.budget.max_nodes = max_nodes;
  req.seed = common.seed;

  ApproxResult res = approximate_element(req, target);
  // soundness: re-verify through the independent evaluation path
  double recheck = approx_metric(req, word_eval_rtl(d.rep, res.word), target);

  emit(common, artifact("approximate",
                        {{"l", l}, {"q", qv}, {"target", target_desc},
                         {"epsilon", epsilon}, {"ball_depth", depth},
                         {"max_nodes", max_nodes}, {"seed", common.seed}},
                        {{"word", res.word.str()},
                         {"word_length", res.word.length()},
                         {"distance", res.distance},
                         {"distance_recheck", recheck},
                         {"within_epsilon", res.within_epsilon},
                         {"nodes", res.nodes}}));
  return res.within_epsilon ? 0 : kExitBudget;
}

int run_transfer(const Common &common, int genus, double l, const std::string &q,
                 double epsilon, int depth, long max_nodes, int retries,
                 const std::string &chain_path,
                 const std::string &emit_chain_path) {
  double qv = parse_irrational(q);
  SurfaceRep rep0 = fuchsian_surface_rep(genus);
  DensePsl2r dense = dense_psl2r(l, qv);

  GroupChain Z(2);
  if (chain_path.empty()) {
    Z = surface_chain(genus).chain;
  } else {
    std::ifstream f(chain_path);
    if (!f)
      throw InvalidInput("cannot read " + chain_path);
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    Z = chain_from_text(text);
  }

  TransferConfig cfg;
  cfg.epsilon = epsilon;
  cfg.max_retries = retries;
  cfg.search.rep = dense.rep;
  cfg.search.budget.ball_depth = depth;
  cfg.search.budget.max_nodes = max_nodes;
  cfg.search.seed = common.seed;
  Cocycle c = Vol2Cocycle{H2Vertex::finite(cplx(0.0, 1.0))};

  auto [Zeps, report] = transfer_chain(c, rep0.rep, Z, dense.rep, cfg);
  if (!emit_chain_path.empty()) {
    std::ofstream f(emit_chain_path);
    f << chain_to_text(Zeps);
  }

  ordered_json results = to_json(report);
  results["lemma_scheme_bound"] =
      std::abs(report.output_eval) / report.output_norm;
  emit(common, artifact("transfer",
                        {{"genus", genus}, {"l", l}, {"q", qv},
                         {"epsilon", epsilon}, {"ball_depth", depth},
                         {"max_nodes", max_nodes}, {"retries", retries},
                         {"chain", chain_path}, {"seed", common.seed}},
                        results));
  return report.success ? 0 : kExitBudget;
}

int run_seminorm_bound(const Common &common, int gmin, int gmax, bool transfer,
                       double l, const std::string &q, double epsilon,
                       int depth, const std::string &csv_path) {
  if (gmin < 2 || gmax < gmin)
    throw InvalidInput("seminorm-bound: need 2 <= genus-min <= genus-max");

  std::vector<SeminormFamilyItem> family;
  for (int g = gmin; g <= gmax; ++g) {
    SeminormFamilyItem item;
    item.label = "genus " + std::to_string(g);
    item.parameter = g;
    item.chain = surface_chain(g).chain;
    item.rep0 = fuchsian_surface_rep(g).rep;
    item.transfer = transfer;
    family.push_back(std::move(item));
  }

  double qv = parse_irrational(q);
  std::optional<DensePsl2r> dense;
  TransferConfig cfg;
  if (transfer) {
    dense = dense_psl2r(l, qv);
    cfg.epsilon = epsilon;
    cfg.search.rep = dense->rep;
    cfg.search.budget.ball_depth = depth;
    cfg.search.seed = common.seed;
  }

  Cocycle c = Vol2Cocycle{H2Vertex::finite(cplx(0.0, 1.0))};
  std::string rep_id =
      transfer ? "dense PSL(2,R) rep (l=" + std::to_string(l) + ")"
               : "Fuchsian surface representations";
  SeminormLowerBound b =
      seminorm_bound(c, rep_id, family, dense ? &dense->rep : nullptr, cfg);

  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    f << seminorm_csv(b);
  }
  emit(common, artifact("seminorm-bound",
                        {{"genus_min", gmin}, {"genus_max", gmax},
                         {"transfer", transfer}, {"l", l}, {"q", qv},
                         {"epsilon", epsilon}, {"csv", csv_path},
                         {"seed", common.seed}},
                        to_json(b)));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"certified computations with volume and Borel classes"};
  app.require_subcommand(1);

  Common common;
  FamilyParams fp;

  // cocycle-check
  long samples = 1000;
  double tol = 1e-9;
  auto *cc = app.add_subcommand("cocycle-check",
                                "delta vol3 = 0 on random 5-tuples");
  add_common(cc, common);
  cc->add_option("--samples", samples);
  cc->add_option("--tol", tol);

  // borel-check
  int borel_n = 3;
  long borel_samples = 200;
  double borel_tol = 1e-8;
  auto *bc = app.add_subcommand("borel-check",
                                "Borel pullback identity on random quadruples");
  add_common(bc, common);
  bc->add_option("--n", borel_n);
  bc->add_option("--samples", borel_samples);
  bc->add_option("--tol", borel_tol);

  // surface-chain
  int genus = 2, root = 0;
  std::string emit_path;
  auto *sc = app.add_subcommand("surface-chain",
                                "fan chain of the regular 4g-gon");
  add_common(sc, common);
  sc->add_option("--genus", genus);
  sc->add_option("--root", root);
  sc->add_option("--emit", emit_path, "write the chain in text format");

  // certify-dense
  double mu3 = kMu3;
  int max_len = 5;
  long max_conj = 5000;
  auto *cd = app.add_subcommand("certify-dense",
                                "Margulis-style density certificate");
  add_common(cd, common);
  cd->add_option("--family", fp.family, "h-alpha-beta | rho-theta | dense-psl2r");
  cd->add_option("--alpha", fp.alpha, "complex as re,im");
  cd->add_option("--beta", fp.beta);
  cd->add_option("--r", fp.r);
  cd->add_option("--t", fp.t);
  cd->add_option("--theta", fp.theta);
  cd->add_option("--mu", mu3);
  cd->add_option("--max-len", max_len);
  cd->add_option("--max-conj", max_conj);

  // certify-schottky
  auto *cs = app.add_subcommand("certify-schottky",
                                "ping-pong discs from isometric circles");
  add_common(cs, common);
  cs->add_option("--family", fp.family, "h-alpha-beta | rho-theta-conj");
  cs->add_option("--alpha", fp.alpha);
  cs->add_option("--beta", fp.beta);
  cs->add_option("--r", fp.r);
  cs->add_option("--t", fp.t);
  cs->add_option("--theta", fp.theta);
  cs->add_option("--exponent", fp.exponent);

  // find-exponents
  std::string thetas = "sqrt2-1,sqrt3-1";
  double tau0 = 0.01;
  long bound = 10000000;
  auto *fe = app.add_subcommand("find-exponents",
                                "least exponents hitting the two windows");
  add_common(fe, common);
  fe->add_option("--theta", thetas, "comma-separated list");
  fe->add_option("--tau0", tau0);
  fe->add_option("--bound", bound);

  // approximate
  double l = 1.0, epsilon = 0.2;
  std::string q = "sqrt2", target_word, target_elliptic;
  int depth = 12;
  long max_nodes = 2000000;
  auto *ap = app.add_subcommand("approximate",
                                "word approximation in a dense representation");
  add_common(ap, common);
  ap->add_option("--l", l);
  ap->add_option("--q", q);
  ap->add_option("--target-word", target_word);
  ap->add_option("--target-elliptic", target_elliptic, "angle about i");
  ap->add_option("--epsilon", epsilon);
  ap->add_option("--depth", depth);
  ap->add_option("--max-nodes", max_nodes);

  // transfer
  double teps = 0.5;
  int retries = 6;
  std::string chain_path, emit_chain_path;
  auto *tr = app.add_subcommand("transfer",
                                "chain transfer to a dense representation");
  add_common(tr, common);
  tr->add_option("--genus", genus);
  tr->add_option("--l", l);
  tr->add_option("--q", q);
  tr->add_option("--epsilon", teps);
  tr->add_option("--depth", depth);
  tr->add_option("--max-nodes", max_nodes);
  tr->add_option("--retries", retries);
  tr->add_option("--chain", chain_path, "text chain replacing the surface chain");
  tr->add_option("--emit-chain", emit_chain_path);

  // seminorm-bound
  int gmin = 2, gmax = 10;
  bool use_transfer = false;
  std::string csv_path;
  auto *sb = app.add_subcommand("seminorm-bound",
                                "per-chain seminorm lower-bound certificates");
  add_common(sb, common);
  sb->add_option("--genus-min", gmin);
  sb->add_option("--genus-max", gmax);
  sb->add_flag("--transfer", use_transfer, "evaluate through dense-psl2r");
  sb->add_option("--l", l);
  sb->add_option("--q", q);
  sb->add_option("--epsilon", teps);
  sb->add_option("--depth", depth);
  sb->add_option("--csv", csv_path);

  CLI11_PARSE(app, argc, argv);

  if (common.threads > 0)
    omp_set_num_threads(common.threads);

  try {
    if (cc->parsed())
      return run_cocycle_check(common, samples, tol);
    if (bc->parsed())
      return run_borel_check(common, borel_n, borel_samples, borel_tol);
    if (sc->parsed())
      return run_surface_chain(common, genus, root, emit_path);
    if (cd->parsed())
      return run_certify_dense(common, fp, mu3, max_len, max_conj);
    if (cs->parsed())
      return run_certify_schottky(common, fp);
    if (fe->parsed())
      return run_find_exponents(common, thetas, tau0, bound);
    if (ap->parsed())
      return run_approximate(common, l, q, target_word, target_elliptic,
                             epsilon, depth, max_nodes);
    if (tr->parsed())
      return run_transfer(common, genus, l, q, teps, depth, max_nodes, retries,
                          chain_path, emit_chain_path);
    if (sb->parsed())
      return run_seminorm_bound(common, gmin, gmax, use_transfer, l, q, teps,
                                depth, csv_path);
  } catch (const BudgetExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalid;
}
