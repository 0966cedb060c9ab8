// Compares the serial reference evaluation against the OpenMP kernels and
// checks that they agree bitwise.  Build and run manually:
//   cmake --build build --target bench_eval && ./build/bench_eval

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "hypvol/chains.hpp"
#include "hypvol/rng.hpp"

using namespace hypvol;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

ProjectiveIsometry random_isometry(Rng &rng) {
  for (;;) {
    cplx a = rng.box(2.0), b = rng.box(2.0), c = rng.box(2.0), d = rng.box(2.0);
    if (std::abs(a * d - b * c) > 0.3)
      return ProjectiveIsometry::from_entries(a, b, c, d);
  }
}

GroupChain random_chain(Rng &rng, int degree, int terms, int maxlen) {
  GroupChain Z(degree);
  while (static_cast<int>(Z.size()) < terms) {
    std::vector<Word> tail;
    for (int k = 0; k < degree; ++k) {
      std::vector<int> letters;
      int len = 1 + int(rng.below(maxlen));
      for (int j = 0; j < len; ++j) {
        int g = 1 + int(rng.below(2));
        letters.push_back(rng.bits() & 1 ? g : -g);
      }
      tail.push_back(Word::from_letters(letters));
    }
    Z.add(Simplex(std::move(tail)), 1);
  }
  return Z;
}

struct Timing {
  double serial = 0.0;
  double parallel = 0.0;
  bool bitwise_equal = false;
};

Timing bench(const Cocycle &c, const FreeRepresentation &rep,
             const GroupChain &Z, int reps) {
  Timing t;
  double v0 = 0.0, v1 = 0.0;
  double t0 = now();
  for (int i = 0; i < reps; ++i)
    v0 = evaluate_serial(c, rep, Z);
  t.serial = (now() - t0) / reps;
  t0 = now();
  for (int i = 0; i < reps; ++i)
    v1 = evaluate(c, rep, Z);
  t.parallel = (now() - t0) / reps;
  t.bitwise_equal = v0 == v1;
  return t;
}

} // namespace

int main() {
  Rng rng(42);
  FreeRepresentation rep;
  rep.rank = 2;
  rep.images = {random_isometry(rng), random_isometry(rng)};

  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial", "openmp",
              "speedup", "bitwise");

  {
    GroupChain Z = random_chain(rng, 3, 4096, 10);
    Timing t = bench(Vol3Cocycle{BoundaryPoint::from_value(cplx(0.3, 0.7))},
                     rep, Z, 5);
    std::printf("%-28s %9.4fs %9.4fs %7.2fx %s\n", "vol3, 4096 simplices",
                t.serial, t.parallel, t.serial / t.parallel,
                t.bitwise_equal ? "yes" : "NO");
  }
  {
    GroupChain Z = random_chain(rng, 2, 4096, 10);
    // a real representation for the plane action
    FreeRepresentation rrep;
    rrep.rank = 2;
    rrep.images = {
        ProjectiveIsometry::from_entries(std::exp(0.5), 0, 0, std::exp(-0.5)),
        ProjectiveIsometry::from_entries(std::cos(0.7), std::sin(0.7),
                                         -std::sin(0.7), std::cos(0.7))};
    Timing t = bench(Vol2Cocycle{H2Vertex::finite(cplx(0.0, 1.0))}, rrep, Z, 5);
    std::printf("%-28s %9.4fs %9.4fs %7.2fx %s\n", "vol2, 4096 simplices",
                t.serial, t.parallel, t.serial / t.parallel,
                t.bitwise_equal ? "yes" : "NO");
  }
  {
    GroupChain Z = random_chain(rng, 3, 128, 6);
    Timing t = bench(BorelCocycle{4, BoundaryPoint::from_value(cplx(0.3, 0.7))},
                     rep, Z, 2);
    std::printf("%-28s %9.4fs %9.4fs %7.2fx %s\n", "borel n=4, 128 simplices",
                t.serial, t.parallel, t.serial / t.parallel,
                t.bitwise_equal ? "yes" : "NO");
  }
  return 0;
}
