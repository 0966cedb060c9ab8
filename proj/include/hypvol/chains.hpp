#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hypvol/isometry.hpp"
#include "hypvol/volume.hpp"

namespace hypvol {

// Freely reduced word over generators 1..d; negative letters are inverses.
// The empty word is the identity.
class Word {
public:
  Word() = default;
  static Word from_letters(const std::vector<int> &letters);
  static Word generator(int i);
  // Strings over a, b, ...; a trailing '-' (or uppercase letter) marks an
  // inverse, a trailing '+' is accepted and ignored.
  static Word parse(const std::string &s);

  std::string str() const;
  const std::vector<int> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  Word operator*(const Word &o) const;
  Word inverse() const;
  Word pow(int n) const;

  bool operator==(const Word &o) const = default;
  // Total order: by length, then letterwise with a < a^- < b < b^- < ...
  std::strong_ordering operator<=>(const Word &o) const;

private:
  std::vector<int> letters_;
};

// Basepoint-normalized simplex (id, w1, ..., wk); the class [g0,...,gk] is
// stored through wi = g0^{-1} gi.
class Simplex {
public:
  explicit Simplex(std::vector<Word> tail) : tail_(std::move(tail)) {}
  static Simplex from_tuple(const std::vector<Word> &tuple);

  int degree() const { return static_cast<int>(tail_.size()); }
  const std::vector<Word> &tail() const { return tail_; }

  // Face maps renormalize so the first entry stays the identity.
  Simplex face(int i) const;

  bool operator==(const Simplex &o) const = default;
  std::strong_ordering operator<=>(const Simplex &o) const;

private:
  std::vector<Word> tail_;
};

using Coeff = mpq_class;

// Finite formal combination of simplices of one degree with exact rational
// coefficients; zero coefficients are never stored.
class GroupChain {
public:
  explicit GroupChain(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Simplex, Coeff> &terms() const { return terms_; }

  void add(const Simplex &s, const Coeff &c);
  GroupChain &operator+=(const GroupChain &o);
  GroupChain operator-() const;

  Coeff l1_norm() const;
  double l1_norm_double() const { return l1_norm().get_d(); }

  GroupChain boundary() const;

  bool operator==(const GroupChain &o) const = default;

private:
  int degree_;
  std::map<Simplex, Coeff> terms_;
};

// Generator substitution F_m -> F_d given by the images of the m generators.
struct Substitution {
  std::vector<Word> images;
  Word apply(const Word &w) const;
};

GroupChain pushforward(const Substitution &phi, const GroupChain &Z);

enum class FieldTag { Real, Complex };

struct FreeRepresentation {
  int rank = 0;
  std::vector<ProjectiveIsometry> images;
  FieldTag field = FieldTag::Complex;
};

ProjectiveIsometry word_eval(const FreeRepresentation &rep, const Word &w);
// Independent right-to-left product, used to re-verify search results.
ProjectiveIsometry word_eval_rtl(const FreeRepresentation &rep, const Word &w);

struct Vol3Cocycle {
  BoundaryPoint basepoint;
};
struct Vol2Cocycle {
  H2Vertex basepoint;
};
struct BorelCocycle {
  int n = 2;
  BoundaryPoint basepoint; // base flag is the Veronese flag of this point
};
using Cocycle = std::variant<Vol3Cocycle, Vol2Cocycle, BorelCocycle>;

double sup_norm_bound(const Cocycle &c);

// Per-simplex fan-out runs under OpenMP; the compensated sum is taken in
// fixed key order afterwards, so results do not depend on the thread count.
double evaluate(const Cocycle &c, const FreeRepresentation &rep,
                const GroupChain &Z);
double evaluate_serial(const Cocycle &c, const FreeRepresentation &rep,
                       const GroupChain &Z);

// Line format `coeff; w1; ...; wk`, exact rational round trip.
std::string chain_to_text(const GroupChain &Z);
GroupChain chain_from_text(const std::string &text);

std::string rational_to_string(const Coeff &c);
Coeff rational_from_string(const std::string &s);

} // namespace hypvol
