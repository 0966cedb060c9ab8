#include "hypvol/chains.hpp"

#include <cmath>
#include <sstream>

#include <omp.h>

#include "hypvol/borel.hpp"
#include "hypvol/kahan.hpp"

namespace hypvol {

namespace {
constexpr double kPi = 3.14159265358979323846;

// a < a^- < b < b^- < ...
std::pair<int, int> letter_key(int l) { return {std::abs(l), l < 0 ? 1 : 0}; }
} // namespace

Word Word::from_letters(const std::vector<int> &letters) {
  Word w;
  for (int l : letters) {
    if (l == 0)
      throw InvalidInput("Word: zero letter");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::generator(int i) {
  if (i == 0)
    throw InvalidInput("Word::generator: zero index");
  Word w;
  w.letters_.push_back(i);
  return w;
}

Word Word::parse(const std::string &s) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == ' ' || c == '\t')
      continue;
    int idx;
    bool inv = false;
    if (c >= 'a' && c <= 'z')
      idx = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') {
      idx = c - 'A' + 1;
      inv = true;
    } else
      throw InvalidInput("Word::parse: bad character in '" + s + "'");
    if (i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '+')) {
      if (s[i + 1] == '-')
        inv = !inv;
      ++i;
    }
    letters.push_back(inv ? -idx : idx);
  }
  return from_letters(letters);
}

std::string Word::str() const {
  std::string out;
  for (int l : letters_) {
    out.push_back(char('a' + std::abs(l) - 1));
    if (l < 0)
      out.push_back('-');
  }
  return out;
}

int Word::max_generator() const {
  int m = 0;
  for (int l : letters_)
    m = std::max(m, std::abs(l));
  return m;
}

Word Word::operator*(const Word &o) const {
  Word w = *this;
  for (int l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  int k = std::abs(n);
  Word out;
  for (int i = 0; i < k; ++i)
    out = out * base;
  return out;
}

std::strong_ordering Word::operator<=>(const Word &o) const {
  if (letters_.size() != o.letters_.size())
    return letters_.size() <=> o.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto c = letter_key(letters_[i]) <=> letter_key(o.letters_[i]);
    if (c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

Simplex Simplex::from_tuple(const std::vector<Word> &tuple) {
  if (tuple.empty())
    throw InvalidInput("Simplex: empty tuple");
  Word inv = tuple[0].inverse();
  std::vector<Word> tail;
  tail.reserve(tuple.size() - 1);
  for (std::size_t i = 1; i < tuple.size(); ++i)
    tail.push_back(inv * tuple[i]);
  return Simplex(std::move(tail));
}

Simplex Simplex::face(int i) const {
  int k = degree();
  if (i < 0 || i > k)
    throw InvalidInput("Simplex::face: index out of range");
  std::vector<Word> tail;
  tail.reserve(k - 1);
  if (i == 0) {
    Word inv = tail_[0].inverse();
    for (int j = 1; j < k; ++j)
      tail.push_back(inv * tail_[j]);
  } else {
    for (int j = 0; j < k; ++j)
      if (j != i - 1)
        tail.push_back(tail_[j]);
  }
  return Simplex(std::move(tail));
}

std::strong_ordering Simplex::operator<=>(const Simplex &o) const {
  if (tail_.size() != o.tail_.size())
    return tail_.size() <=> o.tail_.size();
  for (std::size_t i = 0; i < tail_.size(); ++i) {
    auto c = tail_[i] <=> o.tail_[i];
    if (c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

void GroupChain::add(const Simplex &s, const Coeff &c) {
  if (s.degree() != degree_)
    throw InvalidInput("GroupChain::add: degree mismatch");
  Coeff q = c;
  q.canonicalize(); // GMP arithmetic assumes canonical operands
  if (q == 0)
    return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, q);
  } else {
    it->second += q;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GroupChain &GroupChain::operator+=(const GroupChain &o) {
  if (o.degree_ != degree_)
    throw InvalidInput("GroupChain: degree mismatch");
  for (const auto &[s, c] : o.terms_)
    add(s, c);
  return *this;
}

GroupChain GroupChain::operator-() const {
  GroupChain out(degree_);
  for (const auto &[s, c] : terms_)
    out.terms_.emplace(s, -c);
  return out;
}

Coeff GroupChain::l1_norm() const {
  Coeff n = 0;
  for (const auto &[s, c] : terms_)
    n += abs(c);
  return n;
}

GroupChain GroupChain::boundary() const {
  if (degree_ < 1)
    throw InvalidInput("boundary: degree must be >= 1");
  GroupChain out(degree_ - 1);
  for (const auto &[s, c] : terms_)
    for (int i = 0; i <= degree_; ++i)
      out.add(s.face(i), (i % 2 == 0) ? c : -c);
  return out;
}

Word Substitution::apply(const Word &w) const {
  Word out;
  for (int l : w.letters()) {
    int idx = std::abs(l);
    if (idx > static_cast<int>(images.size()))
      throw InvalidInput("Substitution: generator out of range");
    out = out * (l > 0 ? images[idx - 1] : images[idx - 1].inverse());
  }
  return out;
}

GroupChain pushforward(const Substitution &phi, const GroupChain &Z) {
  GroupChain out(Z.degree());
  for (const auto &[s, c] : Z.terms()) {
    std::vector<Word> tail;
    tail.reserve(s.tail().size());
    for (const Word &w : s.tail())
      tail.push_back(phi.apply(w));
    out.add(Simplex(std::move(tail)), c);
  }
  return out;
}

ProjectiveIsometry word_eval(const FreeRepresentation &rep, const Word &w) {
  ProjectiveIsometry g;
  for (int l : w.letters()) {
    int idx = std::abs(l);
    if (idx > rep.rank)
      throw InvalidInput("word_eval: generator out of range");
    const ProjectiveIsometry &im = rep.images[idx - 1];
    g = g * (l > 0 ? im : im.inverse());
  }
  return g;
}

ProjectiveIsometry word_eval_rtl(const FreeRepresentation &rep, const Word &w) {
  ProjectiveIsometry g;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    int idx = std::abs(*it);
    if (idx > rep.rank)
      throw InvalidInput("word_eval_rtl: generator out of range");
    const ProjectiveIsometry &im = rep.images[idx - 1];
    g = (*it > 0 ? im : im.inverse()) * g;
  }
  return g;
}

double sup_norm_bound(const Cocycle &c) {
  if (std::holds_alternative<Vol3Cocycle>(c))
    return kV3;
  if (std::holds_alternative<Vol2Cocycle>(c))
    return kPi;
  int n = std::get<BorelCocycle>(c).n;
  return kV3 * double(n) * double(n * n - 1) / 6.0;
}

namespace {

double simplex_value_vol3(const Vol3Cocycle &c, const FreeRepresentation &rep,
                          const Simplex &s) {
  BoundaryPoint pts[4];
  pts[0] = c.basepoint;
  for (int i = 0; i < 3; ++i)
    pts[i + 1] = apply_boundary(word_eval(rep, s.tail()[i]), c.basepoint);
  return ideal_tet_volume(pts[0], pts[1], pts[2], pts[3]);
}

double simplex_value_vol2(const Vol2Cocycle &c, const FreeRepresentation &rep,
                          const Simplex &s) {
  return vol2_cocycle(c.basepoint, ProjectiveIsometry::identity(),
                      word_eval(rep, s.tail()[0]),
                      word_eval(rep, s.tail()[1]));
}

double simplex_value_borel(const BorelCocycle &c, const Flag &base,
                           const FreeRepresentation &rep, const Simplex &s) {
  std::vector<Flag> flags;
  flags.reserve(4);
  flags.push_back(base);
  for (int i = 0; i < 3; ++i) {
    ProjectiveIsometryN h =
        veronese_matrix(c.n, word_eval(rep, s.tail()[i]));
    flags.push_back(apply_flag(h, base));
  }
  // repeated orbit flags: alternating cocycle, value 0
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (flag_distance(flags[i], flags[j]) < 1e-10)
        return 0.0;
  return borel_cocycle(flags[0], flags[1], flags[2], flags[3]);
}

double evaluate_impl(const Cocycle &c, const FreeRepresentation &rep,
                     const GroupChain &Z, bool parallel) {
  int want = std::holds_alternative<Vol2Cocycle>(c) ? 2 : 3;
  if (Z.degree() != want)
    throw InvalidInput("evaluate: chain degree does not match the cocycle");

  std::vector<const Simplex *> keys;
  std::vector<double> coeffs;
  keys.reserve(Z.size());
  for (const auto &[s, q] : Z.terms()) {
    keys.push_back(&s);
    coeffs.push_back(q.get_d());
  }

  const Flag *base = nullptr;
  Flag base_store(Eigen::MatrixXcd::Identity(2, 2));
  if (const auto *bc = std::get_if<BorelCocycle>(&c)) {
    base_store = veronese_flag(bc->n, bc->basepoint);
    base = &base_store;
  }

  auto one = [&](std::size_t i) -> double {
    if (const auto *v3 = std::get_if<Vol3Cocycle>(&c))
      return simplex_value_vol3(*v3, rep, *keys[i]);
    if (const auto *v2 = std::get_if<Vol2Cocycle>(&c))
      return simplex_value_vol2(*v2, rep, *keys[i]);
    return simplex_value_borel(std::get<BorelCocycle>(c), *base, rep, *keys[i]);
  };

  std::vector<double> vals(keys.size(), 0.0);
  bool failed = false;
  std::string what;

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(keys.size()); ++i) {
      if (failed)
        continue;
      try {
        vals[i] = one(i);
      } catch (const std::exception &e) {
#pragma omp critical
        {
          failed = true;
          what = e.what();
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < keys.size(); ++i)
      vals[i] = one(i); // let exceptions propagate untouched
  }
  if (failed)
    throw NonGenericConfiguration(what);

  Kahan acc;
  for (std::size_t i = 0; i < keys.size(); ++i)
    acc.add(coeffs[i] * vals[i]);
  return acc.sum();
}

} // namespace

double evaluate(const Cocycle &c, const FreeRepresentation &rep,
                const GroupChain &Z) {
  return evaluate_impl(c, rep, Z, true);
}

double evaluate_serial(const Cocycle &c, const FreeRepresentation &rep,
                       const GroupChain &Z) {
  return evaluate_impl(c, rep, Z, false);
}

std::string rational_to_string(const Coeff &c) {
  Coeff q = c;
  q.canonicalize();
  return q.get_str();
}

Coeff rational_from_string(const std::string &s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ' && ch != '\t')
      t.push_back(ch);
  if (t.empty())
    throw InvalidInput("rational_from_string: empty");
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // exact decimal: d.ddd -> integer / 10^k
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::size_t frac = t.size() - dot - 1;
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac; ++i)
      den *= 10;
    Coeff q(num, den);
    q.canonicalize();
    return q;
  }
  Coeff q(t, 10);
  q.canonicalize();
  return q;
}

std::string chain_to_text(const GroupChain &Z) {
  std::ostringstream out;
  out << "# degree " << Z.degree() << "\n";
  for (const auto &[s, c] : Z.terms()) {
    out << rational_to_string(c);
    for (const Word &w : s.tail())
      out << "; " << w.str();
    out << "\n";
  }
  return out.str();
}

GroupChain chain_from_text(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<std::pair<Simplex, Coeff>> parsed;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
      if (ch == ';') {
        fields.push_back(cur);
        cur.clear();
      } else if (ch != '\r')
        cur.push_back(ch);
    }
    fields.push_back(cur);
    if (fields.empty())
      continue;
    Coeff c = rational_from_string(fields[0]);
    std::vector<Word> tail;
    for (std::size_t i = 1; i < fields.size(); ++i)
      tail.push_back(Word::parse(fields[i]));
    int d = static_cast<int>(tail.size());
    if (degree == -1)
      degree = d;
    else if (degree != d)
      throw InvalidInput("chain_from_text: mixed simplex degrees");
    parsed.emplace_back(Simplex(std::move(tail)), c);
  }
  if (degree == -1)
    throw InvalidInput("chain_from_text: no simplices");
  GroupChain Z(degree);
  for (auto &[s, c] : parsed)
    Z.add(s, c);
  return Z;
}

} // namespace hypvol
