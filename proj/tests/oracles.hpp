#pragma once

// Independent reference implementations used by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ruled/homotopy.hpp"

namespace oracle {

using Frac = std::pair<long long, long long>;  // (num, den), reduced

// Stern-Brocot ancestors of a/b (0 < a <= b) from the L/R string of subtractive Euclid.
inline std::vector<Frac> stern_brocot_path(long long a, long long b) {
  std::vector<Frac> out{{0, 1}, {1, 1}};
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;  // node = (m00 + m01)/(m10 + m11)
  long long p = a, q = b;
  while (p != q) {
    if (p < q) {  // L = [[1,0],[1,1]]
      m00 += m01;
      m10 += m11;
      q -= p;
    } else {  // R = [[1,1],[0,1]]
      m01 += m00;
      m11 += m10;
      p -= q;
    }
    out.push_back({m00 + m01, m10 + m11});
  }
  return out;
}

// Divisorial valuations (ord x, ord y) of the pseudo-lines, built blowup by blowup:
// the exceptional line over a node has the sum of its neighbours' valuations.
struct ValLine {
  long long vx, vy;
};

inline std::vector<ValLine> valuation_lines(const std::vector<std::size_t>& blowups) {
  std::vector<ValLine> lines{{1, 0}, {0, 1}};  // the fibre, then the section y = 0
  for (std::size_t i : blowups) {
    ValLine n{lines[i].vx + lines[i + 1].vx, lines[i].vy + lines[i + 1].vy};
    lines.insert(lines.begin() + static_cast<long>(i) + 1, n);
  }
  return lines;
}

inline std::string val_label(const ValLine& l) {
  // a line with ord(x) = b, ord(y) = a carries the parameter x^a/y^b
  if (l.vx == 0) return "l_inf";
  if (l.vx == 1) return "l_" + std::to_string(l.vy);
  return "l_" + std::to_string(l.vy) + "/" + std::to_string(l.vx);
}

// Zeros / poles of x^a/y^b: order a*vx - b*vy on each line; the section y = inf has order +b.
inline std::vector<std::string> divisor_oracle(const std::vector<ValLine>& lines, long long a, long long b, bool zeros) {
  std::vector<std::string> out;
  if (zeros && b > 0) out.push_back("l_-inf");
  for (const ValLine& l : lines) {
    long long ord = a * l.vx - b * l.vy;
    if ((zeros && ord > 0) || (!zeros && ord < 0)) out.push_back(val_label(l));
  }
  return out;
}

// f in sqrt(I) for a monomial ideal localized at the origin: every term of f must be
// divisible by the support of some generator.
inline bool monomial_radical(const std::vector<std::pair<int, int>>& gens,
                             const std::vector<std::pair<int, int>>& f_terms) {
  for (auto [fu, fv] : f_terms) {
    bool hit = false;
    for (auto [gu, gv] : gens)
      if ((gu == 0 || fu > 0) && (gv == 0 || fv > 0)) hit = true;
    if (!hit) return false;
  }
  return true;
}

// A DVR section reduced to what the decision depends on.
struct DvrSection {
  bool infinite = false;
  int val = 0;      // valuation of r (or of 1/y in the infinite chart)
  long long lead = 1;  // leading coefficient
};

enum class Outcome { Homotopic, NotHomotopic };

// Lines of the fibre met by a section of slope sigma = val / v0.
inline std::vector<ruled::Slope> lines_met(const std::vector<ruled::Slope>& finite, const DvrSection& s, int v0) {
  using ruled::Slope;
  if (s.infinite) return {Slope(0, 1)};
  Slope sigma(s.val, v0);
  for (const Slope& t : finite)
    if (t == sigma) return {t};
  Slope lo = finite.front();
  std::size_t i = 0;
  for (; i < finite.size() && finite[i] < sigma; ++i) lo = finite[i];
  if (i == finite.size()) return {lo};
  return {lo, finite[i]};
}

inline Outcome decide_dvr(const std::vector<ruled::Slope>& finite, int v0, const DvrSection& a, const DvrSection& b) {
  using ruled::Slope;
  auto S1 = lines_met(finite, a, v0), S2 = lines_met(finite, b, v0);
  if (S1 != S2) return Outcome::NotHomotopic;
  long long k = S1.front().floor();
  bool more = false;
  for (const Slope& t : finite)
    if (Slope(k, 1) < t && t <= Slope(k + 1, 1)) more = true;
  if (!more) return Outcome::Homotopic;
  auto shifted = [&](const DvrSection& s) { return s.infinite ? 0 : s.val - static_cast<int>(k) * v0; };
  int w1 = shifted(a), w2 = shifted(b);
  if (w1 == 0 && w2 == 0) return Outcome::Homotopic;
  if (w1 >= v0 && w2 >= v0) return Outcome::Homotopic;
  return (w1 == w2 && a.lead == b.lead) ? Outcome::Homotopic : Outcome::NotHomotopic;
}

}  // namespace oracle
