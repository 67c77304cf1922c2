#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ruled/farey.hpp"

namespace ruled {

// Increasing, consecutively unimodular labels; first 0/1, last 1/0 (the line at infinity).
class NodalSurface {
 public:
  NodalSurface();  // P^1
  explicit NodalSurface(std::vector<Slope> lines);  // validates

  const std::vector<Slope>& lines() const { return lines_; }
  std::size_t node_count() const { return lines_.size() - 1; }
  std::vector<Slope> finite_lines() const;
  bool has_line(const Slope& s) const;
  Slope largest_finite() const { return lines_[lines_.size() - 2]; }

  friend bool operator==(const NodalSurface& a, const NodalSurface& b) { return a.lines_ == b.lines_; }

 private:
  std::vector<Slope> lines_;
};

// Throws InvalidInput with the first violated invariant.
void check_surface(const std::vector<Slope>& lines);

NodalSurface p1();
NodalSurface blowup_node(const NodalSurface& X, std::size_t i);

// x^a / y^b with integer exponents of either sign.
struct Monomial {
  long long x = 0, y = 0;
  std::string str() const;
  friend bool operator==(const Monomial& l, const Monomial& r) { return l.x == r.x && l.y == r.y; }
};
std::pair<Monomial, Monomial> node_ideal(const NodalSurface& X, std::size_t i);

enum class DivisorPart { Zeros, Poles };
// Labels "l_-inf", "l_0", "l_1/2", "l_inf", sorted by slope.
std::vector<std::string> divisor_support(const NodalSurface& X, const Slope& s, DivisorPart which);
std::string line_label(const Slope& s);

bool is_in_Nprime(const NodalSurface& X);
long long etale_cover_degree(const Slope& s);

// s - k; ShiftOutOfRange when negative.
Slope shift_slope(const Slope& s, long long k);
Slope add_integer(const Slope& s, long long k);

// Labels t - k for k <= t <= k + 1, plus infinity.
NodalSurface nprime_reduction(const NodalSurface& X, long long k);
// Inverse direction: lines 0..k-1 prepended and every label raised by k.
NodalSurface raise_surface(const NodalSurface& X, long long k);

enum class PatchKind { U, UTilde, UPair, UPairTilde };

struct OpenPatch {
  PatchKind kind = PatchKind::U;
  Slope r, s;  // s used by the paired kinds
  static OpenPatch make(PatchKind kind, const Slope& r, const Slope& s = Slope());
  std::string str() const;
  friend bool operator==(const OpenPatch& a, const OpenPatch& b) {
    return a.kind == b.kind && a.r == b.r && (a.kind == PatchKind::U || a.kind == PatchKind::UTilde || a.s == b.s);
  }
};
OpenPatch shift_patch(const OpenPatch& p, long long k);

std::string surface_dot(const NodalSurface& X);

}  // namespace ruled
