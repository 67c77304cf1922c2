#include "ruled/surface.hpp"

#include <sstream>

#include "ruled/errors.hpp"

namespace ruled {

void check_surface(const std::vector<Slope>& lines) {
  if (lines.size() < 2) fail(ErrorKind::InvalidInput, "a surface needs at least the lines 0 and inf");
  if (!(lines.front() == Slope(0, 1))) fail(ErrorKind::InvalidInput, "first line must be 0/1");
  if (!lines.back().is_inf()) fail(ErrorKind::InvalidInput, "last line must be inf");
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    if (!(lines[i] < lines[i + 1]))
      fail(ErrorKind::InvalidInput, "lines not increasing at " + lines[i].str() + ", " + lines[i + 1].str());
    if (!unimodular(lines[i], lines[i + 1]))
      fail(ErrorKind::InvalidInput, "lines " + lines[i].str() + " and " + lines[i + 1].str() + " do not meet in a node");
  }
  if (!lines[lines.size() - 2].is_integer()) fail(ErrorKind::InvalidInput, "largest finite line is not an integer");
}

NodalSurface::NodalSurface() : lines_{Slope(0, 1), Slope::infinity()} {}

NodalSurface::NodalSurface(std::vector<Slope> lines) : lines_(std::move(lines)) { check_surface(lines_); }

std::vector<Slope> NodalSurface::finite_lines() const { return {lines_.begin(), lines_.end() - 1}; }

bool NodalSurface::has_line(const Slope& s) const {
  for (const Slope& t : lines_)
    if (t == s) return true;
  return false;
}

NodalSurface p1() { return NodalSurface(); }

NodalSurface blowup_node(const NodalSurface& X, std::size_t i) {
  if (i >= X.node_count())
    fail(ErrorKind::IndexOutOfRange, "node " + std::to_string(i) + " of " + std::to_string(X.node_count()));
  std::vector<Slope> l = X.lines();
  l.insert(l.begin() + static_cast<long>(i) + 1, mediant(l[i], l[i + 1]));
  return NodalSurface(std::move(l));
}

std::string Monomial::str() const {
  auto part = [](const char* v, long long e) -> std::string {
    if (e == 0) return "";
    return std::string(v) + (e == 1 ? "" : "^" + std::to_string(e));
  };
  std::string num, den;
  if (x > 0) num = part("x", x);
  if (y > 0) num += (num.empty() ? "" : "*") + part("y", y);
  if (x < 0) den = part("x", -x);
  if (y < 0) den += (den.empty() ? "" : "*") + part("y", -y);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

std::pair<Monomial, Monomial> node_ideal(const NodalSurface& X, std::size_t i) {
  if (i >= X.node_count())
    fail(ErrorKind::IndexOutOfRange, "node " + std::to_string(i) + " of " + std::to_string(X.node_count()));
  const Slope& l = X.lines()[i];
  const Slope& r = X.lines()[i + 1];
  return {Monomial{r.a(), -r.b()}, Monomial{-l.a(), l.b()}};
}

std::string line_label(const Slope& s) {
  if (s.is_inf()) return "l_inf";
  if (s.is_integer()) return "l_" + std::to_string(s.a());
  return "l_" + std::to_string(s.a()) + "/" + std::to_string(s.b());
}

std::vector<std::string> divisor_support(const NodalSurface& X, const Slope& s, DivisorPart which) {
  if (s.is_inf() || s.is_zero() || Slope(1, 1) < s)
    fail(ErrorKind::InvalidSlope, "divisor support needs 0 < s <= 1, got " + s.str());
  if (!X.has_line(s)) fail(ErrorKind::InvalidSlope, "surface has no line " + s.str());
  std::vector<std::string> out;
  if (which == DivisorPart::Zeros) {
    out.push_back("l_-inf");
    for (const Slope& t : X.lines())
      if (t < s) out.push_back(line_label(t));
  } else {
    for (const Slope& t : X.lines())
      if (s < t) out.push_back(line_label(t));
  }
  return out;
}

bool is_in_Nprime(const NodalSurface& X) {
  for (const Slope& t : X.finite_lines())
    if (Slope(1, 1) < t) return false;
  return true;
}

long long etale_cover_degree(const Slope& s) {
  if (s.is_inf()) fail(ErrorKind::InvalidSlope, "cover degree of infinity");
  return s.b();
}

Slope shift_slope(const Slope& s, long long k) {
  if (k < 0) fail(ErrorKind::ShiftOutOfRange, "negative shift");
  if (s.is_inf()) return s;
  __int128 a = static_cast<__int128>(s.a()) - static_cast<__int128>(k) * s.b();
  if (a < 0) fail(ErrorKind::ShiftOutOfRange, "shift by " + std::to_string(k) + " takes " + s.str() + " below 0");
  return Slope(static_cast<std::int64_t>(a), s.b());
}

Slope add_integer(const Slope& s, long long k) {
  if (s.is_inf()) return s;
  return Slope(s.a() + k * s.b(), s.b());
}

NodalSurface nprime_reduction(const NodalSurface& X, long long k) {
  std::vector<Slope> l;
  Slope lo(k, 1), hi(k + 1, 1);
  for (const Slope& t : X.finite_lines())
    if (lo <= t && t <= hi) l.push_back(shift_slope(t, k));
  if (l.empty() || !(l.front() == Slope(0, 1)))
    fail(ErrorKind::InvalidInput, "surface has no line " + std::to_string(k));
  l.push_back(Slope::infinity());
  return NodalSurface(std::move(l));
}

NodalSurface raise_surface(const NodalSurface& X, long long k) {
  if (k < 0) fail(ErrorKind::ShiftOutOfRange, "negative raise");
  std::vector<Slope> l;
  for (long long j = 0; j < k; ++j) l.emplace_back(j, 1);
  for (const Slope& t : X.lines()) l.push_back(add_integer(t, k));
  return NodalSurface(std::move(l));
}

namespace {

bool is_paired(PatchKind k) { return k == PatchKind::UPair || k == PatchKind::UPairTilde; }
bool is_tilde(PatchKind k) { return k == PatchKind::UTilde || k == PatchKind::UPairTilde; }

}  // namespace

OpenPatch OpenPatch::make(PatchKind kind, const Slope& r, const Slope& s) {
  if (r.is_inf() || (is_paired(kind) && s.is_inf())) fail(ErrorKind::InvalidSlope, "patch parameters must be finite");
  if (is_tilde(kind) && !r.is_integer()) fail(ErrorKind::InvalidSlope, "tilde patches need an integer r, got " + r.str());
  if (is_paired(kind)) {
    // r - s = 1/(bd)  iff  s < r are unimodular neighbours
    if (!unimodular(s, r)) fail(ErrorKind::InvalidSlope, "r - s must be 1/(bd) for " + r.str() + ", " + s.str());
  }
  OpenPatch p;
  p.kind = kind;
  p.r = r;
  if (is_paired(kind)) p.s = s;
  return p;
}

std::string OpenPatch::str() const {
  auto q = [](const Slope& t) { return t.is_integer() ? std::to_string(t.a()) : t.str(); };
  std::string name = is_tilde(kind) ? "U~_{" : "U_{";
  name += q(r);
  if (is_paired(kind)) name += "," + q(s);
  return name + "}";
}

OpenPatch shift_patch(const OpenPatch& p, long long k) {
  Slope r = shift_slope(p.r, k);
  if (!is_paired(p.kind)) return OpenPatch::make(p.kind, r);
  return OpenPatch::make(p.kind, r, shift_slope(p.s, k));
}

std::string surface_dot(const NodalSurface& X) {
  std::ostringstream o;
  o << "graph surface {\n";
  for (const Slope& t : X.lines()) o << "  \"" << line_label(t) << "\";\n";
  for (std::size_t i = 0; i + 1 < X.lines().size(); ++i)
    o << "  \"" << line_label(X.lines()[i]) << "\" -- \"" << line_label(X.lines()[i + 1]) << "\" [label=\"node "
      << i << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace ruled
