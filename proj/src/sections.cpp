#include <algorithm>

#include "ruled/homotopy.hpp"

namespace ruled {

const char* regime_name(Regime g) {
  switch (g) {
    case Regime::DegenerateToClosedPoint: return "degenerate-to-closed-point";
    case Regime::ClosedToGeneric: return "closed-to-generic";
    case Regime::Main: return "main";
  }
  return "";
}

Regime classify_gamma(const Ring& R, const GammaData& g) {
  if (g.r0.is_exact_zero()) return Regime::DegenerateToClosedPoint;
  if (R.is_unit(g.r0)) return Regime::ClosedToGeneric;
  return Regime::Main;
}

std::string section_str(const Ring& R, const SectionData& s) {
  return (s.is_finite() ? "" : "inf:") + R.str(s.r);
}

SectionData parse_section(const Ring& R, const std::string& text) {
  if (text.rfind("inf:", 0) == 0) return SectionData::infinite(R.parse(text.substr(4)));
  return SectionData::finite(R.parse(text));
}

FibrePoint section_point(const Ring& R, const SectionData& s) {
  if (s.is_finite()) return {s.r, R.one()};
  return {R.one(), s.r};
}

bool same_point(const Ring& R, const FibrePoint& a, const FibrePoint& b) {
  return R.equal(a.y0 * b.y1, a.y1 * b.y0);
}

std::string Location::str() const {
  switch (kind) {
    case Kind::Interior: return "interior(" + line_label(left) + ")";
    case Kind::Node: return "node(" + line_label(left) + "," + line_label(right) + ")";
    case Kind::OffNodalRegion: return "off-nodal-region";
  }
  return "";
}

std::vector<Slope> Location::lines() const {
  switch (kind) {
    case Kind::Interior: return {left};
    case Kind::Node:
      if (right.is_inf()) return {left};
      return {left, right};
    case Kind::OffNodalRegion: return {Slope(0, 1)};
  }
  return {};
}

namespace {

void require_main(const Ring& R, const GammaData& g) {
  if (classify_gamma(R, g) != Regime::Main)
    fail(ErrorKind::PreconditionViolated, "needs r0 in the maximal ideal and nonzero");
}

}  // namespace

Location closed_point_image(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s) {
  require_main(R, g);
  Location loc;
  if (!s.is_finite()) {
    if (R.is_unit(s.r)) {
      loc.kind = Location::Kind::Interior;
      loc.left = Slope(0, 1);
    } else {
      loc.kind = Location::Kind::OffNodalRegion;
    }
    return loc;
  }
  std::vector<Slope> fin = X.finite_lines();
  if (s.r.is_exact_zero() || (s.r.is_negligible() && s.r.val() >= R.config().trunc)) {
    loc.kind = Location::Kind::Node;
    loc.left = fin.back();
    loc.right = Slope::infinity();
    return loc;
  }
  // -1: section above the line, 0: on it, +1: below it.
  std::vector<int> side;
  for (const Slope& t : fin) {
    RingElement A = g.r0.pow(static_cast<unsigned>(t.a()));
    RingElement B = s.r.pow(static_cast<unsigned>(t.b()));
    bool ab = R.divides(A, B), ba = R.divides(B, A);
    if (ab && ba) side.push_back(0);
    else if (ab) side.push_back(-1);
    else if (ba) side.push_back(1);
    else fail(ErrorKind::LiftRequired, "section " + R.str(s.r) + " does not lift across " + line_label(t));
  }
  if (!std::is_sorted(side.begin(), side.end()) || std::count(side.begin(), side.end(), 0) > 1)
    fail(ErrorKind::LiftRequired, "section " + R.str(s.r) + " has no consistent position");
  for (std::size_t i = 0; i < fin.size(); ++i)
    if (side[i] == 0) {
      loc.kind = Location::Kind::Interior;
      loc.left = fin[i];
      return loc;
    }
  std::size_t last = 0;
  for (std::size_t i = 0; i < fin.size(); ++i)
    if (side[i] < 0) last = i;
  loc.kind = Location::Kind::Node;
  loc.left = fin[last];
  loc.right = X.lines()[last + 1];
  return loc;
}

Rat section_slope(const Ring& R, const GammaData& g, const SectionData& s) {
  if (R.model() != Model::Dvr) fail(ErrorKind::ModelMismatch, "section slope needs the dvr model");
  if (!s.is_finite()) fail(ErrorKind::PreconditionViolated, "section slope needs the finite chart");
  require_main(R, g);
  Rat q(R.valuation(s.r), R.valuation(g.r0));
  q.canonicalize();
  return q;
}

bool lifts(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s) {
  require_main(R, g);
  if (!s.is_finite()) return true;
  for (const Slope& t : X.finite_lines()) {
    if (t.a() == 0) continue;
    RingElement A = g.r0.pow(static_cast<unsigned>(t.a()));
    RingElement B = s.r.pow(static_cast<unsigned>(t.b()));
    if (!R.pair_principal(A, B)) return false;
  }
  return true;
}

SectionData shift_section(const Ring& R, const GammaData& g, const SectionData& s, long long k) {
  if (k < 0) fail(ErrorKind::ShiftOutOfRange, "negative shift");
  if (k == 0) return s;
  if (!s.is_finite()) fail(ErrorKind::DivisionImpossible, "sections in the infinite chart do not shift");
  RingElement d = g.r0.pow(static_cast<unsigned>(k));
  if (!R.divides(d, s.r)) fail(ErrorKind::DivisionImpossible, R.str(d) + " does not divide " + R.str(s.r));
  return SectionData::finite(R.div(s.r, d));
}

}  // namespace ruled
