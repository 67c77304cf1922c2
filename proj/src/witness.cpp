#include <functional>

#include "ruled/homotopy.hpp"

namespace ruled {

namespace {

const PolyExt::Key kT{0, 1};
const PolyExt::Key kS{1, 0};

PolyExt c(const RingElement& e) { return PolyExt(e); }

RingElement constant_of(const Ring& R, const PolyExt& p) {
  for (const auto& [k, v] : p.terms())
    if (k != PolyExt::Key{0, 0} && !v.is_negligible())
      fail(ErrorKind::PreconditionViolated, "expected a constant, got " + R.str(p));
  return p.coeff({0, 0});
}

// 1/(y - c) for a section, when it lies in R.
RingElement polar_value(const Ring& R, const SectionData& s, const Rat& cc) {
  RingElement k = R.constant(cc);
  if (s.is_finite()) {
    RingElement d = s.r - k;
    if (!R.is_unit(d)) fail(ErrorKind::PreconditionViolated, "section meets the polar point " + rat_str(cc));
    return R.div(R.one(), d);
  }
  RingElement d = R.one() - k * s.r;
  if (!R.is_unit(d)) fail(ErrorKind::PreconditionViolated, "section meets the polar point " + rat_str(cc));
  return R.div(s.r, d);
}

}  // namespace

Witness affine_line(const Ring&, const RingElement& r1, const RingElement& r2) {
  Witness w;
  w.kind = Witness::Kind::StraightLine;
  w.line.path = c(r2) + PolyExt::monomial(kT, r1 - r2);
  return w;
}

Witness build_straightline(const Ring& R, const GammaData& g, const SectionData& s1, const SectionData& s2) {
  if (!s1.is_finite() || !s2.is_finite())
    fail(ErrorKind::PreconditionViolated, "straight line needs both sections in the finite chart");
  if (!R.divides(g.r0, s1.r) || !R.divides(g.r0, s2.r))
    fail(ErrorKind::PreconditionViolated, "r0 must divide both sections");
  return affine_line(R, s1.r, s2.r);
}

Witness build_polar_line(const Ring& R, const SectionData& s1, const SectionData& s2, const Rat& cc) {
  RingElement w1 = polar_value(R, s1, cc), w2 = polar_value(R, s2, cc);
  Witness w;
  w.kind = Witness::Kind::StraightLine;
  w.line.polar = true;
  w.line.c = cc;
  w.line.path = c(w2) + PolyExt::monomial(kT, w1 - w2);
  return w;
}

Witness build_ghost_witness(const Ring& R, const GammaData& g, const SectionData& s1, const SectionData& s2) {
  if (!s1.is_finite() || !s2.is_finite())
    fail(ErrorKind::PreconditionViolated, "ghost witness needs both sections in the finite chart");
  const RingElement& r = s1.r;
  if (!R.divides(r, g.r0) || R.divides(g.r0, r))
    fail(ErrorKind::PreconditionViolated, "needs r | r0 and r0 not dividing r");
  auto w = R.unit_multiple(r, s2.r);
  if (!w) fail(ErrorKind::PreconditionViolated, "sections are not unit multiples of each other");
  RingElement delta = *w - R.one();
  RingElement q = R.div(g.r0, r);
  if (!R.radical_membership(delta, IdealHandle(R.model(), {r, q})))
    fail(ErrorKind::PreconditionViolated, "delta is not in the radical of <r, r0/r>");
  PolyExt one_dS = c(R.one()) + PolyExt::monomial(kS, delta);
  Witness out;
  out.kind = Witness::Kind::Ghost;
  Ghost& G = out.ghost;
  G.excluded = {c(q), one_dS};
  G.v2_unit = r;
  G.h1 = one_dS;
  G.h2 = c(R.one());
  G.hw_num = c(R.one()) + PolyExt::monomial({1, 1}, delta);
  G.hw_den = one_dS;
  G.blown_center = r;
  return out;
}

bool VerifyReport::ok() const {
  for (const ClauseResult& c : clauses)
    if (!c.pass) return false;
  return true;
}

const ClauseResult* VerifyReport::clause(const std::string& name) const {
  for (const ClauseResult& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct Ends {
  FibrePoint start, end;  // parameter 1 and 0 for lines, S = 0 and S = 1 for ghosts
};

struct Checker {
  const Ring& R;
  const NodalSurface& X;
  const GammaData& g;
  const std::vector<AvoidCenter>& avoid;
  bool main_regime;

  Ends ends(const Witness& w) const {
    switch (w.kind) {
      case Witness::Kind::StraightLine: {
        auto at = [&](int t) {
          RingElement v = constant_of(R, w.line.path.eval_T(R.constant(t)));
          if (!w.line.polar) return FibrePoint{v, R.one()};
          return FibrePoint{R.constant(w.line.c) * v + R.one(), v};
        };
        return {at(1), at(0)};
      }
      case Witness::Kind::Ghost: {
        auto at = [&](int s) {
          RingElement v = constant_of(R, w.ghost.h1.eval_S(R.constant(s)));
          return FibrePoint{w.ghost.blown_center * v, R.one()};
        };
        return {at(0), at(1)};
      }
      case Witness::Kind::Chain:
        if (w.steps.empty()) fail(ErrorKind::InvalidInput, "empty chain");
        return {ends(w.steps.front()).start, ends(w.steps.back()).end};
    }
    return {};
  }

  void endpoints(const Witness& w, const FibrePoint& p1, const FibrePoint& p2, ClauseResult& out) const {
    if (w.kind == Witness::Kind::Chain) {
      if (w.steps.empty()) {
        out.pass = false;
        out.detail = "empty chain";
        return;
      }
      for (std::size_t i = 0; i + 1 < w.steps.size(); ++i)
        if (!same_point(R, ends(w.steps[i]).end, ends(w.steps[i + 1]).start)) {
          out.pass = false;
          out.detail = "chain steps " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not meet";
          return;
        }
    }
    Ends e = ends(w);
    if (!same_point(R, e.start, p1)) {
      out.pass = false;
      out.detail = "start point differs from the first section";
    } else if (!same_point(R, e.end, p2)) {
      out.pass = false;
      out.detail = "end point differs from the second section";
    }
  }

  std::vector<const Witness*> leaves(const Witness& w) const {
    if (w.kind != Witness::Kind::Chain) return {&w};
    std::vector<const Witness*> out;
    for (const Witness& s : w.steps)
      for (const Witness* l : leaves(s)) out.push_back(l);
    return out;
  }

  void cover(const Witness& w, ClauseResult& out) const {
    if (w.kind != Witness::Kind::Ghost) return;
    std::vector<PolyExt> gens{PolyExt(w.ghost.blown_center)};
    for (const PolyExt& e : w.ghost.excluded) gens.push_back(e);
    if (!R.unit_ideal(gens)) {
      out.pass = false;
      out.detail = "<r> + excluded ideal is not the unit ideal";
    }
  }

  void gluing(const Witness& w, ClauseResult& out) const {
    if (w.kind != Witness::Kind::Ghost) return;
    const Ghost& G = w.ghost;
    PolyExt n0 = G.hw_num.eval_T(R.zero()), d0 = G.hw_den.eval_T(R.zero());
    PolyExt n1 = G.hw_num.eval_T(R.one()), d1 = G.hw_den.eval_T(R.one());
    if (!R.equal(n0 * G.h1, d0)) {
      out.pass = false;
      out.detail = "overlap value at T=0 is not 1/h1";
    } else if (!R.equal(n1 * G.h2, d1)) {
      out.pass = false;
      out.detail = "overlap value at T=1 is not 1/h2";
    }
  }

  struct Piece {
    std::string name;
    PolyExt y0, y1;
    std::vector<PolyExt> domain;
  };

  std::vector<Piece> pieces(const Witness& w) const {
    if (w.kind == Witness::Kind::StraightLine) {
      PolyExt one(R.one());
      if (!w.line.polar) return {{"line", w.line.path, one, {one}}};
      return {{"line", PolyExt(R.constant(w.line.c)) * w.line.path + one, w.line.path, {one}}};
    }
    const Ghost& G = w.ghost;
    return {{"V1", G.h1, PolyExt(R.one()), G.excluded},
            {"V2", G.h2, PolyExt(R.one()), {PolyExt(G.v2_unit)}},
            {"overlap", G.hw_den, G.hw_num, {PolyExt(G.blown_center) * G.hw_den}}};
  }

  void avoidance(const Witness& w, ClauseResult& out) const {
    std::vector<AvoidCenter> centers;
    if (w.kind == Witness::Kind::Ghost) {
      const RingElement& r = w.ghost.blown_center;
      centers.push_back({{r}, 0, 1});
      centers.push_back({{R.div(g.r0, r)}, 1, 0});
    }
    centers.insert(centers.end(), avoid.begin(), avoid.end());
    for (const Piece& p : pieces(w))
      for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        const AvoidCenter& C = centers[ci];
        std::vector<PolyExt> gens;
        for (const RingElement& e : C.ideal) gens.push_back(PolyExt(e));
        gens.push_back(PolyExt(R.constant(C.a)) * p.y0 + PolyExt(R.constant(C.b)) * p.y1);
        for (const PolyExt& k : p.domain)
          if (!R.radical_member(k, gens)) {
            out.pass = false;
            out.detail = p.name + " meets avoided centre " + std::to_string(ci);
            return;
          }
      }
  }

  void lift(const Witness& w, ClauseResult& out) const {
    if (w.kind != Witness::Kind::StraightLine || !main_regime || X.node_count() == 1) return;
    const StraightLine& L = w.line;
    if (L.polar) {
      if (L.c == 0) return;
      PolyExt f = PolyExt(R.constant(L.c)) * L.path + PolyExt(R.one());
      if (!R.unit_ideal({PolyExt(g.r0), f})) {
        out.pass = false;
        out.detail = "polar path meets y = 0 over the closed point";
      }
      return;
    }
    for (const Slope& t : X.finite_lines()) {
      if (t.a() == 0) continue;
      RingElement A = g.r0.pow(static_cast<unsigned>(t.a()));
      PolyExt pb = L.path.pow(static_cast<unsigned>(t.b()));
      for (const auto& [k, v] : pb.terms())
        if (!R.divides(A, v)) {
          out.pass = false;
          out.detail = "r0^" + std::to_string(t.a()) + " does not divide path^" + std::to_string(t.b()) +
                       " (line " + line_label(t) + ")";
          return;
        }
    }
  }
};

// Clause evaluation must not throw for well-formed input; ring failures become a failed clause.
void guarded(ClauseResult& out, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    out.pass = false;
    out.detail = e.what();
  }
}

}  // namespace

VerifyReport verify_witness(const Ring& R, const NodalSurface& X, const GammaData& g, const Witness& w,
                            const SectionData& s1, const SectionData& s2, const std::vector<AvoidCenter>& avoid) {
  bool main_regime = false;
  try {
    main_regime = classify_gamma(R, g) == Regime::Main;
  } catch (const Error&) {
  }
  Checker ch{R, X, g, avoid, main_regime};
  VerifyReport rep;
  ClauseResult ep{"endpoints", true, ""}, cov{"cover", true, ""}, glu{"gluing", true, ""}, av{"avoidance", true, ""},
      li{"lift", true, ""};
  guarded(ep, [&] { ch.endpoints(w, section_point(R, s1), section_point(R, s2), ep); });
  std::vector<const Witness*> parts;
  guarded(ep, [&] { parts = ch.leaves(w); });
  for (const Witness* p : parts) {
    if (cov.pass) guarded(cov, [&] { ch.cover(*p, cov); });
    if (glu.pass) guarded(glu, [&] { ch.gluing(*p, glu); });
    if (av.pass) guarded(av, [&] { ch.avoidance(*p, av); });
    if (li.pass) guarded(li, [&] { ch.lift(*p, li); });
  }
  rep.clauses = {ep, cov, glu, av, li};
  return rep;
}

VerifyReport verify_frame(const Ring& R, const Frame& f, const Witness& w) {
  return verify_witness(R, f.surface, f.gamma, w, f.s1, f.s2, f.avoid);
}

}  // namespace ruled
