#include <algorithm>
#include <functional>
#include <numeric>

#include "ruled/homotopy.hpp"

namespace ruled {

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Homotopic: return "homotopic";
    case Verdict::Kind::NotHomotopic: return "not-homotopic";
    case Verdict::Kind::Undecidable: return "undecidable";
  }
  return "";
}

namespace {

Verdict homotopic(Witness w, Frame f, Verdict::Level level) {
  Verdict v;
  v.kind = Verdict::Kind::Homotopic;
  v.level = level;
  v.witness = std::move(w);
  v.frame = std::move(f);
  return v;
}

Verdict not_homotopic(std::string why) {
  Verdict v;
  v.kind = Verdict::Kind::NotHomotopic;
  v.obstruction = std::move(why);
  return v;
}

Verdict undecidable(ErrorKind reason, std::string why) {
  Verdict v;
  v.kind = Verdict::Kind::Undecidable;
  v.reason = reason;
  v.obstruction = std::move(why);
  return v;
}

bool undecidable_kind(ErrorKind k) {
  return k == ErrorKind::RootUnavailable || k == ErrorKind::UnsupportedSupport ||
         k == ErrorKind::DegreeCapExceeded || k == ErrorKind::PrecisionExhausted;
}

Verdict wrap(const std::function<Verdict()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (undecidable_kind(e.kind())) return undecidable(e.kind(), e.what());
    throw;
  }
}

bool outside_max(const Ring& R, const SectionData& s) { return !s.is_finite() || R.is_unit(s.r); }

// Section rewritten in the finite chart when its value there lies in R.
std::optional<SectionData> as_finite(const Ring& R, const SectionData& s) {
  if (s.is_finite()) return s;
  if (R.is_unit(s.r)) return SectionData::finite(R.div(R.one(), s.r));
  return std::nullopt;
}

std::optional<SectionData> as_infinite(const Ring& R, const SectionData& s) {
  if (!s.is_finite()) return s;
  if (R.is_unit(s.r)) return SectionData::infinite(R.div(R.one(), s.r));
  return std::nullopt;
}

// Any two sections of the projective line are joined by at most two straight lines.
Witness chain_witness(const Ring& R, const SectionData& s1, const SectionData& s2) {
  auto f1 = as_finite(R, s1), f2 = as_finite(R, s2);
  if (f1 && f2) return affine_line(R, f1->r, f2->r);
  auto i1 = as_infinite(R, s1), i2 = as_infinite(R, s2);
  if (i1 && i2) return build_polar_line(R, *i1, *i2, 0);
  Witness w;
  w.kind = Witness::Kind::Chain;
  SectionData mid = SectionData::finite(R.one());
  if (f1) {
    w.steps.push_back(affine_line(R, f1->r, R.one()));
    w.steps.push_back(build_polar_line(R, mid, *i2, 0));
  } else {
    w.steps.push_back(build_polar_line(R, *i1, mid, 0));
    w.steps.push_back(affine_line(R, R.one(), f2->r));
  }
  return w;
}

std::string join_lines(const std::vector<Slope>& S) {
  std::string out;
  for (const Slope& s : S) out += (out.empty() ? "" : ",") + line_label(s);
  return "{" + out + "}";
}

Verdict decide_nprime(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s1,
                      const SectionData& s2) {
  Frame frame{X, g, s1, s2, {}};
  if (X.node_count() == 1) return homotopic(chain_witness(R, s1, s2), frame, Verdict::Level::Chain);
  if (outside_max(R, s1) && outside_max(R, s2)) {
    auto i1 = as_infinite(R, s1), i2 = as_infinite(R, s2);
    return homotopic(build_polar_line(R, *i1, *i2, 0), frame, Verdict::Level::Chain);
  }
  if (!s1.is_finite() || !s2.is_finite())
    fail(ErrorKind::ConsistencyFailure, "matching locations but only one section near the node");
  const RingElement &r0 = g.r0, &r1 = s1.r, &r2 = s2.r;
  if (R.divides(r0, r1) && R.divides(r0, r2))
    return homotopic(build_straightline(R, g, s1, s2), frame, Verdict::Level::Chain);
  for (const RingElement* ri : {&r1, &r2})
    if (!R.pair_principal(r0, *ri)) {
      Verdict v = not_homotopic("ideal <r0, " + R.str(*ri) + "> is not principal");
      v.ideal = {r0, *ri};
      return v;
    }
  auto w = R.unit_multiple(r1, r2);
  if (!w) {
    Verdict v = not_homotopic("<r0, r1> differs from <r0, r2>");
    v.ideal = {r0, r1, r2};
    return v;
  }
  RingElement delta = *w - R.one();
  std::vector<RingElement> I{r1, R.div(r0, r1)};
  if (!R.radical_membership(delta, IdealHandle(R.model(), I))) {
    Verdict v = not_homotopic("delta = r2/r1 - 1 is not in the radical of <r, r0/r>");
    v.delta = delta;
    v.ideal = I;
    v.radical = true;
    return v;
  }
  return homotopic(build_ghost_witness(R, g, s1, s2), frame, Verdict::Level::Ghost1);
}

}  // namespace

Verdict decide_nodal(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s1,
                     const SectionData& s2) {
  return wrap([&] {
    if (classify_gamma(R, g) != Regime::Main)
      return homotopic(chain_witness(R, s1, s2), Frame{X, g, s1, s2, {}}, Verdict::Level::Chain);
    Location l1 = closed_point_image(R, X, g, s1), l2 = closed_point_image(R, X, g, s2);
    std::vector<Slope> S1 = l1.lines(), S2 = l2.lines();
    if (S1 != S2)
      return not_homotopic("closed points differ: " + l1.str() + " meets " + join_lines(S1) + ", " + l2.str() +
                           " meets " + join_lines(S2));
    long long k = S1.front().floor();
    SectionData t1 = shift_section(R, g, s1, k), t2 = shift_section(R, g, s2, k);
    return decide_nprime(R, nprime_reduction(X, k), g, t1, t2);
  });
}

namespace {

struct RootPoint {
  Rat p, q;
};

RootPoint closed_point(const SectionData& s) {
  if (s.is_finite()) return {s.r.residue(), 1};
  return {1, s.r.residue()};
}

bool same_base(const RootPoint& a, const RootPoint& b) { return a.p * b.q == a.q * b.p; }

int find_root(const BlowupTree& t, const RootPoint& P) {
  for (std::size_t i = 0; i < t.roots.size(); ++i)
    if (t.roots[i].same_point(P.p, P.q)) return static_cast<int>(i);
  return -1;
}

Frame p1_frame(const GammaData& g, const SectionData& s1, const SectionData& s2) {
  return Frame{p1(), g, s1, s2, {}};
}

// Avoid centre for the base point [p:q] (y = p/q), seen in a frame where y was divided by r0^k.
AvoidCenter base_center(const GammaData& g, const RootPoint& P, long long k) {
  if (k > 0) return {{g.r0}, 0, 1};
  return {{g.r0}, P.q, -P.p};
}

// Blown-up base points the sections do not touch; only avoidance matters for them.
using FarPoints = std::vector<RootPoint>;

Verdict case_one(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                 const SectionData& s2, const FarPoints& far) {
  FarPoints pts = far;
  for (const TreeRoot& root : t.roots) pts.push_back({root.p, root.q});
  std::vector<AvoidCenter> centers;
  for (const RootPoint& P : pts) centers.push_back(base_center(g, P, 0));
  if (pts.size() == 1) {
    const RootPoint& P = pts[0];
    Frame f = p1_frame(g, s1, s2);
    f.avoid = centers;
    Witness w;
    if (P.q != 0) {
      w = build_polar_line(R, s1, s2, P.p / P.q);
    } else {
      auto f1 = as_finite(R, s1), f2 = as_finite(R, s2);
      w = affine_line(R, f1->r, f2->r);
      f.s1 = *f1;
      f.s2 = *f2;
    }
    return homotopic(w, f, Verdict::Level::Chain);
  }
  auto f1 = as_finite(R, s1), f2 = as_finite(R, s2);
  std::optional<SectionData> a = f1, b = f2;
  if (!f1 || !f2) {
    a = as_infinite(R, s1);
    b = as_infinite(R, s2);
  }
  if (!a || !b) return not_homotopic("sections meet the fibre at y = 0 and y = inf");
  RingElement diff = a->r - b->r;
  std::vector<RingElement> I{g.r0};
  if (!R.radical_membership(diff, IdealHandle(R.model(), I))) {
    Verdict v = not_homotopic("r - r' is not in the radical of <r0>");
    v.delta = diff;
    v.ideal = I;
    v.radical = true;
    return v;
  }
  Frame f{p1(), g, *a, *b, centers};
  Witness w = a->is_finite() ? affine_line(R, a->r, b->r) : build_polar_line(R, *a, *b, 0);
  return homotopic(w, f, Verdict::Level::Chain);
}

Verdict at_origin(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                  const SectionData& s2, const FarPoints& far);

// A section agreeing with the moved point to full precision is that point's constant section.
SectionData snap(const Ring& R, SectionData s) {
  if (s.r.model() == Model::Dvr && s.r.is_negligible() && s.r.val() >= R.config().trunc)
    s.r = RingElement::dvr_vanishing(INT_MAX);
  return s;
}

Verdict decide_tree(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                    const SectionData& s2, const FarPoints& far) {
  check_tree(t);
  if (classify_gamma(R, g) != Regime::Main)
    return homotopic(chain_witness(R, s1, s2), p1_frame(g, s1, s2), Verdict::Level::Chain);
  for (const TreeRoot& r : t.roots)
    if (r.on_line) fail(ErrorKind::InvalidInput, "tree roots must be base points");
  if (t.roots.empty() && far.empty())
    return homotopic(chain_witness(R, s1, s2), p1_frame(g, s1, s2), Verdict::Level::Chain);
  RootPoint P1 = closed_point(s1), P2 = closed_point(s2);
  int i1 = find_root(t, P1), i2 = find_root(t, P2);
  for (const RootPoint& P : far)
    if (same_base(P, P1) || same_base(P, P2)) fail(ErrorKind::UnsupportedSupport, "section meets an avoided point");
  if (i1 < 0 && i2 < 0) return case_one(R, t, g, s1, s2, far);
  if (i1 != i2) return not_homotopic("only one of the sections meets the blown-up support, or they meet it at different points");
  // Move the touched point to [0:1]; the other support points only need to be avoided.
  const TreeRoot& root = t.roots[i1];
  BlowupTree moved;
  moved.roots.push_back(TreeRoot::base(0, 1));
  moved.roots[0].children = root.children;
  FarPoints rest;
  for (std::size_t i = 0; i < t.roots.size(); ++i)
    if (static_cast<int>(i) != i1) rest.push_back({t.roots[i].p, t.roots[i].q});
  rest.insert(rest.end(), far.begin(), far.end());
  SectionData m1, m2;
  if (root.q != 0) {
    Rat c = root.p / root.q;
    RingElement cst = R.constant(c);
    auto f1 = as_finite(R, s1), f2 = as_finite(R, s2);
    m1 = snap(R, SectionData::finite(f1->r - cst));
    m2 = snap(R, SectionData::finite(f2->r - cst));
    for (RootPoint& P : rest) P = {P.p - c * P.q, P.q};
  } else {
    m1 = SectionData::finite(s1.r);
    m2 = SectionData::finite(s2.r);
    for (RootPoint& P : rest) P = {P.q, P.p};
  }
  return at_origin(R, moved, g, m1, m2, rest);
}

Verdict reverify(const Ring& R, Verdict v) {
  VerifyReport rep = verify_frame(R, *v.frame, *v.witness);
  if (!rep.ok()) return undecidable(ErrorKind::UnsupportedSupport, "witness meets the residual support");
  return v;
}

Verdict at_origin(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                  const SectionData& s2, const FarPoints& far) {
  Normalized N = normalize_pure_nodes(t);
  Verdict v = decide_nodal(R, N.surface, g, s1, s2);
  if (v.kind != Verdict::Kind::Homotopic || (N.residual.roots.empty() && far.empty())) return v;
  Location loc = closed_point_image(R, N.surface, g, s1);
  std::vector<Slope> S = loc.lines();
  long long k = S.front().floor();
  Frame& f = *v.frame;
  // A ghost lives in the chart y = r*Y0/Y1, where points away from the origin sit on Y1 = 0.
  for (const RootPoint& P : far)
    f.avoid.push_back(v.witness->kind == Witness::Kind::Ghost ? AvoidCenter{{v.witness->ghost.blown_center}, 0, 1}
                                                              : base_center(g, P, k));
  if (S.size() == 2) {
    if (v.witness->kind != Witness::Kind::Ghost) return reverify(R, v);
    const RingElement& r = v.witness->ghost.blown_center;
    for (const TreeRoot& res : N.residual.roots) {
      if (res.line <= loc.left) f.avoid.push_back({{r}, 0, 1});
      else f.avoid.push_back({{R.div(g.r0, r)}, 1, 0});
    }
    return reverify(R, v);
  }
  const Slope s = S.front();
  std::vector<const TreeRoot*> on;
  for (const TreeRoot& res : N.residual.roots)
    if (res.line == s) on.push_back(&res);
  if (on.empty()) return far.empty() ? v : reverify(R, v);
  if (loc.kind == Location::Kind::Node) {
    // Node with the line at infinity: residual points on l_s sit at y = 1/c after the shift.
    for (const TreeRoot* res : on) f.avoid.push_back({{g.r0}, res->at, -1});
    return reverify(R, v);
  }
  // Single line a/b: pass to the b-sheeted cover where the section becomes a unit.
  Slope sp = shift_slope(s, k);
  unsigned b = static_cast<unsigned>(etale_cover_degree(sp));
  RingElement root0 = R.nth_root(g.r0, b);
  RingElement scale = root0.pow(static_cast<unsigned>(sp.a()));
  SectionData n1 = SectionData::finite(R.div(f.s1.r, scale));
  SectionData n2 = SectionData::finite(R.div(f.s2.r, scale));
  BlowupTree base;
  for (const TreeRoot* res : on) {
    TreeRoot nr = TreeRoot::base(1, res->at);
    nr.children = res->children;
    base.roots.push_back(std::move(nr));
  }
  BlowupTree next = pullback_tree(base, b);
  if (n_x(next) >= n_x(t)) fail(ErrorKind::ConsistencyFailure, "blowup count did not drop in the cover step");
  // Points away from the origin go to y = inf on the cover.
  FarPoints up;
  if (!far.empty() && (k > 0 || sp.a() > 0)) up.push_back({1, 0});
  else
    for (const RootPoint& P : far) up.push_back(P);
  return decide_tree(R, next, GammaData{root0}, n1, n2, up);
}

}  // namespace

Verdict decide_general(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                       const SectionData& s2) {
  return wrap([&] { return decide_tree(R, t, g, s1, s2, {}); });
}

Partition partition_classes(std::size_t n, const std::function<Verdict(std::size_t, std::size_t)>& decide) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  Partition out;
  std::vector<std::pair<std::size_t, std::size_t>> negative;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Verdict v = decide(i, j);
      if (v.kind == Verdict::Kind::Homotopic) parent[find(i)] = find(j);
      else if (v.kind == Verdict::Kind::NotHomotopic) negative.push_back({i, j});
      else out.undecided.push_back({i, j});
    }
  for (auto [i, j] : negative)
    if (find(i) == find(j))
      fail(ErrorKind::ConsistencyFailure, "sections " + std::to_string(i) + " and " + std::to_string(j) +
                                              " are linked by homotopies but decided not homotopic");
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  out.classes = std::move(classes);
  return out;
}

Partition partition_nodal(const Ring& R, const NodalSurface& X, const GammaData& g,
                          const std::vector<SectionData>& sections) {
  return partition_classes(sections.size(),
                           [&](std::size_t i, std::size_t j) { return decide_nodal(R, X, g, sections[i], sections[j]); });
}

Partition partition_general(const Ring& R, const BlowupTree& t, const GammaData& g,
                            const std::vector<SectionData>& sections) {
  return partition_classes(sections.size(), [&](std::size_t i, std::size_t j) {
    return decide_general(R, t, g, sections[i], sections[j]);
  });
}

}  // namespace ruled
