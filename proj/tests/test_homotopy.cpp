#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "ruled/homotopy.hpp"
#include "ruled/io.hpp"

using namespace ruled;

namespace {

const Ring D{RingConfig{Model::Dvr}};
const Ring B{RingConfig{Model::Bivariate}};
const Slope INF = Slope::infinity();

SectionData fd(const char* s) { return SectionData::finite(D.parse(s)); }
SectionData fb(const char* s) { return SectionData::finite(B.parse(s)); }
GammaData gd(const char* s) { return GammaData{D.parse(s)}; }
GammaData gb(const char* s) { return GammaData{B.parse(s)}; }
NodalSurface X01() { return NodalSurface({Slope(0, 1), Slope(1, 1), INF}); }

PolyExt S_() { return PolyExt::monomial({1, 0}, D.one()); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

BlowupTree tree(const char* json) { return tree_from_json(Json::parse(json)); }

// x^val * (lead + c1 x + c2 x^2)
RingElement dvr_element(int val, long long lead, long long c1, long long c2) {
  RingElement u = D.constant(Rat(static_cast<long>(lead))) + D.constant(Rat(static_cast<long>(c1))) * D.var("x") + D.constant(Rat(static_cast<long>(c2))) * D.var("x").pow(2);
  return D.var("x").pow(static_cast<unsigned>(val)) * u;
}

NodalSurface random_surface(std::mt19937_64& gen, int depth) {
  NodalSurface X = p1();
  for (int d = 0; d < depth; ++d) X = blowup_node(X, gen() % X.node_count());
  return X;
}

void expect_sound(const Ring& R, const Verdict& v) {
  if (v.kind != Verdict::Kind::Homotopic) return;
  ASSERT_TRUE(v.witness && v.frame);
  VerifyReport rep = verify_frame(R, *v.frame, *v.witness);
  EXPECT_TRUE(rep.ok()) << report_to_json(rep).dump();
}

}  // namespace

TEST(Gamma, Regimes) {
  EXPECT_EQ(classify_gamma(D, gd("0")), Regime::DegenerateToClosedPoint);
  EXPECT_EQ(classify_gamma(D, gd("1+x")), Regime::ClosedToGeneric);
  EXPECT_EQ(classify_gamma(D, gd("x^2")), Regime::Main);
}

TEST(Sections, ParseAndPrint) {
  SectionData s = parse_section(D, "inf:x^2");
  EXPECT_FALSE(s.is_finite());
  EXPECT_EQ(section_str(D, s), "inf:x^2");
  EXPECT_EQ(section_str(D, fd("2*x")), "2*x");
}

TEST(ClosedPoint, Examples) {
  EXPECT_EQ(closed_point_image(D, X01(), gd("x^2"), fd("x")), (Location{Location::Kind::Node, Slope(0, 1), Slope(1, 1)}));
  EXPECT_EQ(closed_point_image(D, X01(), gd("x"), fd("x")), (Location{Location::Kind::Interior, Slope(1, 1), Slope()}));
  EXPECT_EQ(closed_point_image(B, X01(), gb("u*v"), fb("u")), (Location{Location::Kind::Node, Slope(0, 1), Slope(1, 1)}));
  EXPECT_EQ(closed_point_image(D, X01(), gd("x"), fd("x^2")).str(), "node(l_1,l_inf)");
  EXPECT_EQ(closed_point_image(D, X01(), gd("x"), fd("1+x")).str(), "interior(l_0)");
  EXPECT_EQ(closed_point_image(D, X01(), gd("x"), SectionData::infinite(D.parse("x"))).str(), "off-nodal-region");
  EXPECT_EQ(closed_point_image(D, X01(), gd("x"), fd("0")).str(), "node(l_1,l_inf)");
}

TEST(ClosedPoint, DvrSlopeAgreesWithOracle) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 200; ++i) {
    NodalSurface X = random_surface(gen, static_cast<int>(gen() % 6));
    int v0 = 1 + static_cast<int>(gen() % 3), val = static_cast<int>(gen() % 10);
    GammaData g{D.var("x").pow(v0)};
    SectionData s = SectionData::finite(dvr_element(val, 1 + static_cast<long long>(gen() % 3), 1, 0));
    oracle::DvrSection o{false, val, 1};
    EXPECT_EQ(closed_point_image(D, X, g, s).lines(), oracle::lines_met(X.finite_lines(), o, v0));
    EXPECT_EQ(section_slope(D, g, s), Rat(val) / v0);
  }
}

TEST(Lifts, Examples) {
  std::mt19937_64 gen(4);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(lifts(D, random_surface(gen, 5), gd("x^3"), SectionData::finite(dvr_element(static_cast<int>(gen() % 7), 2, 1, 1))));
  EXPECT_TRUE(lifts(B, X01(), gb("u*v"), fb("u")));
  EXPECT_FALSE(lifts(B, X01(), gb("u"), fb("v")));
  EXPECT_EQ(kind_of([] { closed_point_image(B, X01(), gb("u"), fb("v")); }), ErrorKind::LiftRequired);
}

TEST(ShiftSection, Examples) {
  EXPECT_TRUE(D.equal(shift_section(D, gd("x^2"), fd("x^3"), 1).r, D.parse("x")));
  EXPECT_TRUE(D.equal(shift_section(D, gd("x"), fd("x"), 1).r, D.parse("1")));
  EXPECT_EQ(kind_of([] { shift_section(D, gd("x^2"), fd("x"), 1); }), ErrorKind::DivisionImpossible);
}

TEST(DecideNodal, Examples) {
  Verdict a = decide_nodal(D, X01(), gd("x^2"), fd("x"), fd("x*(1+x)"));
  EXPECT_EQ(a.kind, Verdict::Kind::Homotopic);
  EXPECT_EQ(a.level, Verdict::Level::Ghost1);
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(a.witness->kind, Witness::Kind::Ghost);
  expect_sound(D, a);

  Verdict b = decide_nodal(D, X01(), gd("x^2"), fd("x"), fd("2*x"));
  EXPECT_EQ(b.kind, Verdict::Kind::NotHomotopic);
  ASSERT_TRUE(b.delta);
  EXPECT_TRUE(D.equal(*b.delta, D.one()));
  EXPECT_TRUE(b.radical);

  Verdict c = decide_nodal(D, X01(), gd("x"), fd("x"), fd("2*x"));
  EXPECT_EQ(c.kind, Verdict::Kind::Homotopic);
  expect_sound(D, c);
}

TEST(DecideNodal, NonMainRegimesAreChainHomotopic) {
  for (const char* r0 : {"0", "1+x"}) {
    Verdict v = decide_nodal(D, X01(), gd(r0), fd("x"), fd("3+x"));
    EXPECT_EQ(v.kind, Verdict::Kind::Homotopic);
    EXPECT_EQ(v.level, Verdict::Level::Chain);
  }
}

TEST(DecideNodal, DifferentLocations) {
  Verdict v = decide_nodal(D, X01(), gd("x^2"), fd("x"), fd("x^3"));
  EXPECT_EQ(v.kind, Verdict::Kind::NotHomotopic);
  EXPECT_NE(v.obstruction.find("closed points differ"), std::string::npos);
}

TEST(DecideNodal, BivariateGhost) {
  Verdict v = decide_nodal(B, X01(), gb("u^2*v"), fb("u^2"), fb("u^2*(1+u)"));
  EXPECT_EQ(v.kind, Verdict::Kind::Homotopic);
  EXPECT_EQ(v.level, Verdict::Level::Ghost1);
  expect_sound(B, v);
  Verdict w = decide_nodal(B, X01(), gb("u^2*v"), fb("u^2"), fb("u^2*(1+u+v)"));
  EXPECT_EQ(w.kind, Verdict::Kind::Homotopic);
  Verdict n = decide_nodal(B, X01(), gb("u^2*v"), fb("u^2"), fb("2*u^2"));
  EXPECT_EQ(n.kind, Verdict::Kind::NotHomotopic);
}

TEST(DecideNodal, MatchesDvrOracle) {
  std::mt19937_64 gen(99);
  int homotopic = 0, not_homotopic = 0;
  for (int i = 0; i < 300; ++i) {
    NodalSurface X = random_surface(gen, static_cast<int>(gen() % 7));
    int v0 = 1 + static_cast<int>(gen() % 3);
    GammaData g{D.var("x").pow(v0)};
    auto make = [&](oracle::DvrSection& o) {
      o.infinite = gen() % 8 == 0;
      o.val = static_cast<int>(gen() % (3 * v0 + 2));
      o.lead = gen() % 2 ? 1 : 2;
      RingElement e = dvr_element(o.val, o.lead, static_cast<long long>(gen() % 3), static_cast<long long>(gen() % 3));
      return o.infinite ? SectionData::infinite(e) : SectionData::finite(e);
    };
    oracle::DvrSection o1, o2;
    SectionData s1 = make(o1), s2 = make(o2);
    if (gen() % 3 == 0) {  // same lead and valuation more often
      o2 = o1;
      s2 = o1.infinite ? SectionData::infinite(dvr_element(o1.val, o1.lead, 1, 2))
                       : SectionData::finite(dvr_element(o1.val, o1.lead, 1, 2));
    }
    Verdict v = decide_nodal(D, X, g, s1, s2);
    auto want = oracle::decide_dvr(X.finite_lines(), v0, o1, o2);
    ASSERT_NE(v.kind, Verdict::Kind::Undecidable) << v.obstruction;
    EXPECT_EQ(v.kind == Verdict::Kind::Homotopic, want == oracle::Outcome::Homotopic)
        << surface_to_json(X).dump() << " r0=x^" << v0 << " " << section_str(D, s1) << " " << section_str(D, s2);
    expect_sound(D, v);
    (v.kind == Verdict::Kind::Homotopic ? homotopic : not_homotopic)++;
  }
  EXPECT_GT(homotopic, 30);
  EXPECT_GT(not_homotopic, 30);
}

TEST(DecideNodal, UnitAndShiftInvariance) {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 120; ++i) {
    NodalSurface X = nprime_reduction(random_surface(gen, static_cast<int>(gen() % 6)), 0);
    int v0 = 1 + static_cast<int>(gen() % 3);
    GammaData g{D.var("x").pow(v0)};
    RingElement r1 = dvr_element(static_cast<int>(gen() % (2 * v0 + 1)), 1 + static_cast<long long>(gen() % 2), 1, 0);
    RingElement r2 = gen() % 2 ? r1 * D.parse("1+x") : dvr_element(static_cast<int>(gen() % (2 * v0 + 1)), 1, 0, 1);
    Verdict base = decide_nodal(D, X, g, SectionData::finite(r1), SectionData::finite(r2));
    RingElement w = D.parse("3-x+x^2");
    Verdict scaled = decide_nodal(D, X, g, SectionData::finite(w * r1), SectionData::finite(w * r2));
    EXPECT_EQ(base.kind, scaled.kind);
    for (unsigned k = 1; k <= 2; ++k) {
      RingElement up = g.r0.pow(k);
      Verdict raised = decide_nodal(D, raise_surface(X, k), g, SectionData::finite(r1 * up), SectionData::finite(r2 * up));
      EXPECT_EQ(base.kind, raised.kind);
      expect_sound(D, raised);
    }
  }
}

TEST(DecideNodal, CrossModelEmbedding) {
  std::mt19937_64 gen(8);
  for (int i = 0; i < 40; ++i) {
    NodalSurface X = random_surface(gen, static_cast<int>(gen() % 5));
    int v0 = 1 + static_cast<int>(gen() % 2);
    RingElement r0 = D.var("x").pow(v0);
    RingElement r1 = dvr_element(static_cast<int>(gen() % (2 * v0 + 1)), 1, static_cast<long long>(gen() % 2), 0);
    RingElement r2 = gen() % 2 ? r1 * D.parse("1+x") : dvr_element(static_cast<int>(gen() % (2 * v0 + 1)), 2, 1, 0);
    Verdict a = decide_nodal(D, X, GammaData{r0}, SectionData::finite(r1), SectionData::finite(r2));
    Verdict b = decide_nodal(B, X, GammaData{Ring::embed_bivariate(r0)}, SectionData::finite(Ring::embed_bivariate(r1)),
                             SectionData::finite(Ring::embed_bivariate(r2)));
    EXPECT_EQ(a.kind, b.kind);
    expect_sound(B, b);
  }
}

TEST(StraightLine, Examples) {
  Witness w = build_straightline(D, gd("x"), fd("x"), fd("x+x^2"));
  PolyExt want = PolyExt(D.parse("x+x^2")) + PolyExt::monomial({0, 1}, D.parse("-x^2"));
  EXPECT_TRUE(D.equal(w.line.path, want)) << D.str(w.line.path);
  Witness c = build_straightline(D, gd("x"), fd("x"), fd("x"));
  EXPECT_TRUE(D.equal(c.line.path, PolyExt(D.parse("x"))));
  EXPECT_TRUE(verify_witness(D, X01(), gd("x"), c, fd("x"), fd("x")).ok());
  EXPECT_EQ(kind_of([] { build_straightline(D, gd("x^2"), fd("x"), fd("2*x")); }), ErrorKind::PreconditionViolated);
}

TEST(StraightLine, LiftClauseCatchesBadPath) {
  // y = x + T*(x^2 - x) lies in <x> but not in <x^2>: the lift across l_2 fails
  NodalSurface X({Slope(0, 1), Slope(1, 1), Slope(2, 1), INF});
  Witness w = affine_line(D, D.parse("x^2"), D.parse("x"));
  VerifyReport rep = verify_witness(D, X, gd("x"), w, fd("x^2"), fd("x"));
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.clause("lift")->pass);
  EXPECT_TRUE(rep.clause("endpoints")->pass);
}

TEST(Ghost, DvrExample) {
  Witness w = build_ghost_witness(D, gd("x^2"), fd("x"), fd("x*(1+x)"));
  const Ghost& G = w.ghost;
  EXPECT_TRUE(D.unit_ideal(G.excluded));
  PolyExt one_xS = PolyExt(D.one()) + PolyExt::monomial({1, 0}, D.var("x"));
  EXPECT_TRUE(D.equal(G.h1, one_xS));
  EXPECT_TRUE(D.equal(G.h1.eval_S(D.zero()), PolyExt(D.one())));
  EXPECT_TRUE(D.equal(G.h1.eval_S(D.one()), PolyExt(D.parse("1+x"))));
  EXPECT_TRUE(D.equal(G.blown_center, D.var("x")));
  EXPECT_TRUE(verify_witness(D, X01(), gd("x^2"), w, fd("x"), fd("x*(1+x)")).ok());
}

TEST(Ghost, BivariateExample) {
  Witness w = build_ghost_witness(B, gb("u^2*v"), fb("u^2"), fb("u^2*(1+u)"));
  const Ghost& G = w.ghost;
  EXPECT_FALSE(B.unit_ideal(G.excluded));
  std::vector<PolyExt> with_r = G.excluded;
  with_r.push_back(PolyExt(B.parse("u^2")));
  EXPECT_TRUE(B.unit_ideal(with_r));
  // 1 = (1+uS)(1-uS) + S^2 u^2
  PolyExt S = PolyExt::monomial({1, 0}, B.one()), u = PolyExt(B.var("u"));
  PolyExt lhs = (PolyExt(B.one()) + u * S) * (PolyExt(B.one()) - u * S) + S * S * u * u;
  EXPECT_TRUE(B.equal(lhs, PolyExt(B.one())));
  EXPECT_TRUE(verify_witness(B, X01(), gb("u^2*v"), w, fb("u^2"), fb("u^2*(1+u)")).ok());
}

TEST(Ghost, DegenerateDelta) {
  Witness w = build_ghost_witness(D, gd("x^2"), fd("x"), fd("x"));
  EXPECT_TRUE(D.equal(w.ghost.h1, PolyExt(D.one())));
  EXPECT_TRUE(verify_witness(D, X01(), gd("x^2"), w, fd("x"), fd("x")).ok());
}

TEST(Ghost, Preconditions) {
  EXPECT_EQ(kind_of([] { build_ghost_witness(D, gd("x^2"), fd("x"), fd("2*x")); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([] { build_ghost_witness(D, gd("x"), fd("x"), fd("x")); }), ErrorKind::PreconditionViolated);
}

TEST(Ghost, DeltaReplacedByOneIsRejected) {
  const SectionData s1 = fd("x"), s2 = fd("x*(1+x)");
  Witness w = build_ghost_witness(D, gd("x^2"), s1, s2);
  PolyExt one_S = PolyExt(D.one()) + S_();
  // same V1, maps built from delta = 1: Y0 = 1 + S vanishes over the closed point
  w.ghost.h1 = one_S;
  w.ghost.hw_den = one_S;
  w.ghost.hw_num = PolyExt(D.one()) + PolyExt::monomial({1, 1}, D.one());
  VerifyReport rep = verify_witness(D, X01(), gd("x^2"), w, s1, s2);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.clause("avoidance")->pass) << report_to_json(rep).dump();
  // shrinking V1 along with the maps loses the cover instead
  w.ghost.excluded[1] = one_S;
  VerifyReport rep2 = verify_witness(D, X01(), gd("x^2"), w, s1, s2);
  EXPECT_FALSE(rep2.ok());
  EXPECT_FALSE(rep2.clause("cover")->pass);
  EXPECT_TRUE(rep2.clause("avoidance")->pass);
}

TEST(Ghost, SingleClauseMutations) {
  const GammaData g = gd("x^2");
  const SectionData s1 = fd("x"), s2 = fd("x*(1+x)");
  const Witness good = build_ghost_witness(D, g, s1, s2);
  const RingElement r = D.var("x"), q = D.var("x");
  auto only_fails = [&](const VerifyReport& rep, const std::string& name) {
    for (const ClauseResult& c : rep.clauses) EXPECT_EQ(c.pass, c.name != name) << name << ": " << c.name << " " << c.detail;
  };
  only_fails(verify_witness(D, X01(), g, good, s1, SectionData::finite(s2.r + r)), "endpoints");
  Witness cover = good;
  cover.ghost.excluded = {PolyExt(q)};
  only_fails(verify_witness(D, X01(), g, cover, s1, s2), "cover");
  Witness glue = good;
  glue.ghost.hw_num = glue.ghost.hw_num + PolyExt::monomial({0, 1}, D.one()) * glue.ghost.hw_den;
  only_fails(verify_witness(D, X01(), g, glue, s1, s2), "gluing");
  only_fails(verify_witness(D, X01(), g, good, s1, s2, {AvoidCenter{{q}, 1, -1}}), "avoidance");
}

TEST(DecideGeneral, Examples) {
  BlowupTree two = tree(R"({"roots":[{"base":"[0:1]","children":[]},{"base":"[1:0]","children":[]}]})");
  Verdict a = decide_general(D, two, gd("x"), fd("1"), fd("1+x"));
  EXPECT_EQ(a.kind, Verdict::Kind::Homotopic);
  expect_sound(D, a);
  Verdict b = decide_general(D, two, gd("x"), fd("1"), fd("2"));
  EXPECT_EQ(b.kind, Verdict::Kind::NotHomotopic);
  EXPECT_TRUE(b.radical);
  BlowupTree one = tree(R"({"roots":[{"base":"[0:1]","children":[]}]})");
  Verdict c = decide_general(D, one, gd("x"), fd("1"), fd("2"));
  EXPECT_EQ(c.kind, Verdict::Kind::Homotopic);
  expect_sound(D, c);
}

TEST(DecideGeneral, PureNodesAgreeWithNodal) {
  BlowupTree t = tree(R"({"roots":[{"base":"[0:1]","children":[{"at":"node-left","children":[]}]}]})");
  NodalSurface X({Slope(0, 1), Slope(1, 2), Slope(1, 1), INF});
  std::vector<const char*> secs{"x", "x*(1+x)", "2*x", "x^2", "x^3", "x^2*(1-x)"};
  for (const char* a : secs)
    for (const char* b : secs)
      for (const char* r0 : {"x^2", "x^3"})
        EXPECT_EQ(decide_general(D, t, gd(r0), fd(a), fd(b)).kind, decide_nodal(D, X, gd(r0), fd(a), fd(b)).kind)
            << a << " " << b << " " << r0;
}

TEST(DecideGeneral, ResidualPointsAndCovers) {
  struct Case {
    const char* tree;
    const char* r0;
    const char* s1;
    const char* s2;
    Verdict::Kind want;
  };
  const char* free2 = R"({"roots":[{"base":"[0:1]","children":[{"at":{"free":"2"},"children":[]}]}]})";
  const char* free4 = R"({"roots":[{"base":"[0:1]","children":[{"at":"node-left","children":[{"at":{"free":"4"},"children":[]}]}]}]})";
  const char* deep = R"({"roots":[{"base":"[0:1]","children":[{"at":{"free":"2"},"children":[{"at":"node-left","children":[]}]}]}]})";
  const char* pair = R"({"roots":[{"base":"[0:1]","children":[{"at":"node-left","children":[]}]},{"base":"[1:1]","children":[]}]})";
  const char* free2sq = R"({"roots":[{"base":"[0:1]","children":[{"at":"node-left","children":[{"at":{"free":"2"},"children":[]}]}]}]})";
  std::vector<Case> cases{
      {free2, "x", "3*x", "5*x", Verdict::Kind::Homotopic},
      {free2, "x", "x/2", "x/2+x^2", Verdict::Kind::Homotopic},
      {free2, "x", "x/2", "x/3", Verdict::Kind::NotHomotopic},
      {free4, "x^2", "x/2", "x/2+x^2", Verdict::Kind::Homotopic},
      {free4, "x^2", "x/2", "-x/2", Verdict::Kind::NotHomotopic},
      {free4, "x^2", "x/2", "x/3", Verdict::Kind::NotHomotopic},
      {deep, "x", "x/2", "x/2+x^3", Verdict::Kind::Homotopic},
      {pair, "x^2", "x", "x*(1+x)", Verdict::Kind::Homotopic},
      {pair, "x^2", "x", "2*x", Verdict::Kind::NotHomotopic},
      {pair, "x^2", "x^3", "x^2", Verdict::Kind::Homotopic},
      {pair, "x^2", "1+x", "3", Verdict::Kind::NotHomotopic},
      {free2sq, "x^2", "x", "x+x^2", Verdict::Kind::Undecidable},
  };
  for (const Case& c : cases) {
    Verdict v = decide_general(D, tree(c.tree), gd(c.r0), fd(c.s1), fd(c.s2));
    EXPECT_EQ(v.kind, c.want) << c.tree << " " << c.s1 << " " << c.s2 << " " << v.obstruction;
    expect_sound(D, v);
  }
  Verdict u = decide_general(D, tree(free2sq), gd("x^2"), fd("x"), fd("x+x^2"));
  EXPECT_EQ(u.reason, ErrorKind::RootUnavailable);
}

TEST(Partition, Examples) {
  auto secs = [](std::vector<const char*> v) {
    std::vector<SectionData> out;
    for (const char* s : v) out.push_back(fd(s));
    return out;
  };
  Partition p = partition_nodal(D, X01(), gd("x^2"), secs({"x", "2*x", "x*(1+x)", "2*x*(1+x^2)"}));
  EXPECT_EQ(p.classes, (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(p.undecided.empty());
  EXPECT_EQ(partition_nodal(D, X01(), gd("x^2"), secs({"x"})).classes, (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_EQ(partition_nodal(D, X01(), gd("x^2"), secs({"x", "x"})).classes,
            (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(Partition, ContradictionIsReported) {
  auto decide = [](std::size_t i, std::size_t j) {
    Verdict v;
    v.kind = (i == 0 && j == 2) ? Verdict::Kind::NotHomotopic : Verdict::Kind::Homotopic;
    return v;
  };
  EXPECT_EQ(kind_of([&] { partition_classes(3, decide); }), ErrorKind::ConsistencyFailure);
}
