#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ruled/blowuptree.hpp"
#include "ruled/errors.hpp"
#include "ruled/ring.hpp"
#include "ruled/surface.hpp"

namespace ruled {

struct GammaData {
  RingElement r0;  // pullback of the base uniformizer
};

enum class Regime { DegenerateToClosedPoint, ClosedToGeneric, Main };
const char* regime_name(Regime g);
Regime classify_gamma(const Ring& R, const GammaData& g);

// y = r in the finite chart, 1/y = r in the infinite chart.
struct SectionData {
  enum class Chart { Finite, Infinite };
  Chart chart = Chart::Finite;
  RingElement r;
  static SectionData finite(const RingElement& r) { return {Chart::Finite, r}; }
  static SectionData infinite(const RingElement& r) { return {Chart::Infinite, r}; }
  bool is_finite() const { return chart == Chart::Finite; }
};

std::string section_str(const Ring& R, const SectionData& s);
// Accepts "inf:<element>" for the infinite chart.
SectionData parse_section(const Ring& R, const std::string& text);

// Homogeneous fibre point [Y0 : Y1] over U.
struct FibrePoint {
  RingElement y0, y1;
};
FibrePoint section_point(const Ring& R, const SectionData& s);
bool same_point(const Ring& R, const FibrePoint& a, const FibrePoint& b);

struct Location {
  enum class Kind { Interior, Node, OffNodalRegion };
  Kind kind = Kind::Interior;
  Slope left, right;  // right used by Node
  std::string str() const;
  // Lines of the fibre met by the closed point (the line at infinity is not one of them).
  std::vector<Slope> lines() const;
  friend bool operator==(const Location& a, const Location& b) {
    return a.kind == b.kind && a.left == b.left && (a.kind != Kind::Node || a.right == b.right);
  }
};

// Throws LiftRequired when the section does not lift to X.
Location closed_point_image(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s);
// val(r) / val(r0), Dvr model, finite chart.
Rat section_slope(const Ring& R, const GammaData& g, const SectionData& s);
bool lifts(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s);
SectionData shift_section(const Ring& R, const GammaData& g, const SectionData& s, long long k);

// A closed subscheme to avoid: ideal of R together with the linear form a*Y0 + b*Y1.
struct AvoidCenter {
  std::vector<RingElement> ideal;
  Rat a, b;
};

struct StraightLine {
  PolyExt path;  // in T; T = 1 gives s1, T = 0 gives s2
  bool polar = false;
  Rat c;  // polar chart: 1/(y - c) = path
};

struct Ghost {
  std::vector<PolyExt> excluded;  // removed from the affine line (in S) to form V1
  RingElement v2_unit;            // inverted to form V2
  PolyExt h1;                     // Y0/Y1 on V1, scaled by blown_center
  PolyExt h2;                     // value on V2
  PolyExt hw_num, hw_den;         // Y1/Y0 on the overlap, in S and T
  RingElement blown_center;
};

struct Witness {
  enum class Kind { StraightLine, Ghost, Chain };
  Kind kind = Kind::StraightLine;
  StraightLine line;
  Ghost ghost;
  std::vector<Witness> steps;
};

// Surface, base datum and sections in the coordinates the witness lives in.
struct Frame {
  NodalSurface surface;
  GammaData gamma;
  SectionData s1, s2;
  std::vector<AvoidCenter> avoid;
};

struct Verdict {
  enum class Kind { Homotopic, NotHomotopic, Undecidable };
  enum class Level { Chain, Ghost1 };
  Kind kind = Kind::Undecidable;
  Level level = Level::Chain;
  std::optional<Witness> witness;
  std::optional<Frame> frame;
  std::string obstruction;
  std::optional<RingElement> delta;
  std::vector<RingElement> ideal;
  bool radical = false;  // obstruction concerns the radical of `ideal`
  ErrorKind reason = ErrorKind::PreconditionViolated;
};
const char* verdict_name(Verdict::Kind k);

// y = r1*T + r2*(1-T) with no divisibility requirement.
Witness affine_line(const Ring& R, const RingElement& r1, const RingElement& r2);
Witness build_straightline(const Ring& R, const GammaData& g, const SectionData& s1, const SectionData& s2);
Witness build_polar_line(const Ring& R, const SectionData& s1, const SectionData& s2, const Rat& c);
Witness build_ghost_witness(const Ring& R, const GammaData& g, const SectionData& s1, const SectionData& s2);

struct ClauseResult {
  std::string name;
  bool pass = true;
  std::string detail;
};
struct VerifyReport {
  std::vector<ClauseResult> clauses;
  bool ok() const;
  const ClauseResult* clause(const std::string& name) const;
};
VerifyReport verify_witness(const Ring& R, const NodalSurface& X, const GammaData& g, const Witness& w,
                            const SectionData& s1, const SectionData& s2, const std::vector<AvoidCenter>& avoid = {});
VerifyReport verify_frame(const Ring& R, const Frame& f, const Witness& w);

Verdict decide_nodal(const Ring& R, const NodalSurface& X, const GammaData& g, const SectionData& s1,
                     const SectionData& s2);
Verdict decide_general(const Ring& R, const BlowupTree& t, const GammaData& g, const SectionData& s1,
                       const SectionData& s2);

struct Partition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::pair<std::size_t, std::size_t>> undecided;
};
// decide(i, j) is called for i < j.
Partition partition_classes(std::size_t n, const std::function<Verdict(std::size_t, std::size_t)>& decide);
Partition partition_nodal(const Ring& R, const NodalSurface& X, const GammaData& g,
                          const std::vector<SectionData>& sections);
Partition partition_general(const Ring& R, const BlowupTree& t, const GammaData& g,
                            const std::vector<SectionData>& sections);

}  // namespace ruled
