#include "ruled/io.hpp"

#include "ruled/errors.hpp"

namespace ruled {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  fail(ErrorKind::InvalidInput, "field '" + field + "': " + msg);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "." + key, "missing");
  return *it;
}

std::string need_string(const Json& j, const std::string& field) {
  if (!j.is_string()) bad(field, "expected a string");
  return j.get<std::string>();
}

const Json& need_array(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  return j;
}

Slope slope_from(const Json& j, const std::string& field) {
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return Slope(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  bad(field, "expected [a,b] or \"a/b\"");
}

RingElement element_from(const Ring& R, const Json& j, const std::string& field) {
  return R.parse(need_string(j, field));
}

Json vertex_to_json(const TreeVertex& v);

Json children_to_json(const std::vector<TreeVertex>& ch) {
  Json a = Json::array();
  for (const TreeVertex& v : ch) a.push_back(vertex_to_json(v));
  return a;
}

Json vertex_to_json(const TreeVertex& v) {
  Json j;
  switch (v.at.kind) {
    case Position::Kind::NodeLeft: j["at"] = "node-left"; break;
    case Position::Kind::NodeRight: j["at"] = "node-right"; break;
    case Position::Kind::Free: j["at"] = Json{{"free", rat_str(v.at.coord)}}; break;
  }
  j["children"] = children_to_json(v.children);
  return j;
}

std::vector<TreeVertex> children_from(const Json& j, const std::string& field) {
  std::vector<TreeVertex> out;
  if (j.is_null()) return out;
  need_array(j, field);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string f = field + "[" + std::to_string(i) + "]";
    const Json& at = need(j[i], "at", f);
    TreeVertex v;
    if (at.is_string() && at == "node-left") {
      v.at.kind = Position::Kind::NodeLeft;
    } else if (at.is_string() && at == "node-right") {
      v.at.kind = Position::Kind::NodeRight;
    } else if (at.is_object() && at.contains("free")) {
      v.at.kind = Position::Kind::Free;
      const Json& c = at["free"];
      v.at.coord = c.is_number_integer() ? Rat(c.get<long>()) : parse_rat(need_string(c, f + ".at.free"));
    } else {
      bad(f + ".at", "expected \"node-left\", \"node-right\" or {\"free\": c}");
    }
    v.children = children_from(j[i].value("children", Json()), f + ".children");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::pair<Rat, Rat> parse_point(const std::string& s) {
  if (s.size() < 5 || s.front() != '[' || s.back() != ']') fail(ErrorKind::ParseError, "bad point '" + s + "'");
  auto colon = s.find(':');
  if (colon == std::string::npos) fail(ErrorKind::ParseError, "bad point '" + s + "'");
  Rat p = parse_rat(s.substr(1, colon - 1)), q = parse_rat(s.substr(colon + 1, s.size() - colon - 2));
  if (p == 0 && q == 0) fail(ErrorKind::InvalidInput, "point [0:0]");
  return {p, q};
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, what + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

Json surface_to_json(const NodalSurface& X) {
  Json lines = Json::array();
  for (const Slope& s : X.lines()) lines.push_back({s.a(), s.b()});
  return Json{{"lines", lines}};
}

NodalSurface surface_from_json(const Json& j) {
  const Json& lines = need_array(need(j, "lines", "surface"), "surface.lines");
  std::vector<Slope> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    out.push_back(slope_from(lines[i], "surface.lines[" + std::to_string(i) + "]"));
  return NodalSurface(std::move(out));
}

Json tree_to_json(const BlowupTree& t) {
  Json roots = Json::array();
  for (const TreeRoot& r : t.roots) {
    Json j;
    if (r.on_line) {
      j["line"] = r.line.str();
      j["at"] = rat_str(r.at);
    } else {
      j["base"] = "[" + rat_str(r.p) + ":" + rat_str(r.q) + "]";
    }
    j["children"] = children_to_json(r.children);
    roots.push_back(j);
  }
  return Json{{"roots", roots}};
}

BlowupTree tree_from_json(const Json& j) {
  const Json& roots = need_array(need(j, "roots", "tree"), "tree.roots");
  BlowupTree t;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::string f = "tree.roots[" + std::to_string(i) + "]";
    const Json& r = roots[i];
    TreeRoot root;
    if (r.is_object() && r.contains("base")) {
      auto [p, q] = parse_point(need_string(r["base"], f + ".base"));
      root = TreeRoot::base(p, q);
    } else if (r.is_object() && r.contains("line")) {
      root = TreeRoot::residual(slope_from(r["line"], f + ".line"), parse_rat(need_string(need(r, "at", f), f + ".at")));
    } else {
      bad(f, "expected \"base\" or \"line\"");
    }
    root.children = children_from(r.value("children", Json()), f + ".children");
    t.roots.push_back(std::move(root));
  }
  check_tree(t);
  return t;
}

Json polyext_to_json(const Ring& R, const PolyExt& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back(Json{{"S", k.first}, {"T", k.second}, {"c", R.str(c)}});
  return a;
}

PolyExt polyext_from_json(const Ring& R, const Json& j) {
  need_array(j, "polynomial");
  PolyExt p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string f = "term[" + std::to_string(i) + "]";
    int s = j[i].value("S", 0), t = j[i].value("T", 0);
    if (s < 0 || t < 0) bad(f, "negative exponent");
    p = p + PolyExt::monomial({s, t}, element_from(R, need(j[i], "c", f), f + ".c"));
  }
  return p;
}

Json witness_to_json(const Ring& R, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::StraightLine: {
      Json j{{"kind", "straight-line"}, {"chart", w.line.polar ? "polar" : "affine"}};
      if (w.line.polar) j["c"] = rat_str(w.line.c);
      j["path"] = polyext_to_json(R, w.line.path);
      return j;
    }
    case Witness::Kind::Ghost: {
      const Ghost& G = w.ghost;
      Json ex = Json::array();
      for (const PolyExt& e : G.excluded) ex.push_back(polyext_to_json(R, e));
      return Json{{"kind", "ghost"},
                  {"excluded_ideal_V1", ex},
                  {"V2_unit", R.str(G.v2_unit)},
                  {"h1", polyext_to_json(R, G.h1)},
                  {"h2", polyext_to_json(R, G.h2)},
                  {"hW", Json{{"num", polyext_to_json(R, G.hw_num)}, {"den", polyext_to_json(R, G.hw_den)}}},
                  {"blown_center", R.str(G.blown_center)}};
    }
    case Witness::Kind::Chain: {
      Json steps = Json::array();
      for (const Witness& s : w.steps) steps.push_back(witness_to_json(R, s));
      return Json{{"kind", "chain"}, {"steps", steps}};
    }
  }
  return {};
}

Witness witness_from_json(const Ring& R, const Json& j) {
  std::string kind = need_string(need(j, "kind", "witness"), "witness.kind");
  Witness w;
  if (kind == "straight-line") {
    w.kind = Witness::Kind::StraightLine;
    std::string chart = j.value("chart", "affine");
    if (chart != "affine" && chart != "polar") bad("witness.chart", "expected affine or polar");
    w.line.polar = chart == "polar";
    if (w.line.polar) w.line.c = parse_rat(j.value("c", "0"));
    w.line.path = polyext_from_json(R, need(j, "path", "witness"));
  } else if (kind == "ghost") {
    w.kind = Witness::Kind::Ghost;
    Ghost& G = w.ghost;
    const Json& ex = need_array(need(j, "excluded_ideal_V1", "witness"), "witness.excluded_ideal_V1");
    for (const Json& e : ex) G.excluded.push_back(polyext_from_json(R, e));
    G.v2_unit = element_from(R, need(j, "V2_unit", "witness"), "witness.V2_unit");
    G.h1 = polyext_from_json(R, need(j, "h1", "witness"));
    G.h2 = polyext_from_json(R, need(j, "h2", "witness"));
    const Json& hw = need(j, "hW", "witness");
    G.hw_num = polyext_from_json(R, need(hw, "num", "witness.hW"));
    G.hw_den = polyext_from_json(R, need(hw, "den", "witness.hW"));
    G.blown_center = element_from(R, need(j, "blown_center", "witness"), "witness.blown_center");
  } else if (kind == "chain") {
    w.kind = Witness::Kind::Chain;
    for (const Json& s : need_array(need(j, "steps", "witness"), "witness.steps")) w.steps.push_back(witness_from_json(R, s));
  } else {
    bad("witness.kind", "unknown kind '" + kind + "'");
  }
  return w;
}

Json frame_to_json(const Ring& R, const Frame& f) {
  Json avoid = Json::array();
  for (const AvoidCenter& c : f.avoid) {
    Json ideal = Json::array();
    for (const RingElement& e : c.ideal) ideal.push_back(R.str(e));
    avoid.push_back(Json{{"ideal", ideal}, {"form", Json::array({rat_str(c.a), rat_str(c.b)})}});
  }
  return Json{{"surface", surface_to_json(f.surface)},
              {"r0", R.str(f.gamma.r0)},
              {"s1", section_str(R, f.s1)},
              {"s2", section_str(R, f.s2)},
              {"avoid", avoid}};
}

Frame frame_from_json(const Ring& R, const Json& j) {
  Frame f{j.contains("surface") ? surface_from_json(j["surface"]) : p1(),
          GammaData{element_from(R, need(j, "r0", "certificate"), "certificate.r0")},
          parse_section(R, need_string(need(j, "s1", "certificate"), "certificate.s1")),
          parse_section(R, need_string(need(j, "s2", "certificate"), "certificate.s2")),
          {}};
  if (j.contains("avoid")) {
    const Json& a = need_array(j["avoid"], "certificate.avoid");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string fld = "certificate.avoid[" + std::to_string(i) + "]";
      AvoidCenter c;
      for (const Json& e : need_array(need(a[i], "ideal", fld), fld + ".ideal")) c.ideal.push_back(element_from(R, e, fld + ".ideal"));
      const Json& form = need_array(need(a[i], "form", fld), fld + ".form");
      if (form.size() != 2) bad(fld + ".form", "expected two coefficients");
      c.a = parse_rat(need_string(form[0], fld + ".form"));
      c.b = parse_rat(need_string(form[1], fld + ".form"));
      f.avoid.push_back(std::move(c));
    }
  }
  return f;
}

Json verdict_to_json(const Ring& R, const Verdict& v) {
  Json j{{"verdict", verdict_name(v.kind)}};
  switch (v.kind) {
    case Verdict::Kind::Homotopic:
      j["level"] = v.level == Verdict::Level::Ghost1 ? "ghost1" : "chain";
      j["frame"] = frame_to_json(R, *v.frame);
      j["witness"] = witness_to_json(R, *v.witness);
      break;
    case Verdict::Kind::NotHomotopic: {
      j["obstruction"] = v.obstruction;
      if (v.delta) j["delta"] = R.str(*v.delta);
      if (!v.ideal.empty()) {
        Json I = Json::array();
        for (const RingElement& e : v.ideal) I.push_back(R.str(e));
        j["ideal"] = I;
        j["radical"] = v.radical;
      }
      break;
    }
    case Verdict::Kind::Undecidable:
      j["reason"] = error_kind_name(v.reason);
      j["detail"] = v.obstruction;
      break;
  }
  return j;
}

Json report_to_json(const VerifyReport& rep) {
  Json clauses = Json::array();
  for (const ClauseResult& c : rep.clauses) {
    Json cj{{"clause", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    clauses.push_back(cj);
  }
  return Json{{"valid", rep.ok()}, {"clauses", clauses}};
}

}  // namespace ruled
