#include "ruled/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "ruled/io.hpp"

namespace ruled {

namespace {

struct Options {
  std::string ring = "dvr";
  int trunc = 16;
  std::uint64_t seed = 0;
  std::string output = "text";
  std::size_t groebner_cap = 10000;

  // surface / tree
  std::size_t index = 0;
  std::string slope;
  bool zeros = false, poles = false;
  unsigned degree = 1;
  int steps = 4;
  std::string surface_text, tree_text, cert_text;

  // decide
  std::string r0, s1, s2;
  std::vector<std::string> sections;
};


std::string surface_line(const NodalSurface& X) {
  std::string out = "[";
  for (std::size_t i = 0; i < X.lines().size(); ++i) {
    const Slope& t = X.lines()[i];
    out += (i ? ", " : "") + (t.is_inf() ? std::string("inf") : t.is_integer() ? std::to_string(t.a()) : t.str());
  }
  return out + "]";
}

// a*Y0 + b*Y1 without unit coefficients or "+ -".
std::string form_text(const Rat& a, const Rat& b) {
  std::string out;
  auto term = [&](const Rat& c, const char* v) {
    if (c == 0) return;
    std::string mag = abs(c) == 1 ? std::string(v) : rat_str(abs(c)) + "*" + v;
    if (out.empty()) out = (c < 0 ? "-" : "") + mag;
    else out += (c < 0 ? " - " : " + ") + mag;
  };
  term(a, "Y0");
  term(b, "Y1");
  return out.empty() ? "0" : out;
}

std::string ideal_text(const Ring& R, const std::vector<RingElement>& gens) {
  std::string out;
  for (const RingElement& e : gens) out += (out.empty() ? "" : ", ") + R.str(e);
  return "<" + out + ">";
}

void witness_text(const Ring& R, const Witness& w, const std::string& pad, std::ostream& out) {
  switch (w.kind) {
    case Witness::Kind::StraightLine:
      if (w.line.polar)
        out << pad << "straight line, polar chart 1/(y - " << rat_str(w.line.c) << ") = " << R.str(w.line.path) << "\n";
      else
        out << pad << "straight line y = " << R.str(w.line.path) << "\n";
      break;
    case Witness::Kind::Ghost: {
      const Ghost& G = w.ghost;
      std::string ex;
      for (const PolyExt& e : G.excluded) ex += (ex.empty() ? "" : ", ") + R.str(e);
      out << pad << "ghost homotopy\n"
          << pad << "  excluded from V1: <" << ex << ">\n"
          << pad << "  V2 inverts: " << R.str(G.v2_unit) << "\n"
          << pad << "  h1: " << R.str(G.h1) << "\n"
          << pad << "  h2: " << R.str(G.h2) << "\n"
          << pad << "  hW: (" << R.str(G.hw_num) << ")/(" << R.str(G.hw_den) << ")\n"
          << pad << "  blown centre: " << R.str(G.blown_center) << "\n";
      break;
    }
    case Witness::Kind::Chain:
      out << pad << "chain of " << w.steps.size() << " steps\n";
      for (const Witness& st : w.steps) witness_text(R, st, pad + "  ", out);
      break;
  }
}

void frame_text(const Ring& R, const Frame& f, std::ostream& out) {
  out << "frame: surface " << surface_line(f.surface) << ", r0 = " << R.str(f.gamma.r0) << ", s1 = "
      << section_str(R, f.s1) << ", s2 = " << section_str(R, f.s2) << "\n";
  for (const AvoidCenter& c : f.avoid)
    out << "avoid: " << ideal_text(R, c.ideal) << " with " << form_text(c.a, c.b) << " = 0\n";
}

void verdict_text(const Ring& R, const Verdict& v, std::ostream& out) {
  switch (v.kind) {
    case Verdict::Kind::Homotopic:
      out << "homotopic (" << (v.level == Verdict::Level::Ghost1 ? "ghost1" : "chain") << ")\n";
      frame_text(R, *v.frame, out);
      witness_text(R, *v.witness, "", out);
      break;
    case Verdict::Kind::NotHomotopic:
      out << "not homotopic\n"
          << "obstruction: " << v.obstruction << "\n";
      if (v.delta) out << "delta: " << R.str(*v.delta) << "\n";
      if (!v.ideal.empty()) out << "ideal: " << ideal_text(R, v.ideal) << (v.radical ? " (radical)" : "") << "\n";
      break;
    case Verdict::Kind::Undecidable:
      out << "undecidable (" << error_kind_name(v.reason) << ")\n"
          << "detail: " << v.obstruction << "\n";
      break;
  }
}

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  Ring ring() const {
    RingConfig cfg;
    if (o_.ring == "dvr") cfg.model = Model::Dvr;
    else if (o_.ring == "bivariate") cfg.model = Model::Bivariate;
    else fail(ErrorKind::InvalidInput, "--ring must be dvr or bivariate");
    cfg.trunc = o_.trunc;
    cfg.groebner_cap = o_.groebner_cap;
    return Ring(cfg);
  }

  std::string read_stdin() {
    if (!stdin_read_) {
      stdin_ = std::string(std::istreambuf_iterator<char>(in_), {});
      stdin_read_ = true;
    }
    return stdin_;
  }

  std::string text_or_stdin(const std::string& opt) { return opt.empty() || opt == "-" ? read_stdin() : opt; }

  NodalSurface surface_input() { return surface_from_json(parse_json_text(text_or_stdin(o_.surface_text), "surface")); }

  NodalSurface surface_or_default() {
    if (o_.surface_text.empty()) return blowup_node(p1(), 0);
    return surface_input();
  }

  BlowupTree tree_input() { return tree_from_json(parse_json_text(text_or_stdin(o_.tree_text), "tree")); }

  void emit_data(const Json& j) { out_ << j.dump() << "\n"; }

  bool json() const { return o_.output == "json"; }

  int emit_verdict(const Ring& R, const Verdict& v) {
    if (json()) out_ << verdict_to_json(R, v).dump() << "\n";
    else verdict_text(R, v, out_);
    return verdict_code(v);
  }

  int verdict_code(const Verdict& v) {
    switch (v.kind) {
      case Verdict::Kind::Homotopic: return 0;
      case Verdict::Kind::NotHomotopic: return 1;
      case Verdict::Kind::Undecidable: return 3;
    }
    return 2;
  }

  // ---- surface

  int surface_new() {
    emit_data(surface_to_json(p1()));
    return 0;
  }

  int surface_blowup() {
    emit_data(surface_to_json(blowup_node(surface_input(), o_.index)));
    return 0;
  }

  int surface_random() {
    if (o_.steps < 0) fail(ErrorKind::InvalidInput, "--steps must be non-negative");
    std::mt19937_64 gen(o_.seed);
    NodalSurface X = p1();
    for (int i = 0; i < o_.steps; ++i) X = blowup_node(X, gen() % X.node_count());
    emit_data(surface_to_json(X));
    return 0;
  }

  int surface_show() {
    NodalSurface X = surface_input();
    if (o_.output == "dot") {
      out_ << surface_dot(X);
      return 0;
    }
    Json nodes = Json::array();
    for (std::size_t i = 0; i < X.node_count(); ++i) {
      auto [f, g] = node_ideal(X, i);
      nodes.push_back(Json{{"index", i},
                           {"between", {line_label(X.lines()[i]), line_label(X.lines()[i + 1])}},
                           {"ideal", {f.str(), g.str()}}});
    }
    Json lines = Json::array();
    for (const Slope& s : X.lines()) lines.push_back(line_label(s));
    if (o_.output == "json") {
      out_ << Json{{"lines", lines}, {"nodes", nodes}, {"nprime", is_in_Nprime(X)}}.dump() << "\n";
      return 0;
    }
    out_ << "lines:";
    for (const Slope& s : X.lines()) out_ << " " << line_label(s);
    out_ << "\n";
    for (const Json& n : nodes)
      out_ << "node " << n["index"].get<std::size_t>() << ": " << n["between"][0].get<std::string>() << " x "
           << n["between"][1].get<std::string>() << "  <" << n["ideal"][0].get<std::string>() << ", "
           << n["ideal"][1].get<std::string>() << ">\n";
    out_ << "in N': " << (is_in_Nprime(X) ? "yes" : "no") << "\n";
    return 0;
  }

  int surface_divisor() {
    if (o_.zeros == o_.poles) fail(ErrorKind::InvalidInput, "give exactly one of --zeros, --poles");
    NodalSurface X = surface_input();
    auto labels = divisor_support(X, Slope::parse(o_.slope), o_.zeros ? DivisorPart::Zeros : DivisorPart::Poles);
    emit_data(Json(labels));
    return 0;
  }

  int surface_nprime() {
    NodalSurface X = surface_input();
    out_ << (is_in_Nprime(X) ? "true" : "false") << "\n";
    return 0;
  }

  // ---- tree

  int tree_nx() {
    out_ << n_x(tree_input()) << "\n";
    return 0;
  }

  int tree_normalize() {
    Normalized N = normalize_pure_nodes(tree_input());
    emit_data(Json{{"surface", surface_to_json(N.surface)}, {"residual", tree_to_json(N.residual)}});
    return 0;
  }

  int tree_pullback() {
    emit_data(tree_to_json(pullback_tree(tree_input(), o_.degree)));
    return 0;
  }

  // ---- decide

  int decide_nodal_cmd() {
    Ring R = ring();
    Verdict v = decide_nodal(R, surface_or_default(), GammaData{R.parse(o_.r0)}, parse_section(R, o_.s1),
                             parse_section(R, o_.s2));
    return emit_verdict(R, v);
  }

  int decide_general_cmd() {
    Ring R = ring();
    Verdict v = decide_general(R, tree_input(), GammaData{R.parse(o_.r0)}, parse_section(R, o_.s1),
                               parse_section(R, o_.s2));
    return emit_verdict(R, v);
  }

  // ---- witness

  int witness_build() {
    Ring R = ring();
    Verdict v = decide_nodal(R, surface_or_default(), GammaData{R.parse(o_.r0)}, parse_section(R, o_.s1),
                             parse_section(R, o_.s2));
    if (v.kind != Verdict::Kind::Homotopic) return emit_verdict(R, v);
    Json cert = frame_to_json(R, *v.frame);
    cert["witness"] = witness_to_json(R, *v.witness);
    emit_data(cert);
    return 0;
  }

  int witness_verify() {
    Ring R = ring();
    Json cert = parse_json_text(text_or_stdin(o_.cert_text), "certificate");
    Frame f = frame_from_json(R, cert);
    if (!cert.contains("witness")) fail(ErrorKind::InvalidInput, "field 'certificate.witness': missing");
    Witness w = witness_from_json(R, cert["witness"]);
    VerifyReport rep = verify_frame(R, f, w);
    if (json()) {
      out_ << report_to_json(rep).dump() << "\n";
    } else {
      for (const ClauseResult& c : rep.clauses)
        out_ << c.name << ": " << (c.pass ? "pass" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      out_ << (rep.ok() ? "certificate valid" : "certificate rejected") << "\n";
    }
    return rep.ok() ? 0 : 1;
  }

  // ---- classes

  int classes_cmd() {
    Ring R = ring();
    GammaData g{R.parse(o_.r0)};
    std::vector<SectionData> secs;
    for (const std::string& s : o_.sections) secs.push_back(parse_section(R, s));
    Partition P = o_.tree_text.empty() ? partition_nodal(R, surface_or_default(), g, secs)
                                       : partition_general(R, tree_input(), g, secs);
    if (json()) {
      Json classes = Json::array();
      for (const auto& c : P.classes) {
        Json cj = Json::array();
        for (std::size_t i : c) cj.push_back(section_str(R, secs[i]));
        classes.push_back(cj);
      }
      Json und = Json::array();
      for (auto [i, j] : P.undecided) und.push_back({i, j});
      out_ << Json{{"classes", classes}, {"undecided", und}}.dump() << "\n";
    } else {
      for (std::size_t c = 0; c < P.classes.size(); ++c) {
        out_ << "class " << c + 1 << ":";
        for (std::size_t i : P.classes[c]) out_ << " " << section_str(R, secs[i]);
        out_ << "\n";
      }
      for (auto [i, j] : P.undecided)
        out_ << "undecided: " << section_str(R, secs[i]) << " vs " << section_str(R, secs[j]) << "\n";
    }
    return P.undecided.empty() ? 0 : 3;
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::string stdin_;
  bool stdin_read_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"ruled: sections of nodal blowups of ruled surfaces over a local base"};
  app.name("ruled");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", o.ring, "dvr or bivariate")->check(CLI::IsMember({"dvr", "bivariate"}));
  app.add_option("--trunc", o.trunc, "series precision for the dvr model")->check(CLI::Range(4, 1 << 20));
  app.add_option("--seed", o.seed, "seed for random subcommands");
  app.add_option("--output", o.output, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--groebner-cap", o.groebner_cap, "S-pair cap")->check(CLI::PositiveNumber);

  std::function<int()> action;
  Session s(o, in, out);
  auto bind = [&](CLI::App* sub, int (Session::*fn)()) { sub->callback([&, fn] { action = [&, fn] { return (s.*fn)(); }; }); };

  auto* surface = app.add_subcommand("surface", "nodal surfaces (JSON on stdin or --surface)");
  surface->require_subcommand(1);
  bind(surface->add_subcommand("new", "the projective line"), &Session::surface_new);
  auto* blow = surface->add_subcommand("blowup", "blow up a node");
  blow->add_option("index", o.index, "node index")->required();
  blow->add_option("--surface", o.surface_text);
  bind(blow, &Session::surface_blowup);
  auto* rnd = surface->add_subcommand("random", "seeded random blowup sequence");
  rnd->add_option("--steps", o.steps);
  bind(rnd, &Session::surface_random);
  auto* show = surface->add_subcommand("show", "lines, nodes and node ideals");
  show->add_option("--surface", o.surface_text);
  bind(show, &Session::surface_show);
  auto* div = surface->add_subcommand("divisor", "support of the divisor of x^a/y^b");
  div->add_option("slope", o.slope)->required();
  div->add_flag("--zeros", o.zeros);
  div->add_flag("--poles", o.poles);
  div->add_option("--surface", o.surface_text);
  bind(div, &Session::surface_divisor);
  auto* np = surface->add_subcommand("nprime", "all finite labels at most 1");
  np->add_option("--surface", o.surface_text);
  bind(np, &Session::surface_nprime);

  auto* tree = app.add_subcommand("tree", "blowup trees (JSON on stdin or --tree)");
  tree->require_subcommand(1);
  auto* nx = tree->add_subcommand("nx", "largest number of blowups over one point");
  nx->add_option("--tree", o.tree_text);
  bind(nx, &Session::tree_nx);
  auto* norm = tree->add_subcommand("normalize", "pure-node prefix and residual tree");
  norm->add_option("--tree", o.tree_text);
  bind(norm, &Session::tree_normalize);
  auto* pb = tree->add_subcommand("pullback", "pull back along z -> z^b");
  pb->add_option("--degree", o.degree)->required()->check(CLI::PositiveNumber);
  pb->add_option("--tree", o.tree_text);
  bind(pb, &Session::tree_pullback);

  auto section_opts = [&](CLI::App* sub) {
    sub->add_option("--r0", o.r0, "pullback of the base uniformizer")->required();
    sub->add_option("--s1", o.s1, "first section (prefix inf: for 1/y)")->required();
    sub->add_option("--s2", o.s2, "second section")->required();
  };
  auto* decide = app.add_subcommand("decide", "decide homotopy of two sections");
  decide->require_subcommand(1);
  auto* dn = decide->add_subcommand("nodal", "on a nodal surface (default [0,1,inf])");
  section_opts(dn);
  dn->add_option("--surface", o.surface_text);
  bind(dn, &Session::decide_nodal_cmd);
  auto* dg = decide->add_subcommand("general", "on the blowup described by a tree");
  section_opts(dg);
  dg->add_option("--tree", o.tree_text);
  bind(dg, &Session::decide_general_cmd);

  auto* wit = app.add_subcommand("witness", "build or verify homotopy certificates");
  wit->require_subcommand(1);
  auto* wb = wit->add_subcommand("build", "certificate for two sections of a nodal surface");
  section_opts(wb);
  wb->add_option("--surface", o.surface_text);
  bind(wb, &Session::witness_build);
  auto* wv = wit->add_subcommand("verify", "check a certificate clause by clause");
  wv->add_option("--certificate", o.cert_text);
  bind(wv, &Session::witness_verify);

  auto* cls = app.add_subcommand("classes", "partition sections into homotopy classes");
  cls->add_option("--r0", o.r0)->required();
  cls->add_option("--sections", o.sections)->required();
  cls->add_option("--surface", o.surface_text);
  cls->add_option("--tree", o.tree_text);
  bind(cls, &Session::classes_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "error: no command\n";
    return 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ruled
