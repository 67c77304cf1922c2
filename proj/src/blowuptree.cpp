#include "ruled/blowuptree.hpp"

#include <algorithm>
#include <set>

#include "ruled/errors.hpp"

namespace ruled {

std::string Position::str() const {
  switch (kind) {
    case Kind::NodeLeft: return "node-left";
    case Kind::NodeRight: return "node-right";
    case Kind::Free: return "free " + rat_str(coord);
  }
  return "";
}

TreeRoot TreeRoot::base(const Rat& p, const Rat& q) {
  if (p == 0 && q == 0) fail(ErrorKind::InvalidInput, "base point [0:0]");
  TreeRoot r;
  r.p = p;
  r.q = q;
  return r;
}

TreeRoot TreeRoot::residual(const Slope& line, const Rat& at) {
  TreeRoot r;
  r.on_line = true;
  r.line = line;
  r.at = at;
  return r;
}

bool TreeRoot::same_point(const Rat& p2, const Rat& q2) const { return !on_line && p * q2 == q * p2; }

std::string TreeRoot::point_str() const {
  if (on_line) return line_label(line) + "@" + rat_str(at);
  return "[" + rat_str(p) + ":" + rat_str(q) + "]";
}

namespace {

void check_children(const std::vector<TreeVertex>& ch, bool allow_right) {
  bool left = false, right = false;
  std::set<Rat> frees;
  for (const TreeVertex& v : ch) {
    switch (v.at.kind) {
      case Position::Kind::NodeLeft:
        if (left) fail(ErrorKind::InvalidInput, "two children at node-left");
        left = true;
        break;
      case Position::Kind::NodeRight:
        if (!allow_right) fail(ErrorKind::InvalidInput, "node-right under a free point");
        if (right) fail(ErrorKind::InvalidInput, "two children at node-right");
        right = true;
        break;
      case Position::Kind::Free:
        if (v.at.coord == 0) fail(ErrorKind::InvalidInput, "free coordinate 0 is a node position");
        if (!frees.insert(v.at.coord).second)
          fail(ErrorKind::InvalidInput, "repeated free coordinate " + rat_str(v.at.coord));
        break;
    }
    check_children(v.children, v.at.kind != Position::Kind::Free && allow_right);
  }
}

}  // namespace

void check_tree(const BlowupTree& t) {
  for (std::size_t i = 0; i < t.roots.size(); ++i) {
    const TreeRoot& r = t.roots[i];
    for (std::size_t j = 0; j < i; ++j) {
      const TreeRoot& o = t.roots[j];
      bool same = r.on_line ? (o.on_line && o.line == r.line && o.at == r.at) : o.same_point(r.p, r.q);
      if (same) fail(ErrorKind::InvalidInput, "repeated root " + r.point_str());
    }
    // The line created by blowing up a base point is a fresh line meeting only the fibre's
    // proper transform, so it carries node-left only; residual roots likewise.
    bool pure_root = !r.on_line && r.p == 0;
    check_children(r.children, pure_root);
  }
}

std::size_t subtree_size(const TreeVertex& v) {
  std::size_t n = 1;
  for (const TreeVertex& c : v.children) n += subtree_size(c);
  return n;
}

std::size_t root_size(const TreeRoot& r) {
  std::size_t n = 1;
  for (const TreeVertex& c : r.children) n += subtree_size(c);
  return n;
}

std::size_t total_vertices(const BlowupTree& t) {
  std::size_t n = 0;
  for (const TreeRoot& r : t.roots) n += root_size(r);
  return n;
}

std::size_t n_x(const BlowupTree& t) {
  std::size_t m = 0;
  for (const TreeRoot& r : t.roots) m = std::max(m, root_size(r));
  return m;
}

namespace {

void move_residual(const TreeVertex& v, const Slope& line, BlowupTree& out) {
  TreeRoot r = TreeRoot::residual(line, v.at.coord);
  r.children = v.children;
  out.roots.push_back(std::move(r));
}

void collect_pure(const std::vector<TreeVertex>& children, const Slope& lo, const Slope& mid, const Slope& hi,
                  std::vector<Slope>& lines, BlowupTree& residual) {
  for (const TreeVertex& v : children) {
    switch (v.at.kind) {
      case Position::Kind::NodeLeft: {
        Slope m = mediant(lo, mid);
        lines.push_back(m);
        collect_pure(v.children, lo, m, mid, lines, residual);
        break;
      }
      case Position::Kind::NodeRight: {
        Slope m = mediant(mid, hi);
        lines.push_back(m);
        collect_pure(v.children, mid, m, hi, lines, residual);
        break;
      }
      case Position::Kind::Free:
        move_residual(v, mid, residual);
        break;
    }
  }
}

}  // namespace

Normalized normalize_pure_nodes(const BlowupTree& t) {
  check_tree(t);
  if (t.roots.size() != 1) fail(ErrorKind::UnsupportedSupport, "normalization needs a single root");
  const TreeRoot& root = t.roots[0];
  if (root.on_line || root.p != 0)
    fail(ErrorKind::UnsupportedSupport, "normalization needs the root [0:1], got " + root.point_str());
  std::vector<Slope> lines{Slope(0, 1), Slope(1, 1), Slope::infinity()};
  BlowupTree residual;
  collect_pure(root.children, Slope(0, 1), Slope(1, 1), Slope::infinity(), lines, residual);
  std::sort(lines.begin(), lines.end());
  if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    fail(ErrorKind::InvalidInput, "two blowups of the same node");
  return {NodalSurface(std::move(lines)), std::move(residual)};
}

BlowupTree pullback_tree(const BlowupTree& t, unsigned b) {
  if (b == 0) fail(ErrorKind::PreconditionViolated, "cover degree 0");
  BlowupTree out;
  for (const TreeRoot& r : t.roots) {
    if (r.on_line) fail(ErrorKind::PreconditionViolated, "pullback needs base-point roots");
    if (r.q == 0 || r.p == 0 || b == 1) {
      out.roots.push_back(r);
      continue;
    }
    Rat y = r.p / r.q, z;
    if (!rat_root(y, b, z))
      fail(ErrorKind::RootUnavailable, "point " + r.point_str() + " has no rational preimage of order " + std::to_string(b));
    std::vector<Rat> pre{z};
    if (b % 2 == 0) pre.push_back(-z);
    for (const Rat& w : pre) {
      TreeRoot c = TreeRoot::base(w, 1);
      c.children = r.children;
      out.roots.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace ruled
