#include "ruled/groebner.hpp"

#include <algorithm>
#include <utility>

#include "ruled/errors.hpp"

namespace ruled {

namespace {

bool grevlex_less(const Exp& a, const Exp& b, int from, int to) {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (int i = to - 1; i >= from; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

using Term = std::pair<Exp, Rat>;

// Terms sorted by decreasing monomial order.
struct GPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Exp& lm() const { return t.front().first; }
  const Rat& lc() const { return t.front().second; }
};

struct Ctx {
  MonomialOrder order;
  bool gt(const Exp& a, const Exp& b) const { return order.less(b, a); }
};

GPoly to_g(const Poly& p, const Ctx& ctx) {
  GPoly g;
  g.t.assign(p.terms().begin(), p.terms().end());
  std::sort(g.t.begin(), g.t.end(), [&](const Term& x, const Term& y) { return ctx.gt(x.first, y.first); });
  return g;
}

Poly from_g(const GPoly& g, int n) {
  Poly p(n);
  for (const auto& [e, c] : g.t) p.add_term(e, c);
  return p;
}

void make_monic(GPoly& g) {
  if (g.zero()) return;
  Rat inv = 1 / g.lc();
  for (auto& [e, c] : g.t) c *= inv;
}

// a - c * m * b, with m a monomial.
GPoly sub_mul(const GPoly& a, const Rat& c, const Exp& m, const GPoly& b, const Ctx& ctx) {
  std::vector<Term> bm;
  bm.reserve(b.t.size());
  for (const auto& [e, v] : b.t) {
    Exp f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    bm.emplace_back(std::move(f), v * c);
  }
  GPoly r;
  r.t.reserve(a.t.size() + bm.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < bm.size()) {
    if (j == bm.size() || (i < a.t.size() && ctx.gt(a.t[i].first, bm[j].first))) {
      r.t.push_back(a.t[i++]);
    } else if (i == a.t.size() || ctx.gt(bm[j].first, a.t[i].first)) {
      r.t.emplace_back(bm[j].first, -bm[j].second);
      ++j;
    } else {
      Rat v = a.t[i].second - bm[j].second;
      if (v != 0) r.t.emplace_back(a.t[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

bool divisible(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Exp diff(const Exp& a, const Exp& b) {
  Exp d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::max(a[i], b[i]);
  return d;
}

// Full reduction of f modulo G.
GPoly reduce(GPoly f, const std::vector<GPoly>& G, const Ctx& ctx) {
  GPoly r;
  while (!f.zero()) {
    bool hit = false;
    for (const GPoly& g : G) {
      if (g.zero()) continue;
      if (divisible(f.lm(), g.lm())) {
        f = sub_mul(f, f.lc() / g.lc(), diff(f.lm(), g.lm()), g, ctx);
        hit = true;
        break;
      }
    }
    if (!hit) {
      r.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
    }
  }
  return r;
}

}  // namespace

bool MonomialOrder::less(const Exp& a, const Exp& b) const {
  int n = static_cast<int>(a.size());
  if (elim_from >= 0 && elim_from < n) {
    if (grevlex_less(a, b, elim_from, n)) return true;
    if (grevlex_less(b, a, elim_from, n)) return false;
    return grevlex_less(a, b, 0, elim_from);
  }
  return grevlex_less(a, b, 0, n);
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opt) {
  Ctx ctx{opt.order};
  int n = 0;
  for (const Poly& p : gens) n = std::max(n, p.nvars());
  std::vector<GPoly> G;
  for (const Poly& p : gens) {
    if (p.is_zero()) continue;
    GPoly g = to_g(p.nvars() == n ? p : p.extend(n), ctx);
    make_monic(g);
    G.push_back(std::move(g));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t processed = 0;
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pairs.begin();
    Exp best_l = lcm(G[best->first].lm(), G[best->second].lm());
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      Exp l = lcm(G[it->first].lm(), G[it->second].lm());
      if (opt.order.less(l, best_l)) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    if (++processed > opt.pair_cap) fail(ErrorKind::DegreeCapExceeded, "Groebner S-pair cap exceeded");
    const GPoly& gi = G[i];
    const GPoly& gj = G[j];
    if (gi.zero() || gj.zero()) continue;
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    bool coprime = true;
    for (std::size_t k = 0; k < best_l.size(); ++k)
      if (gi.lm()[k] && gj.lm()[k]) { coprime = false; break; }
    if (coprime) continue;
    // Second criterion: some g_k with lm dividing the lcm and both other pairs already handled.
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].zero()) continue;
      if (!divisible(best_l, G[k].lm())) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
      };
      if (!pending(i, k) && !pending(j, k)) chain = true;
    }
    if (chain) continue;
    GPoly s = sub_mul(GPoly{}, -1 / gi.lc(), diff(best_l, gi.lm()), gi, ctx);
    s = sub_mul(s, 1 / gj.lc(), diff(best_l, gj.lm()), gj, ctx);
    GPoly r = reduce(std::move(s), G, ctx);
    if (r.zero()) continue;
    make_monic(r);
    bool is_one = std::all_of(r.lm().begin(), r.lm().end(), [](int x) { return x == 0; });
    G.push_back(std::move(r));
    if (is_one) {
      G.erase(G.begin(), G.end() - 1);
      pairs.clear();
      break;
    }
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // Minimalize and interreduce.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].zero()) continue;
      if (divisible(G[i].lm(), G[j].lm()) && (G[i].lm() != G[j].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GPoly head;
    head.t.push_back(minimal[i].t.front());
    GPoly tail;
    tail.t.assign(minimal[i].t.begin() + 1, minimal[i].t.end());
    GPoly red = reduce(tail, others, ctx);
    head.t.insert(head.t.end(), red.t.begin(), red.t.end());
    out.push_back(from_g(head, n));
  }
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  Ctx ctx{order};
  std::vector<GPoly> G;
  for (const Poly& p : basis) G.push_back(to_g(p, ctx));
  return from_g(reduce(to_g(f, ctx), G, ctx), f.nvars());
}

bool unit_ideal_local(const std::vector<Poly>& gens, int nbase, std::size_t pair_cap) {
  int n = nbase;
  for (const Poly& p : gens) n = std::max(n, p.nvars());
  std::vector<Poly> g;
  for (const Poly& p : gens) {
    if (p.is_zero()) continue;
    g.push_back(p.nvars() == n ? p : p.extend(n));
  }
  if (g.empty()) return false;
  GroebnerOptions opt;
  opt.pair_cap = pair_cap;
  opt.order.elim_from = n > nbase ? nbase : -1;
  std::vector<Poly> gb = groebner_basis(g, opt);
  // Elements free of the extra variables generate the elimination ideal.
  for (const Poly& p : gb) {
    bool base_only = true;
    for (int i = nbase; i < n && base_only; ++i)
      if (p.degree_in(i) > 0) base_only = false;
    if (base_only && p.constant_term() != 0) return true;
  }
  return false;
}

bool radical_member_local(const Poly& f, const std::vector<Poly>& gens, int nbase, std::size_t pair_cap) {
  int n = nbase;
  for (const Poly& p : gens) n = std::max(n, p.nvars());
  n = std::max(n, f.nvars());
  // Rabinowitsch: adjoin t with 1 - t*f.
  std::vector<Poly> g;
  for (const Poly& p : gens) g.push_back(p.extend(n + 1));
  Poly t = Poly::var(n + 1, n);
  g.push_back(Poly(n + 1, 1) - t * f.extend(n + 1));
  return unit_ideal_local(g, nbase, pair_cap);
}

bool ideal_member_local(const Poly& f, const std::vector<Poly>& gens, std::size_t pair_cap) {
  if (f.is_zero()) return true;
  int n = f.nvars();
  for (const Poly& p : gens) n = std::max(n, p.nvars());
  // I ∩ <f> via t*I + (1-t)*<f>, then (I : f) = (I ∩ <f>) / f.
  std::vector<Poly> g;
  Poly t = Poly::var(n + 1, n);
  Poly one(n + 1, 1);
  for (const Poly& p : gens)
    if (!p.is_zero()) g.push_back(t * p.extend(n + 1));
  if (g.empty()) return false;
  Poly fe = f.extend(n + 1);
  g.push_back((one - t) * fe);
  GroebnerOptions opt;
  opt.pair_cap = pair_cap;
  opt.order.elim_from = n;
  for (const Poly& p : groebner_basis(g, opt)) {
    if (p.degree_in(n) > 0) continue;
    Poly q = div_exact(p, fe);
    if (q.constant_term() != 0) return true;
  }
  return false;
}

}  // namespace ruled
