#include "ruled/ring.hpp"

#include <algorithm>
#include <cctype>

#include "ruled/errors.hpp"
#include "ruled/groebner.hpp"

namespace ruled {

namespace {

const std::vector<std::string> kDvrNames{"x"};
const std::vector<std::string> kBivNames{"u", "v"};

// Unit series helpers (length L, c[0] != 0).
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t L) {
  std::vector<Rat> c(L);
  for (std::size_t i = 0; i < L && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < L && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Rat> series_inv(const std::vector<Rat>& a) {
  std::size_t L = a.size();
  std::vector<Rat> r(L);
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < L; ++k) {
    Rat s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// Newton iteration g <- g - (g^n - a) / (n g^(n-1)), doubling the precision each step.
std::vector<Rat> series_root(const std::vector<Rat>& a, unsigned n, const Rat& g0) {
  std::size_t L = a.size();
  std::vector<Rat> g{g0};
  std::size_t prec = 1;
  while (prec < L) {
    prec = std::min(L, prec * 2);
    g.resize(prec);
    std::vector<Rat> gp(prec);
    gp[0] = 1;
    for (unsigned i = 0; i + 1 < n; ++i) gp = series_mul(gp, g, prec);
    std::vector<Rat> gn = series_mul(gp, g, prec);
    std::vector<Rat> diff(prec);
    for (std::size_t k = 0; k < prec; ++k) diff[k] = gn[k] - (k < a.size() ? a[k] : Rat(0));
    std::vector<Rat> corr = series_mul(diff, series_inv(gp), prec);
    for (std::size_t k = 0; k < prec; ++k) g[k] -= corr[k] / n;
  }
  return g;
}

std::vector<Rat> unit_of_len(const std::vector<Rat>& u, std::size_t L) {
  std::vector<Rat> r(u.begin(), u.begin() + std::min(L, u.size()));
  r.resize(std::min(L, u.size()));
  return r;
}

void require_model(const RingElement& e, Model m) {
  if (e.model() != m) fail(ErrorKind::ModelMismatch, std::string("expected a ") + model_name(m) + " element");
}

// ---------------------------------------------------------------------------
// Element grammar parser.

class Parser {
 public:
  Parser(const Ring& ring, const std::string& s) : ring_(ring), s_(s) {}

  RingElement parse() {
    RingElement e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expr() {
    RingElement acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RingElement term() {
    RingElement acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RingElement d = unary();
        try {
          acc = ring_.div(acc, d);
        } catch (const Error& e) {
          pos_ = at;
          error(std::string("quotient not in the local ring (") + e.what() + ")");
        }
      } else {
        return acc;
      }
    }
  }

  RingElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  RingElement power() {
    RingElement base = atom();
    if (eat('^')) {
      long k = integer();
      if (k > 4096) error("exponent too large");
      if (k == 0) return ring_.one();
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  RingElement atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RingElement e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ring_.constant(Rat(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (c == 'O') {
      ++pos_;
      if (ring_.model() != Model::Dvr) error("O(...) terms need the dvr model");
      if (!eat('(')) error("expected '('");
      skip();
      if (pos_ >= s_.size() || s_[pos_] != 'x') error("expected x");
      ++pos_;
      long k = 1;
      if (eat('^')) k = integer();
      if (!eat(')')) error("expected ')'");
      return RingElement::dvr_vanishing(static_cast<int>(k));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      try {
        return ring_.var(name);
      } catch (const Error& e) {
        pos_ = start;
        if (e.kind() == ErrorKind::ModelMismatch)
          fail(ErrorKind::ModelMismatch, "variable '" + name + "' does not belong to the " +
                                             model_name(ring_.model()) + " model (position " +
                                             std::to_string(start + 1) + ")");
        error("unknown variable '" + name + "'");
      }
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ring::Ring(RingConfig cfg) : cfg_(cfg) {
  if (cfg_.trunc < 4) fail(ErrorKind::InvalidInput, "trunc must be at least 4");
  if (cfg_.groebner_cap == 0) fail(ErrorKind::InvalidInput, "groebner cap must be positive");
}

RingElement Ring::constant(const Rat& c) const {
  if (cfg_.model == Model::Bivariate) return RingElement::bivariate(Poly(2, c), Poly(2, 1));
  if (c == 0) return RingElement::dvr_vanishing(INT_MAX);
  std::vector<Rat> u(cfg_.trunc);
  u[0] = c;
  return RingElement::dvr(0, std::move(u));
}

RingElement Ring::zero() const { return constant(0); }

RingElement Ring::var(const std::string& name) const {
  if (cfg_.model == Model::Dvr) {
    if (name == "x") {
      std::vector<Rat> u(cfg_.trunc);
      u[0] = 1;
      return RingElement::dvr(1, std::move(u));
    }
    if (name == "u" || name == "v") fail(ErrorKind::ModelMismatch, "bivariate variable in dvr model");
  } else {
    if (name == "u") return RingElement::bivariate(Poly::var(2, 0), Poly(2, 1));
    if (name == "v") return RingElement::bivariate(Poly::var(2, 1), Poly(2, 1));
    if (name == "x") fail(ErrorKind::ModelMismatch, "dvr variable in bivariate model");
  }
  fail(ErrorKind::ParseError, "unknown variable " + name);
}

RingElement Ring::from_poly(const Poly& p) const {
  if (cfg_.model == Model::Bivariate) return RingElement::bivariate(p, Poly(2, 1));
  RingElement r = zero();
  for (const auto& [e, c] : p.terms()) r = r + constant(c) * var("x").pow(e[0]);
  return r;
}

RingElement Ring::parse(const std::string& text) const { return Parser(*this, text).parse(); }

std::string Ring::str(const RingElement& e) const {
  if (e.model() == Model::Bivariate) {
    std::string n = e.num().str(kBivNames);
    if (e.den().is_constant()) return n;
    if (e.num().size() > 1) n = "(" + n + ")";
    return n + "/(" + e.den().str(kBivNames) + ")";
  }
  if (e.is_exact_zero()) return "0";
  if (e.unit().empty()) return "O(x^" + std::to_string(e.val()) + ")";
  Poly u(1);
  for (std::size_t k = 0; k < e.unit().size(); ++k) u.add_term(Exp{static_cast<int>(k)}, e.unit()[k]);
  std::string us = u.str(kDvrNames);
  std::string body;
  std::string xs = e.val() == 1 ? "x" : "x^" + std::to_string(e.val());
  if (e.val() == 0) body = us;
  else if (u == Poly(1, 1)) body = xs;
  else if (u == Poly(1, -1)) body = "-" + xs;
  else if (u.size() == 1) body = us + "*" + xs;
  else body = xs + "*(" + us + ")";
  // Elements that lost precision carry their error term.
  if (e.val() + static_cast<int>(e.unit().size()) < cfg_.trunc)
    body += " + O(x^" + std::to_string(e.val() + static_cast<int>(e.unit().size())) + ")";
  return body;
}

std::string Ring::str(const PolyExt& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    std::string mono;
    if (k.first) mono += "S" + (k.first > 1 ? "^" + std::to_string(k.first) : std::string());
    if (k.second) mono += (mono.empty() ? "" : "*") + std::string("T") + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    std::string cs = str(c);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

bool Ring::equal(const RingElement& a, const RingElement& b) const {
  require_model(a, cfg_.model);
  require_model(b, cfg_.model);
  if (cfg_.model == Model::Bivariate) return a.num() * b.den() == b.num() * a.den();
  return (a - b).is_negligible();
}

bool Ring::equal(const PolyExt& a, const PolyExt& b) const {
  PolyExt d = a - b;
  for (const auto& [k, c] : d.terms())
    if (!c.is_negligible()) return false;
  return true;
}

int Ring::valuation(const RingElement& e) const {
  require_model(e, Model::Dvr);
  if (e.unit().empty()) fail(ErrorKind::PrecisionExhausted, "element vanishes to the tracked precision");
  return e.val();
}

bool Ring::is_unit(const RingElement& e) const {
  require_model(e, cfg_.model);
  if (cfg_.model == Model::Dvr) return valuation(e) == 0;
  return e.num().constant_term() != 0;
}

bool Ring::divides(const RingElement& a, const RingElement& b) const {
  require_model(a, cfg_.model);
  require_model(b, cfg_.model);
  if (cfg_.model == Model::Dvr) {
    int va = valuation(a);
    if (b.unit().empty()) {
      if (b.val() >= va) return true;
      fail(ErrorKind::PrecisionExhausted, "divisibility undetermined at the tracked precision");
    }
    return va <= b.val();
  }
  if (a.num().is_zero()) fail(ErrorKind::DivisionImpossible, "divisor is zero");
  if (b.num().is_zero()) return true;
  Poly n = b.num() * a.den(), d = b.den() * a.num();
  Poly g = gcd(n, d);
  return div_exact(d, g).constant_term() != 0;
}

RingElement Ring::div(const RingElement& b, const RingElement& a) const {
  require_model(a, cfg_.model);
  require_model(b, cfg_.model);
  if (cfg_.model == Model::Bivariate) {
    if (a.num().is_zero()) fail(ErrorKind::DivisionImpossible, "division by zero");
    Poly n = b.num() * a.den(), d = b.den() * a.num();
    Poly g = gcd(n, d);
    n = div_exact(n, g);
    d = div_exact(d, g);
    if (d.constant_term() == 0) fail(ErrorKind::DivisionImpossible, "quotient is not in the local ring");
    return RingElement::bivariate(n * (1 / d.constant_term()), d * (1 / d.constant_term()));
  }
  if (a.unit().empty()) fail(ErrorKind::DivisionImpossible, "division by an element that vanishes at precision");
  if (b.unit().empty()) {
    if (b.is_exact_zero()) return b;
    if (b.val() < a.val()) fail(ErrorKind::PrecisionExhausted, "quotient undetermined at the tracked precision");
    return RingElement::dvr_vanishing(b.val() - a.val());
  }
  if (b.val() < a.val()) fail(ErrorKind::DivisionImpossible, "quotient is not in the local ring");
  std::size_t L = std::min(a.unit().size(), b.unit().size());
  return RingElement::dvr(b.val() - a.val(), series_mul(b.unit(), series_inv(unit_of_len(a.unit(), L)), L));
}

std::optional<RingElement> Ring::unit_multiple(const RingElement& a, const RingElement& b) const {
  if (!divides(a, b) || !divides(b, a)) return std::nullopt;
  return div(b, a);
}

std::optional<RingElement> Ring::pair_principal(const RingElement& f, const RingElement& g) const {
  require_model(f, cfg_.model);
  require_model(g, cfg_.model);
  if (f.is_exact_zero() && g.is_exact_zero()) fail(ErrorKind::PreconditionViolated, "both generators are zero");
  if (f.is_exact_zero()) return g;
  if (g.is_exact_zero()) return f;
  if (cfg_.model == Model::Dvr) {
    if (f.unit().empty() && g.unit().empty()) fail(ErrorKind::PrecisionExhausted, "both generators vanish at precision");
    if (f.unit().empty()) return divides(g, f) ? std::optional(g) : std::nullopt;
    if (g.unit().empty()) return divides(f, g) ? std::optional(f) : std::nullopt;
    return f.val() <= g.val() ? f : g;
  }
  if (divides(f, g)) return f;
  if (divides(g, f)) return g;
  return std::nullopt;
}

std::optional<RingElement> Ring::principal_generator(const IdealHandle& I) const {
  if (I.gens.empty()) return zero();
  RingElement h = I.gens[0];
  for (std::size_t i = 1; i < I.gens.size(); ++i) {
    auto p = pair_principal(h, I.gens[i]);
    if (!p) return std::nullopt;
    h = *p;
  }
  return h;
}

bool Ring::ideal_membership(const RingElement& f, const IdealHandle& I) const {
  require_model(f, cfg_.model);
  if (I.model != cfg_.model) fail(ErrorKind::ModelMismatch, "ideal from another model");
  if (f.is_exact_zero()) return true;
  if (I.gens.empty()) return f.is_negligible();
  if (cfg_.model == Model::Dvr) {
    int m = INT_MAX;
    for (const RingElement& g : I.gens) m = std::min(m, g.unit().empty() ? g.val() : g.val());
    bool all_negl = std::all_of(I.gens.begin(), I.gens.end(), [](const RingElement& g) { return g.unit().empty(); });
    if (all_negl) fail(ErrorKind::PrecisionExhausted, "ideal generators vanish at precision");
    int mreg = INT_MAX;
    for (const RingElement& g : I.gens)
      if (!g.unit().empty()) mreg = std::min(mreg, g.val());
    if (f.unit().empty()) {
      if (f.val() >= mreg) return true;
      fail(ErrorKind::PrecisionExhausted, "membership undetermined at the tracked precision");
    }
    return f.val() >= mreg;
  }
  std::vector<Poly> gens;
  for (const RingElement& g : I.gens) gens.push_back(g.num());
  return ideal_member_local(f.num(), gens, cfg_.groebner_cap);
}

bool Ring::radical_membership(const RingElement& f, const IdealHandle& I) const {
  require_model(f, cfg_.model);
  if (I.model != cfg_.model) fail(ErrorKind::ModelMismatch, "ideal from another model");
  if (cfg_.model == Model::Bivariate) return radical_membership_groebner(f, I);
  if (I.gens.empty()) return f.is_negligible();
  // <x^a, x^b, ...> = <x^min>; its radical is R when min = 0 and the maximal ideal otherwise.
  int mreg = INT_MAX;
  for (const RingElement& g : I.gens)
    if (!g.unit().empty()) mreg = std::min(mreg, g.val());
  if (mreg == 0) return true;
  if (f.unit().empty()) return f.val() >= 1;
  return f.val() >= 1;
}

bool Ring::radical_membership_groebner(const RingElement& f, const IdealHandle& I) const {
  std::vector<Poly> gens;
  for (const RingElement& g : I.gens) gens.push_back(to_poly(g));
  if (gens.empty()) return to_poly(f).is_zero();
  return radical_member_local(to_poly(f), gens, nbase(), cfg_.groebner_cap);
}

Poly Ring::to_poly(const RingElement& e) const {
  if (e.model() == Model::Bivariate) return e.num();
  Poly p(1);
  for (std::size_t k = 0; k < e.unit().size(); ++k) p.add_term(Exp{e.val() + static_cast<int>(k)}, e.unit()[k]);
  return p;
}

Poly Ring::to_poly(const PolyExt& p) const {
  int nb = nbase();
  int n = nb + 2;
  Poly out(n);
  if (p.is_zero()) return out;
  // Clear denominators with their lcm, a unit of R.
  Poly D(nb, 1);
  if (cfg_.model == Model::Bivariate)
    for (const auto& [k, c] : p.terms()) {
      Poly g = gcd(D, c.den());
      D = div_exact(D * c.den(), g);
    }
  std::vector<int> map(nb);
  for (int i = 0; i < nb; ++i) map[i] = i;
  for (const auto& [k, c] : p.terms()) {
    Poly base = cfg_.model == Model::Bivariate ? c.num() * div_exact(D, c.den()) : to_poly(c);
    Exp st(n, 0);
    st[nb] = k.first;
    st[nb + 1] = k.second;
    out += base.remap(n, map) * Poly::monomial(st, 1);
  }
  return out;
}

bool Ring::unit_ideal(const std::vector<PolyExt>& gens) const {
  std::vector<Poly> g;
  for (const PolyExt& p : gens) g.push_back(to_poly(p));
  return unit_ideal_local(g, nbase(), cfg_.groebner_cap);
}

bool Ring::radical_member(const PolyExt& f, const std::vector<PolyExt>& gens) const {
  std::vector<Poly> g;
  for (const PolyExt& p : gens) g.push_back(to_poly(p));
  Poly fp = to_poly(f);
  if (g.empty()) return fp.is_zero();
  return radical_member_local(fp, g, nbase(), cfg_.groebner_cap);
}

std::optional<RingElement> Ring::nth_root_unit(const RingElement& e, unsigned n) const {
  if (n == 0) fail(ErrorKind::PreconditionViolated, "root of order 0");
  if (!is_unit(e)) fail(ErrorKind::PreconditionViolated, "nth_root_unit needs a unit");
  try {
    return nth_root(e, n);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::RootUnavailable) return std::nullopt;
    throw;
  }
}

namespace {

// (1 + h)^(1/n) truncated at total degree D, where h has no constant term.
Poly binomial_root(const Poly& h, unsigned n, int D) {
  auto truncate = [D](const Poly& p) {
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      int d = 0;
      for (int x : e) d += x;
      if (d <= D) r.add_term(e, c);
    }
    return r;
  };
  Poly result(h.nvars(), 1), hk(h.nvars(), 1);
  Rat alpha(1, n), binom = 1;
  for (int k = 1; k <= D; ++k) {
    binom *= (alpha - (k - 1)) / k;
    hk = truncate(hk * h);
    if (hk.is_zero()) break;
    result += hk * binom;
  }
  return result;
}

bool poly_root(const Poly& p, unsigned n, Poly& out) {
  if (p.is_zero()) {
    out = p;
    return true;
  }
  int nv = p.nvars();
  Exp mono(nv, INT_MAX);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < nv; ++i) mono[i] = std::min(mono[i], e[i]);
  Exp root_mono(nv);
  for (int i = 0; i < nv; ++i) {
    if (mono[i] % static_cast<int>(n)) return false;
    root_mono[i] = mono[i] / static_cast<int>(n);
  }
  Poly rest = div_exact(p, Poly::monomial(mono, 1));
  Rat c = rest.constant_term();
  if (c == 0) return false;
  Rat c_root;
  if (!rat_root(c, n, c_root)) return false;
  int D = rest.total_degree();
  if (D % static_cast<int>(n)) return false;
  Poly h = rest * (1 / c) - Poly(nv, 1);
  Poly g = Poly::monomial(root_mono, c_root) * binomial_root(h, n, D / static_cast<int>(n));
  if (g.pow(n) != p) return false;
  out = g;
  return true;
}

}  // namespace

RingElement Ring::nth_root(const RingElement& e, unsigned n) const {
  require_model(e, cfg_.model);
  if (n == 1) return e;
  if (cfg_.model == Model::Dvr) {
    if (e.is_exact_zero()) return e;
    int v = valuation(e);
    if (v % static_cast<int>(n)) fail(ErrorKind::RootUnavailable, "valuation not divisible by " + std::to_string(n));
    Rat c0;
    if (!rat_root(e.unit()[0], n, c0))
      fail(ErrorKind::RootUnavailable, "residue " + e.unit()[0].get_str() + " has no rational root of order " + std::to_string(n));
    return RingElement::dvr(v / static_cast<int>(n), series_root(e.unit(), n, c0));
  }
  Poly num, den;
  if (!poly_root(e.num(), n, num) || !poly_root(e.den(), n, den))
    fail(ErrorKind::RootUnavailable, "no rational root of order " + std::to_string(n) + " for " + str(e));
  Rat c = den.constant_term();
  return RingElement::bivariate(num * (1 / c), den * (1 / c));
}

RingElement Ring::substitute_base(const RingElement& e, unsigned b) const {
  if (e.model() != Model::Dvr) fail(ErrorKind::ModelMismatch, "substitute_base needs a dvr element");
  if (b == 0) fail(ErrorKind::PreconditionViolated, "substitute_base needs b >= 1");
  if (e.unit().empty()) {
    if (e.is_exact_zero()) return e;
    long long o = static_cast<long long>(e.val()) * b;
    return RingElement::dvr_vanishing(o >= INT_MAX ? INT_MAX : static_cast<int>(o));
  }
  std::size_t L = std::min<std::size_t>(cfg_.trunc, e.unit().size() * b);
  std::vector<Rat> u(L);
  for (std::size_t k = 0; k < e.unit().size() && k * b < L; ++k) u[k * b] = e.unit()[k];
  return RingElement::dvr(e.val() * static_cast<int>(b), std::move(u));
}

RingElement Ring::embed_bivariate(const RingElement& e) {
  if (e.model() == Model::Bivariate) return e;
  Poly p(2);
  if (!e.unit().empty())
    for (std::size_t k = 0; k < e.unit().size(); ++k)
      p.add_term(Exp{e.val() + static_cast<int>(k), 0}, e.unit()[k]);
  return RingElement::bivariate(p, Poly(2, 1));
}

}  // namespace ruled
