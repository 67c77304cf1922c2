#include "ruled/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ruled/errors.hpp"

namespace ruled {

Poly::Poly(int nvars, const Rat& c) : n_(nvars) {
  if (c != 0) terms_[Exp(nvars, 0)] = c;
}

Poly Poly::var(int nvars, int i, int power) {
  Exp e(nvars, 0);
  e[i] = power;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exp& e, const Rat& c) {
  Poly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_term() const { return coeff(Exp(n_, 0)); }

Rat Poly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exp& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int Poly::min_degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = d < 0 ? e[i] : std::min(d, e[i]);
  return d;
}

int Poly::top_var() const {
  int t = -1;
  for (const auto& [e, c] : terms_)
    for (int i = n_ - 1; i > t; --i)
      if (e[i] > 0) { t = i; break; }
  return t;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  Exp e(r.n_, 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < r.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(n_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::substitute(int i, const Poly& value) const {
  Poly r(n_);
  int d = degree_in(i);
  std::vector<Poly> powers{Poly(n_, 1)};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    f[i] = 0;
    r += monomial(f, c) * powers[e[i]];
  }
  return r;
}

Poly Poly::eval_var(int i, const Rat& value) const { return substitute(i, Poly(n_, value)); }

Poly Poly::extend(int nvars) const {
  Poly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exp f(nvars, 0);
    std::copy(e.begin(), e.end(), f.begin());
    r.terms_[f] = c;
  }
  return r;
}

Poly Poly::remap(int nvars, const std::vector<int>& map) const {
  Poly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exp f(nvars, 0);
    for (int i = 0; i < n_; ++i)
      if (e[i]) f[map[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::pair<Exp, Rat> Poly::lex_lead() const {
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print by ascending total degree, then reverse lex, which reads naturally for series.
  std::vector<std::pair<Exp, Rat>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : ts) {
    bool unit_exp = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    bool need_star = false;
    if (unit_exp || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

bool divides_poly(const Poly& b, const Poly& a, Poly* quotient) {
  if (b.is_zero()) fail(ErrorKind::DivisionImpossible, "division by zero polynomial");
  Poly q(a.nvars()), r = a;
  auto [eb, cb] = b.lex_lead();
  while (!r.is_zero()) {
    auto [er, cr] = r.lex_lead();
    Exp e(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) return false;
    }
    Poly t = Poly::monomial(e, cr / cb);
    q += t;
    r -= t * b;
  }
  if (quotient) *quotient = q;
  return true;
}

Poly div_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!divides_poly(b, a, &q)) fail(ErrorKind::DivisionImpossible, "inexact polynomial division");
  return q;
}

namespace {

std::vector<Poly> coeffs_in(const Poly& p, int k) {
  std::vector<Poly> cs(std::max(p.degree_in(k), 0) + 1, Poly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exp f = e;
    f[k] = 0;
    cs[e[k]].add_term(f, c);
  }
  return cs;
}

Poly normalize_lead(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lex_lead().second);
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int k) {
  Poly g(p.nvars());
  for (const Poly& c : coeffs_in(p, k)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_lead(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in variable k.
Poly prem(Poly a, const Poly& b, int k) {
  int db = b.degree_in(k);
  Poly lb = coeffs_in(b, k).back();
  while (!a.is_zero() && a.degree_in(k) >= db) {
    int da = a.degree_in(k);
    Poly la = coeffs_in(a, k).back();
    a = lb * a - la * Poly::var(a.nvars(), k, da - db) * b;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  int k = std::max(a.top_var(), b.top_var());
  if (k < 0) return Poly(a.nvars(), 1);
  if (a.degree_in(k) <= 0) return gcd_rec(a, content_in(b, k));
  if (b.degree_in(k) <= 0) return gcd_rec(content_in(a, k), b);
  Poly ca = content_in(a, k), cb = content_in(b, k);
  Poly g = gcd_rec(ca, cb);
  Poly A = div_exact(a, ca), B = div_exact(b, cb);
  if (A.degree_in(k) < B.degree_in(k)) std::swap(A, B);
  while (!B.is_zero() && B.degree_in(k) > 0) {
    Poly R = prem(A, B, k);
    A = B;
    if (R.is_zero()) {
      B = R;
      break;
    }
    B = div_exact(R, content_in(R, k));
  }
  // B nonzero of degree 0 in k means the primitive parts are coprime.
  Poly pp = B.is_zero() ? A : Poly(a.nvars(), 1);
  pp = div_exact(pp, content_in(pp, k));
  return normalize_lead(g * pp);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace ruled
