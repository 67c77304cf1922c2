#include <algorithm>

#include "ruled/errors.hpp"
#include "ruled/ring.hpp"

namespace ruled {

const char* model_name(Model m) { return m == Model::Dvr ? "dvr" : "bivariate"; }

namespace {

int sat_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  return s >= INT_MAX ? INT_MAX : static_cast<int>(s);
}

void check_same(const RingElement& a, const RingElement& b) {
  if (a.model() != b.model()) fail(ErrorKind::ModelMismatch, "mixing dvr and bivariate elements");
}

// Reduce a bivariate fraction and normalize den(0,0) = 1.
RingElement make_fraction(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorKind::DivisionImpossible, "zero denominator");
  if (num.is_zero()) return RingElement::bivariate(Poly(2), Poly(2, 1));
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = div_exact(num, g);
      den = div_exact(den, g);
    }
  }
  Rat c = den.constant_term();
  if (c == 0) fail(ErrorKind::DivisionImpossible, "denominator vanishes at the origin");
  return RingElement::bivariate(num * (1 / c), den * (1 / c));
}

}  // namespace

RingElement RingElement::dvr(int val, std::vector<Rat> unit) {
  RingElement e;
  e.model_ = Model::Dvr;
  // Normalize leading zeros.
  std::size_t k = 0;
  while (k < unit.size() && unit[k] == 0) ++k;
  if (k == unit.size()) {
    e.val_ = sat_add(val, static_cast<int>(unit.size()));
    return e;
  }
  e.val_ = val + static_cast<int>(k);
  e.unit_.assign(unit.begin() + k, unit.end());
  return e;
}

RingElement RingElement::dvr_vanishing(int order) {
  RingElement e;
  e.model_ = Model::Dvr;
  e.val_ = order;
  return e;
}

RingElement RingElement::bivariate(const Poly& num, const Poly& den) {
  RingElement e;
  e.model_ = Model::Bivariate;
  e.num_ = num.nvars() == 2 ? num : num.extend(2);
  e.den_ = den.nvars() == 2 ? den : den.extend(2);
  e.val_ = 0;
  return e;
}

bool RingElement::is_exact_zero() const {
  if (model_ == Model::Dvr) return unit_.empty() && val_ == INT_MAX;
  return num_.is_zero();
}

bool RingElement::is_negligible() const {
  if (model_ == Model::Dvr) return unit_.empty();
  return num_.is_zero();
}

Rat RingElement::residue() const {
  if (model_ == Model::Dvr) {
    if (unit_.empty()) {
      if (val_ <= 0) fail(ErrorKind::PrecisionExhausted, "residue undetermined");
      return 0;
    }
    return val_ == 0 ? unit_[0] : Rat(0);
  }
  return num_.constant_term() / den_.constant_term();
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  if (a.model() == Model::Bivariate)
    return make_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  int prec_a = sat_add(a.val_, static_cast<int>(a.unit_.size()));
  int prec_b = sat_add(b.val_, static_cast<int>(b.unit_.size()));
  int prec = std::min(prec_a, prec_b);
  if (a.unit_.empty() && b.unit_.empty()) return RingElement::dvr_vanishing(prec);
  int lo = std::min(a.unit_.empty() ? INT_MAX : a.val_, b.unit_.empty() ? INT_MAX : b.val_);
  if (lo >= prec) return RingElement::dvr_vanishing(prec);
  std::vector<Rat> c(prec - lo);
  auto acc = [&](const RingElement& e) {
    for (std::size_t k = 0; k < e.unit_.size(); ++k) {
      long long idx = static_cast<long long>(e.val_) + k - lo;
      if (idx >= static_cast<long long>(c.size())) break;
      c[idx] += e.unit_[k];
    }
  };
  acc(a);
  acc(b);
  return RingElement::dvr(lo, std::move(c));
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (Rat& c : r.unit_) c = -c;
  if (model_ == Model::Bivariate) r.num_ = -num_;
  return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  if (a.model() == Model::Bivariate) return make_fraction(a.num_ * b.num_, a.den_ * b.den_);
  if (a.unit_.empty() || b.unit_.empty()) {
    int order;
    if (a.unit_.empty() && b.unit_.empty()) order = sat_add(a.val_, b.val_);
    else if (a.unit_.empty()) order = sat_add(a.val_, b.val_);
    else order = sat_add(a.val_, b.val_);
    return RingElement::dvr_vanishing(order);
  }
  std::size_t L = std::min(a.unit_.size(), b.unit_.size());
  std::vector<Rat> c(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; i + j < L; ++j) c[i + j] += a.unit_[i] * b.unit_[j];
  return RingElement::dvr(a.val_ + b.val_, std::move(c));
}

RingElement RingElement::pow(unsigned k) const {
  RingElement result;
  if (model_ == Model::Bivariate) {
    result = RingElement::bivariate(num_.pow(k), den_.pow(k));
    return result;
  }
  if (unit_.empty()) {
    if (k == 0) fail(ErrorKind::PrecisionExhausted, "0^0 of a negligible element");
    long long o = static_cast<long long>(val_) * k;
    return RingElement::dvr_vanishing(o >= INT_MAX ? INT_MAX : static_cast<int>(o));
  }
  std::vector<Rat> one(unit_.size());
  one[0] = 1;
  result = RingElement::dvr(0, std::move(one));
  RingElement base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

IdealHandle::IdealHandle(Model m, const std::vector<RingElement>& g) : model(m) {
  for (const RingElement& e : g) {
    if (e.model() != m) fail(ErrorKind::ModelMismatch, "ideal generator from another model");
    if (!e.is_exact_zero()) gens.push_back(e);
  }
}

PolyExt::PolyExt(const RingElement& c) : model_(c.model()) {
  if (!c.is_negligible()) terms_.emplace(Key{0, 0}, c);
}

PolyExt PolyExt::monomial(Key k, const RingElement& c) {
  PolyExt p;
  p.model_ = c.model();
  if (!c.is_negligible()) p.terms_.emplace(k, c);
  return p;
}

void PolyExt::add_term(Key k, const RingElement& c) {
  if (c.is_negligible()) return;
  model_ = c.model();
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_negligible()) terms_.erase(it);
}

RingElement PolyExt::coeff(Key k) const {
  auto it = terms_.find(k);
  if (it != terms_.end()) return it->second;
  if (model_ == Model::Dvr) return RingElement::dvr_vanishing(INT_MAX);
  return RingElement::bivariate(Poly(2), Poly(2, 1));
}

int PolyExt::degree_T() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int PolyExt::degree_S() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

PolyExt operator+(const PolyExt& a, const PolyExt& b) {
  PolyExt r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

PolyExt operator-(const PolyExt& a, const PolyExt& b) {
  PolyExt r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

PolyExt operator*(const PolyExt& a, const PolyExt& b) {
  PolyExt r;
  r.model_ = a.model_;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

PolyExt PolyExt::pow(unsigned k) const {
  if (k == 0) fail(ErrorKind::PreconditionViolated, "PolyExt::pow(0) needs a ring unit");
  PolyExt r = *this;
  for (unsigned i = 1; i < k; ++i) r = r * *this;
  return r;
}

PolyExt PolyExt::eval_S(const RingElement& s) const {
  PolyExt r;
  r.model_ = model_;
  for (const auto& [k, c] : terms_) {
    RingElement v = c;
    for (int i = 0; i < k.first; ++i) v = v * s;
    r.add_term({0, k.second}, v);
  }
  return r;
}

PolyExt PolyExt::eval_T(const RingElement& t) const {
  PolyExt r;
  r.model_ = model_;
  for (const auto& [k, c] : terms_) {
    RingElement v = c;
    for (int i = 0; i < k.second; ++i) v = v * t;
    r.add_term({k.first, 0}, v);
  }
  return r;
}

}  // namespace ruled
