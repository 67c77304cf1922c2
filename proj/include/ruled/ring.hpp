#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruled/poly.hpp"
#include "ruled/rational.hpp"

namespace ruled {

enum class Model { Dvr, Bivariate };

const char* model_name(Model m);

// Element of the local ring.
//  Dvr:       x^val * (unit[0] + unit[1] x + ...), known modulo x^(val + unit.size()).
//             An empty unit means the element vanishes modulo x^val (val == INT_MAX: exact zero).
//  Bivariate: num/den in Q[u,v], coprime, den(0,0) == 1.
class RingElement {
 public:
  RingElement() = default;

  static RingElement dvr(int val, std::vector<Rat> unit);
  static RingElement dvr_vanishing(int order);
  static RingElement bivariate(const Poly& num, const Poly& den);

  Model model() const { return model_; }
  bool is_exact_zero() const;
  // Dvr: zero at the tracked precision. Bivariate: exact zero.
  bool is_negligible() const;

  int val() const { return val_; }
  const std::vector<Rat>& unit() const { return unit_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // Value at the closed point.
  Rat residue() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;
  RingElement pow(unsigned k) const;

 private:
  Model model_ = Model::Dvr;
  int val_ = INT_MAX;
  std::vector<Rat> unit_;
  Poly num_, den_;
};

// An ideal of R given by generators; zero generators are dropped.
struct IdealHandle {
  Model model = Model::Dvr;
  std::vector<RingElement> gens;
  IdealHandle() = default;
  IdealHandle(Model m, const std::vector<RingElement>& g);
};

// Polynomial in S, T with coefficients in R.
class PolyExt {
 public:
  using Key = std::pair<int, int>;  // (deg S, deg T)
  PolyExt() = default;
  explicit PolyExt(const RingElement& c);
  static PolyExt monomial(Key k, const RingElement& c);

  const std::map<Key, RingElement>& terms() const { return terms_; }
  void add_term(Key k, const RingElement& c);
  bool is_zero() const { return terms_.empty(); }
  RingElement coeff(Key k) const;
  int degree_T() const;
  int degree_S() const;

  friend PolyExt operator+(const PolyExt& a, const PolyExt& b);
  friend PolyExt operator-(const PolyExt& a, const PolyExt& b);
  friend PolyExt operator*(const PolyExt& a, const PolyExt& b);
  PolyExt pow(unsigned k) const;

  PolyExt eval_S(const RingElement& s) const;
  PolyExt eval_T(const RingElement& t) const;

 private:
  std::map<Key, RingElement> terms_;
  Model model_ = Model::Dvr;
  friend class Ring;
};

struct RingConfig {
  Model model = Model::Dvr;
  int trunc = 16;
  std::size_t groebner_cap = 10000;
};

class Ring {
 public:
  explicit Ring(RingConfig cfg = {});
  const RingConfig& config() const { return cfg_; }
  Model model() const { return cfg_.model; }
  int nbase() const { return cfg_.model == Model::Dvr ? 1 : 2; }

  RingElement constant(const Rat& c) const;
  RingElement zero() const;
  RingElement one() const { return constant(1); }
  RingElement var(const std::string& name) const;
  RingElement from_poly(const Poly& p) const;

  RingElement parse(const std::string& text) const;
  std::string str(const RingElement& e) const;
  std::string str(const PolyExt& p) const;

  bool equal(const RingElement& a, const RingElement& b) const;
  bool equal(const PolyExt& a, const PolyExt& b) const;

  bool is_zero(const RingElement& e) const { return e.is_negligible(); }
  bool is_unit(const RingElement& e) const;
  bool divides(const RingElement& a, const RingElement& b) const;
  RingElement div(const RingElement& b, const RingElement& a) const;  // b / a, must lie in R
  std::optional<RingElement> unit_multiple(const RingElement& a, const RingElement& b) const;
  std::optional<RingElement> pair_principal(const RingElement& f, const RingElement& g) const;
  std::optional<RingElement> principal_generator(const IdealHandle& I) const;

  bool ideal_membership(const RingElement& f, const IdealHandle& I) const;
  bool radical_membership(const RingElement& f, const IdealHandle& I) const;
  // Always goes through Rabinowitsch, also for the Dvr model.
  bool radical_membership_groebner(const RingElement& f, const IdealHandle& I) const;

  std::optional<RingElement> nth_root_unit(const RingElement& e, unsigned n) const;
  // n-th root of an arbitrary element; throws RootUnavailable.
  RingElement nth_root(const RingElement& e, unsigned n) const;
  RingElement substitute_base(const RingElement& e, unsigned b) const;

  // Exact valuation (Dvr only); PrecisionExhausted for negligible elements.
  int valuation(const RingElement& e) const;

  // Polynomial representatives over Q in nbase() variables (units at the origin dropped
  // or cleared), used to pose local ideal questions.
  Poly to_poly(const RingElement& e) const;
  // Generator in Q[base, S, T] representing p up to a unit of R.
  Poly to_poly(const PolyExt& p) const;

  // 1 in <gens> inside R[S, T].
  bool unit_ideal(const std::vector<PolyExt>& gens) const;
  // f in sqrt(<gens>) inside R[S, T].
  bool radical_member(const PolyExt& f, const std::vector<PolyExt>& gens) const;

  // Element with same expansion in the bivariate model (x -> u).
  static RingElement embed_bivariate(const RingElement& e);

 private:
  RingConfig cfg_;
};

}  // namespace ruled
