#pragma once

#include <map>
#include <string>
#include <vector>

#include "ruled/rational.hpp"

namespace ruled {

using Exp = std::vector<int>;

// Sparse polynomial over Q in a fixed number of variables.
class Poly {
 public:
  Poly() : n_(0) {}
  explicit Poly(int nvars) : n_(nvars) {}
  Poly(int nvars, const Rat& c);

  static Poly var(int nvars, int i, int power = 1);
  static Poly monomial(const Exp& e, const Rat& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(const Exp& e) const;
  const std::map<Exp, Rat>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exp& e, const Rat& c);

  int total_degree() const;
  int degree_in(int i) const;
  int min_degree_in(int i) const;
  int top_var() const;  // largest variable index present, -1 for constants

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const;
  // Evaluate variable i at the given polynomial.
  Poly substitute(int i, const Poly& value) const;
  Poly eval_var(int i, const Rat& value) const;
  // Embed into more variables (new ones appended), or map variable i -> index map[i].
  Poly extend(int nvars) const;
  Poly remap(int nvars, const std::vector<int>& map) const;
  // Leading term in lexicographic order (used by exact division).
  std::pair<Exp, Rat> lex_lead() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_;
  std::map<Exp, Rat> terms_;
};

// Exact division; throws DivisionImpossible if b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);
bool divides_poly(const Poly& b, const Poly& a, Poly* quotient = nullptr);
// Greatest common divisor, normalized so the lex-leading coefficient is 1.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace ruled
