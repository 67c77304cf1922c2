#pragma once

#include <cstddef>
#include <vector>

#include "ruled/poly.hpp"

namespace ruled {

// Degree-reverse-lexicographic order, optionally refined into two blocks:
// variables [elim_from, n) form a block compared first (the eliminated block).
struct MonomialOrder {
  int elim_from = -1;  // -1: plain grevlex over all variables
  bool less(const Exp& a, const Exp& b) const;
};

struct GroebnerOptions {
  MonomialOrder order;
  std::size_t pair_cap = 10000;
};

// Reduced Groebner basis. Throws DegreeCapExceeded past the S-pair cap.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opt);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);

// Is 1 in the ideal generated by gens inside Q[base]_(origin)[extra]?
// Base variables are [0, nbase); remaining variables are polynomial.
bool unit_ideal_local(const std::vector<Poly>& gens, int nbase, std::size_t pair_cap);
// f in sqrt(<gens>) after localizing the base variables at the origin.
bool radical_member_local(const Poly& f, const std::vector<Poly>& gens, int nbase, std::size_t pair_cap);
// f in <gens> after localizing the base variables (gens and f involve base variables only).
bool ideal_member_local(const Poly& f, const std::vector<Poly>& gens, std::size_t pair_cap);

}  // namespace ruled
