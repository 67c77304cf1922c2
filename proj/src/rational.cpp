#include "ruled/rational.hpp"

#include "ruled/errors.hpp"

namespace ruled {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
  Rat q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

static bool int_root(const mpz_class& z, unsigned n, mpz_class& out) {
  if (z < 0) {
    if (n % 2 == 0) return false;
    mpz_class pos = -z;
    if (!int_root(pos, n, out)) return false;
    out = -out;
    return true;
  }
  return mpz_root(out.get_mpz_t(), z.get_mpz_t(), n) != 0;
}

bool rat_root(const Rat& q, unsigned n, Rat& out) {
  if (n == 0) return false;
  mpz_class num, den;
  if (!int_root(q.get_num(), n, num)) return false;
  if (!int_root(q.get_den(), n, den)) return false;
  out = Rat(num, den);
  out.canonicalize();
  return true;
}

}  // namespace ruled
