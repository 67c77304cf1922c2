#include "ruled/farey.hpp"

#include <numeric>

#include "ruled/errors.hpp"

namespace ruled {

Slope::Slope(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) fail(ErrorKind::InvalidSlope, "negative slope component");
  if (a == 0 && b == 0) fail(ErrorKind::InvalidSlope, "0/0 is not a slope");
  std::int64_t g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

Slope Slope::parse(const std::string& s) {
  if (s == "inf") return infinity();
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long a = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Slope(a, 1);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    long long a = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(s);
    long long b = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(s);
    return Slope(a, b);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad slope '" + s + "'");
  }
}

std::int64_t Slope::floor() const {
  if (is_inf()) fail(ErrorKind::InvalidSlope, "floor of infinity");
  return a_ / b_;
}

std::string Slope::str() const {
  if (is_inf()) return "inf";
  return std::to_string(a_) + "/" + std::to_string(b_);
}

bool operator<(const Slope& l, const Slope& r) {
  // a/b < c/d  iff  a*d < c*b; works with b = 0 for infinity.
  return static_cast<__int128>(l.a_) * r.b_ < static_cast<__int128>(r.a_) * l.b_;
}

Slope mediant(const Slope& l, const Slope& r) {
  if (!(l < r)) fail(ErrorKind::OrderViolation, "mediant needs " + l.str() + " < " + r.str());
  return Slope(l.a() + r.a(), l.b() + r.b());
}

bool unimodular(const Slope& l, const Slope& r) {
  return static_cast<__int128>(r.a()) * l.b() - static_cast<__int128>(l.a()) * r.b() == 1;
}

std::vector<Slope> farey_path(const Slope& target) {
  if (target.is_inf() || target.is_zero() || Slope(1, 1) < target)
    fail(ErrorKind::InvalidSlope, "farey_path needs 0 < target <= 1, got " + target.str());
  std::vector<Slope> path{Slope(0, 1), Slope(1, 1)};
  if (target == path.back()) return path;
  Slope lo = path[0], hi = path[1];
  const std::int64_t cap = 4 * (target.a() + target.b());
  for (std::int64_t step = 0; step < cap; ++step) {
    Slope m = mediant(lo, hi);
    path.push_back(m);
    if (m == target) return path;
    if (m < target) lo = m; else hi = m;
  }
  fail(ErrorKind::NonTermination, "farey_path exceeded iteration cap for " + target.str());
}

}  // namespace ruled
