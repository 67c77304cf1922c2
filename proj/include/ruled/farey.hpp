#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ruled {

// Reduced non-negative fraction a/b; 1/0 is infinity.
class Slope {
 public:
  Slope() : a_(0), b_(1) {}
  Slope(std::int64_t a, std::int64_t b);

  static Slope infinity() { return Slope(1, 0); }
  static Slope parse(const std::string& s);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  bool is_inf() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0; }
  bool is_integer() const { return b_ == 1; }
  std::int64_t floor() const;

  std::string str() const;

  friend bool operator==(const Slope& l, const Slope& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator<(const Slope& l, const Slope& r);
  friend bool operator>(const Slope& l, const Slope& r) { return r < l; }
  friend bool operator<=(const Slope& l, const Slope& r) { return !(r < l); }
  friend bool operator>=(const Slope& l, const Slope& r) { return !(l < r); }

 private:
  std::int64_t a_, b_;
};

Slope mediant(const Slope& l, const Slope& r);
bool unimodular(const Slope& l, const Slope& r);

// Stern-Brocot descent from 0/1, 1/1 towards target (0 < target <= 1).
std::vector<Slope> farey_path(const Slope& target);

}  // namespace ruled
