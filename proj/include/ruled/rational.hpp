#pragma once

#include <gmpxx.h>

#include <string>

namespace ruled {

using Rat = mpq_class;

// Parses "3", "-3/4". Throws ParseError on anything else.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);

// Rational n-th root when it exists.
bool rat_root(const Rat& q, unsigned n, Rat& out);

}  // namespace ruled
