#include "bim/bounds.hpp"

#include <cmath>

#include "bim/combinatorics.hpp"
#include "bim/encoding.hpp"
#include "bim/greedy_star.hpp"

namespace bim {

BoundsReport bounds_table(std::size_t n, std::size_t r, unsigned b, const ChromaticComplex* c) {
  if (n < 2 || r == 0 || b == 0 || b > 31) {
    throw Error(ErrorKind::InvalidParameters, "bounds need n >= 2, r >= 1, 1 <= b <= 31");
  }
  BoundsReport rep;
  rep.n = n;
  rep.r = r;
  rep.b = b;
  if (n == 2) {
    rep.two_processes = true;
    rep.reported_rounds = 1;
  } else {
    const double base = std::pow(static_cast<double>(factorial(n)), static_cast<double>(r - 1));
    rep.lower_formula = base * std::ldexp(1.0, static_cast<int>(n) - static_cast<int>(b));
    rep.snapshot_upper_formula = *rep.lower_formula * static_cast<double>(n);
  }
  if (c != nullptr && !c->empty()) {
    rep.degree_lower_bound = lower_bound_rounds(*c, b);
    rep.star_upper_bound = upper_bound_rounds(*c, b);
  }
  return rep;
}

}  // namespace bim
