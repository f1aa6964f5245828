#pragma once

#include <cstddef>
#include <optional>

#include "vwreath/base.hpp"
#include "vwreath/gamma.hpp"
#include "vwreath/thompson.hpp"

// Reference evaluators written directly from the defining formulas. They
// read the raw cell data and never call the transport code they check.
namespace vwreath::oracle {

struct Located {
  DyadicPoint point;
  int exponent;  // log2 of the derivative at the located domain point
};

// v(y) and the slope exponent at y.
Located forward(const VElement& v, const DyadicPoint& y);
// v^-1(x) and the slope exponent of v at v^-1(x).
Located backward(const VElement& v, const DyadicPoint& x);

int eval(const KElement& a, const DyadicPoint& x);
// beta^{-n}(a(v^-1 x)) with n the slope exponent of v at v^-1 x.
int action_eval(const VElement& v, const KElement& a, const DyadicPoint& x);

// p_v(x) = log2 v'(v^-1 x) - nu(x) + nu(v^-1 x) with nu(x) = -|stem(x)|.
long s0_exponent(const VElement& v, const DyadicPoint& x);
// log2 v'(v^-1 x).
long s_exponent(const VElement& v, const DyadicPoint& x);

// Number of distinct windows (beta^12(g), ..., beta^8(g)) over g in Gamma:
// sequences compatible under beta that lift through `depth` levels.
std::size_t inverse_limit_count(const GroupHom& beta, std::size_t depth = 12, std::size_t window = 5);

// Image of the word u under the bit-flip conjugate of v, when u lies in one cell.
std::optional<Word> flip_conjugate(const VElement& v, const Word& u);

}  // namespace vwreath::oracle
