#pragma once

#include <functional>

namespace wdiv {

// Upper bound for sum_{n > M} a_n g(n) when a_n >= 0 with
// sum_{n <= t} a_n <= A(t) = t (1 + log t)^p and g >= 0 eventually decreasing:
//   A(s) sup_{t >= M} g(t) + int_s^inf A'(t) g(t) dt, s the last local maximum of g
// (s = M when g decreases on [M, inf)).
// p = 1 covers d(n); p = 3 covers d(n)^2 <= d_4(n).
double partial_summation_tail(double M, int p, const std::function<double(double)>& g);

}  // namespace wdiv
