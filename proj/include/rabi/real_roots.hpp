#ifndef RABI_REAL_ROOTS_HPP
#define RABI_REAL_ROOTS_HPP

#include <gmpxx.h>

#include <vector>

#include "rabi/constraint_poly.hpp"

namespace rabi {

/// Isolating interval [lo, hi] for one real root. lo == hi when the root is
/// an exact rational hit by the subdivision.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
};

/// Sturm chain p, p', -rem(p_{i-1}, p_i), ... over Q.
std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t count_distinct_roots(const std::vector<UnivariatePoly>& chain, const mpq_class& a,
                                 const mpq_class& b);

/// Distinct real roots of p strictly inside (a, b), each isolated and then
/// shrunk by exact bisection to width <= width. Ascending order.
std::vector<RootInterval> isolate_real_roots(const UnivariatePoly& p, const mpq_class& a,
                                             const mpq_class& b, const mpq_class& width);

}  // namespace rabi

#endif
