#ifndef RABI_CONSTRAINT_POLY_HPP
#define RABI_CONSTRAINT_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rabi {

/// Default ceiling on exact construction. Coefficients of P_n grow like
/// (n!)^2, so P_64 already carries ~600-bit integers across ~2000 terms.
inline constexpr unsigned kDefaultExactCap = 64;

/// Exponent pair of a monomial X^dx Y^dy.
struct Bidegree {
  unsigned dx = 0;
  unsigned dy = 0;
  auto operator<=>(const Bidegree&) const = default;
};

/// Sparse integer polynomial in (X, Y). Zero coefficients are never stored.
class BivariatePoly {
 public:
  using Terms = std::map<Bidegree, mpz_class>;

  BivariatePoly() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned total_degree() const noexcept;
  /// Highest power of X present (0 for constants and the zero polynomial).
  unsigned x_degree() const noexcept;

  mpz_class coeff(unsigned dx, unsigned dy) const;
  /// Adds c to the coefficient of X^dx Y^dy, erasing the term if it cancels.
  void add_term(unsigned dx, unsigned dy, const mpz_class& c);

  /// d/dX and d/dY.
  BivariatePoly partial_x() const;
  BivariatePoly partial_y() const;

  bool operator==(const BivariatePoly&) const = default;

 private:
  Terms terms_;
};

/// Dense univariate polynomial over Q, coeffs[i] multiplies t^i.
struct UnivariatePoly {
  std::vector<mpq_class> coeffs;

  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<mpq_class> c);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  mpq_class eval(const mpq_class& t) const;
  UnivariatePoly derivative() const;
  /// Drops trailing zero coefficients.
  void normalize();

  bool operator==(const UnivariatePoly&) const = default;
};

/// P_n(X, Y) = P^{(n)}_n via the three-term recursion
///   P_k = (kX + Y - k^2) P_{k-1} - k(k-1)(n-k+1) X P_{k-2},
/// P_0 = 1, P_1 = X + Y - 1. Throws std::invalid_argument for n = 0 and
/// CapExceeded for n > cap.
BivariatePoly kus_polynomial(unsigned n, unsigned cap = kDefaultExactCap);

/// Exact value at (x, y): Horner in X over coefficients that are themselves
/// Horner-evaluated polynomials in Y.
mpq_class eval_exact(const BivariatePoly& p, const mpq_class& x, const mpq_class& y);

/// P_n(0, Y). Equals prod_{m=1..n} (Y - m^2).
UnivariatePoly restrict_to_y_axis(unsigned n, unsigned cap = kDefaultExactCap);
UnivariatePoly restrict_to_y_axis(const BivariatePoly& p);

/// P_n(x, 0). Equals (-1)^n (n!)^2 L_n(x).
UnivariatePoly restrict_to_x_axis(unsigned n, unsigned cap = kDefaultExactCap);
UnivariatePoly restrict_to_x_axis(const BivariatePoly& p);

/// t -> p(t, y0 + slope * t). With y0 = 1, slope = -1 this restricts to the
/// line X + Y = 1, the zero set of P_1.
UnivariatePoly restrict_to_line(const BivariatePoly& p, const mpq_class& y0,
                                const mpq_class& slope);

/// JSON form `{"n": n, "terms": [{"dx":..,"dy":..,"c":"<decimal>"}, ...]}`,
/// terms in ascending (dx, dy) order.
std::string to_json(unsigned n, const BivariatePoly& p);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
std::pair<unsigned, BivariatePoly> poly_from_json(const std::string& text);

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "5e-3" into an
/// exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace rabi

#endif
