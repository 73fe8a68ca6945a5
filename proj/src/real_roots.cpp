#include "rabi/real_roots.hpp"

#include <stdexcept>

namespace rabi {
namespace {

int sign(const mpq_class& v) { return sgn(v); }

// Remainder of a / b over Q.
UnivariatePoly poly_rem(UnivariatePoly a, const UnivariatePoly& b) {
  const int db = b.degree();
  const mpq_class& lead = b.coeffs.back();
  while (a.degree() >= db) {
    const int shift = a.degree() - db;
    const mpq_class f = a.coeffs.back() / lead;
    for (int i = 0; i <= db; ++i) a.coeffs[shift + i] -= f * b.coeffs[i];
    a.coeffs.pop_back();
    a.normalize();
  }
  return a;
}

// Scales to a primitive-ish form so coefficient growth stays tame; only the
// sign pattern matters for Sturm counting, so any positive rescale is fine.
void make_content_free(UnivariatePoly& p) {
  if (p.is_zero()) return;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  const mpq_class scale(den_lcm, num_gcd);
  for (auto& c : p.coeffs) c *= scale;
}

std::size_t sign_changes(const std::vector<UnivariatePoly>& chain, const mpq_class& t) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<UnivariatePoly> chain{p};
  make_content_free(chain.back());
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  make_content_free(chain.back());
  while (chain.back().degree() > 0) {
    UnivariatePoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    for (auto& c : r.coeffs) c = -c;
    make_content_free(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t count_distinct_roots(const std::vector<UnivariatePoly>& chain, const mpq_class& a,
                                  const mpq_class& b) {
  const std::size_t va = sign_changes(chain, a);
  const std::size_t vb = sign_changes(chain, b);
  return va >= vb ? va - vb : 0;
}

std::vector<RootInterval> isolate_real_roots(const UnivariatePoly& p, const mpq_class& a,
                                             const mpq_class& b, const mpq_class& width) {
  if (!(a < b)) throw std::invalid_argument("isolate_real_roots: need a < b");
  if (width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
  const auto chain = sturm_chain(p);
  const bool root_at_b = sign(p.eval(b)) == 0;

  // Half-open work intervals (lo, hi]; a root at `a` is never counted.
  struct Item {
    mpq_class lo, hi;
  };
  std::vector<RootInterval> out;
  std::vector<Item> stack{{a, b}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const std::size_t k = count_distinct_roots(chain, it.lo, it.hi);
    if (k == 0) continue;
    if (k == 1) {
      if (it.hi == b && root_at_b) continue;
      if (sign(p.eval(it.hi)) == 0) {
        out.push_back({it.hi, it.hi});
        continue;
      }
      if (it.hi - it.lo <= width) {
        out.push_back({it.lo, it.hi});
        continue;
      }
    }
    const mpq_class mid = (it.lo + it.hi) / 2;
    // Push the right half first so the output ascends.
    stack.push_back({mid, it.hi});
    stack.push_back({it.lo, mid});
  }
  return out;
}

}  // namespace rabi
