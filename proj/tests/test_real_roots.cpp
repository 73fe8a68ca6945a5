#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rabi/real_roots.hpp"

using namespace rabi;

namespace {

UnivariatePoly from_roots(const std::vector<mpq_class>& roots) {
  std::vector<mpq_class> c{mpq_class(1)};
  for (const auto& r : roots) {
    std::vector<mpq_class> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return UnivariatePoly(std::move(c));
}

}  // namespace

TEST_CASE("roots strictly inside the interval are isolated in order") {
  const auto p = from_roots({mpq_class(2), mpq_class(1, 3), mpq_class(1, 2), mpq_class(-1)});
  const auto roots = isolate_real_roots(p, 0, 1, mpq_class(1, 1000000));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo <= mpq_class(1, 3));
  CHECK(roots[0].hi >= mpq_class(1, 3));
  CHECK(roots[1].lo <= mpq_class(1, 2));
  CHECK(roots[1].hi >= mpq_class(1, 2));
  CHECK(roots[0].hi - roots[0].lo <= mpq_class(1, 1000000));
}

TEST_CASE("roots on the endpoints are excluded") {
  const auto p = from_roots({mpq_class(0), mpq_class(1), mpq_class(3, 7)});
  const auto roots = isolate_real_roots(p, 0, 1, mpq_class(1, 1 << 20));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo <= mpq_class(3, 7));
  CHECK(roots[0].hi >= mpq_class(3, 7));
}

TEST_CASE("irrational roots and close pairs") {
  // t^2 - 1/2 has one root in (0, 1); the pair 0.3, 0.3 + 1e-9 must split.
  const auto p = UnivariatePoly({mpq_class(-1, 2), 0, 1});
  const auto r = isolate_real_roots(p, 0, 1, mpq_class(1, 1000000000));
  REQUIRE(r.size() == 1);
  const double mid = mpq_class((r[0].lo + r[0].hi) / 2).get_d();
  CHECK(mid == doctest::Approx(0.70710678118654752).epsilon(1e-9));

  const auto q = from_roots({mpq_class(3, 10), mpq_class(3, 10) + mpq_class(1, 1000000000)});
  CHECK(isolate_real_roots(q, 0, 1, mpq_class(mpz_class(1), mpz_class(1) << 40)).size() == 2);
}

TEST_CASE("Sturm counting") {
  const auto p = from_roots({mpq_class(1), mpq_class(2), mpq_class(3)});
  const auto chain = sturm_chain(p);
  CHECK(count_distinct_roots(chain, 0, 10) == 3);
  CHECK(count_distinct_roots(chain, mpq_class(3, 2), mpq_class(5, 2)) == 1);
  CHECK(count_distinct_roots(chain, 4, 5) == 0);
  // Double root counts once.
  CHECK(count_distinct_roots(sturm_chain(from_roots({mpq_class(1, 2), mpq_class(1, 2)})), 0, 1) == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(sturm_chain(UnivariatePoly{}), std::invalid_argument);
  const auto p = UnivariatePoly({-1, 1});
  CHECK_THROWS_AS(isolate_real_roots(p, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(isolate_real_roots(p, 0, 1, 0), std::invalid_argument);
}
