#include "rabi/constraint_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"
#include "rabi/errors.hpp"

namespace rabi {

unsigned BivariatePoly::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.dx + k.dy);
  return d;
}

unsigned BivariatePoly::x_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.dx;
}

mpz_class BivariatePoly::coeff(unsigned dx, unsigned dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BivariatePoly::add_term(unsigned dx, unsigned dy, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly BivariatePoly::partial_x() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_)
    if (k.dx > 0) out.add_term(k.dx - 1, k.dy, c * k.dx);
  return out;
}

BivariatePoly BivariatePoly::partial_y() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_)
    if (k.dy > 0) out.add_term(k.dx, k.dy - 1, c * k.dy);
  return out;
}

UnivariatePoly::UnivariatePoly(std::vector<mpq_class> c) : coeffs(std::move(c)) { normalize(); }

void UnivariatePoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

mpq_class UnivariatePoly::eval(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<unsigned long>(i));
  return UnivariatePoly(std::move(d));
}

BivariatePoly kus_polynomial(unsigned n, unsigned cap) {
  if (n == 0) throw std::invalid_argument("kus_polynomial: n must be >= 1");
  if (n > cap) throw CapExceeded(n, cap);

  BivariatePoly prev2;  // P_0 = 1
  prev2.add_term(0, 0, 1);
  BivariatePoly prev1;  // P_1 = X + Y - 1
  prev1.add_term(1, 0, 1);
  prev1.add_term(0, 1, 1);
  prev1.add_term(0, 0, -1);

  for (unsigned k = 2; k <= n; ++k) {
    BivariatePoly next;
    const mpz_class k_sq = mpz_class(k) * k;
    for (const auto& [e, c] : prev1.terms()) {
      next.add_term(e.dx + 1, e.dy, c * k);
      next.add_term(e.dx, e.dy + 1, c);
      next.add_term(e.dx, e.dy, -c * k_sq);
    }
    const mpz_class w = mpz_class(k) * (k - 1) * (n - k + 1);
    for (const auto& [e, c] : prev2.terms()) next.add_term(e.dx + 1, e.dy, -c * w);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

mpq_class eval_exact(const BivariatePoly& p, const mpq_class& x, const mpq_class& y) {
  if (p.is_zero()) return 0;
  // Terms are sorted by (dx, dy); group by dx and walk from the top.
  const unsigned top = p.x_degree();
  std::vector<std::vector<const mpz_class*>> by_x(top + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& row = by_x[e.dx];
    if (row.size() <= e.dy) row.resize(e.dy + 1, nullptr);
    row[e.dy] = &c;
  }
  mpq_class acc = 0;
  for (unsigned i = top + 1; i-- > 0;) {
    mpq_class cy = 0;
    const auto& row = by_x[i];
    for (std::size_t j = row.size(); j-- > 0;) {
      cy *= y;
      if (row[j]) cy += *row[j];
    }
    acc = acc * x + cy;
  }
  return acc;
}

UnivariatePoly restrict_to_y_axis(const BivariatePoly& p) {
  std::vector<mpq_class> c;
  for (const auto& [e, v] : p.terms()) {
    if (e.dx != 0) break;
    if (c.size() <= e.dy) c.resize(e.dy + 1, 0);
    c[e.dy] = v;
  }
  return UnivariatePoly(std::move(c));
}

UnivariatePoly restrict_to_x_axis(const BivariatePoly& p) {
  std::vector<mpq_class> c;
  for (const auto& [e, v] : p.terms()) {
    if (e.dy != 0) continue;
    if (c.size() <= e.dx) c.resize(e.dx + 1, 0);
    c[e.dx] = v;
  }
  return UnivariatePoly(std::move(c));
}

UnivariatePoly restrict_to_y_axis(unsigned n, unsigned cap) {
  return restrict_to_y_axis(kus_polynomial(n, cap));
}

UnivariatePoly restrict_to_x_axis(unsigned n, unsigned cap) {
  return restrict_to_x_axis(kus_polynomial(n, cap));
}

UnivariatePoly restrict_to_line(const BivariatePoly& p, const mpq_class& y0, const mpq_class& slope) {
  const unsigned deg = p.total_degree();
  // Powers of the linear form y0 + slope*t, as dense coefficient vectors.
  std::vector<std::vector<mpq_class>> ypow(deg + 1);
  ypow[0] = {mpq_class(1)};
  for (unsigned j = 1; j <= deg; ++j) {
    const auto& prev = ypow[j - 1];
    std::vector<mpq_class> cur(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i] += prev[i] * y0;
      cur[i + 1] += prev[i] * slope;
    }
    ypow[j] = std::move(cur);
  }
  std::vector<mpq_class> out(deg + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    const auto& yp = ypow[e.dy];
    for (std::size_t i = 0; i < yp.size(); ++i) out[e.dx + i] += c * yp[i];
  }
  return UnivariatePoly(std::move(out));
}

std::string to_json(unsigned n, const BivariatePoly& p) {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["dx"] = e.dx;
    t["dy"] = e.dy;
    t["c"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::pair<unsigned, BivariatePoly> poly_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BivariatePoly p;
    for (const auto& t : j.at("terms")) {
      mpz_class c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0)
        throw std::invalid_argument("bad coefficient");
      p.add_term(t.at("dx").get<unsigned>(), t.at("dy").get<unsigned>(), c);
    }
    return {j.at("n").get<unsigned>(), std::move(p)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
  }
}

mpq_class parse_rational(const std::string& text) {
  auto fail = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw fail();
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_dot) --scale;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  if (pos < text.size()) {
    const std::string exp = text.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp.size()) throw fail();
    scale += e;
  }
  mpq_class q(mpz_class(digits, 10));
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0)
    q *= ten_pow;
  else
    q /= ten_pow;
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace rabi
