#include "p1bimod/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace p1bimod {

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::linear_root(const Scalar& root) {
  Field f = root.field();
  return Poly(f, {-root, f.one()});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::scaled(const Scalar& s) const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  r.trim();
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Field f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(a.coeffs().size() - b.coeffs().size() + 1, f.zero());
  const Scalar inv = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar c = rem[k + db] * inv;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j].sub_product(c, b.coeffs()[j]);
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus) {
  Field f = base.field();
  Poly result = divmod(Poly::constant(f.one()), modulus).second;
  Poly b = divmod(base, modulus).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

namespace {

// Prime factorization of |n| > 0 by trial division and Pollard rho.
void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 2000; ++p) {
    if (n == 1) return;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, int> f;
  factor_into(n, f);
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : f) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

std::size_t strip_root(Poly& f, const Scalar& root) {
  std::size_t mult = 0;
  Poly lin = Poly::linear_root(root);
  while (f.degree() >= 1) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++mult;
  }
  return mult;
}

RootFactorization rational_roots(Poly f) {
  Field field = f.field();
  RootFactorization out;
  std::size_t total = 0;
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  std::size_t zero_mult = strip_root(f, field.zero());
  if (zero_mult) {
    out.roots.emplace_back(field.zero(), zero_mult);
    total += zero_mult;
  }
  if (f.degree() >= 1) {
    // Clear denominators to an integer polynomial.
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(mpz_class(c.rational() * l));
    auto num_div = divisors(ic.front());
    auto den_div = divisors(ic.back());
    std::vector<mpq_class> candidates;
    for (const auto& a : num_div) {
      for (const auto& b : den_div) {
        mpq_class q(a, b);
        q.canonicalize();
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& q : candidates) {
      if (f.degree() < 1) break;
      Scalar r = field.from_rational(q);
      if (!f.eval(r).is_zero()) continue;
      std::size_t m = strip_root(f, r);
      out.roots.emplace_back(r, m);
      total += m;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.splits = total == deg;
  return out;
}

// Distinct roots of a squarefree product of linear factors over F_p.
void split_linear(const Poly& g, std::vector<Scalar>& roots, std::uint64_t p) {
  Field field = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    Poly m = g.monic();
    roots.push_back(-m.coeff(0));
    return;
  }
  mpz_class e = (mpz_class(std::to_string(p)) - 1) / 2;
  for (long long a = 0;; ++a) {
    Poly shifted(field, {field.from_int(a), field.one()});
    Poly h = powmod(shifted, e, g) - Poly::constant(field.one());
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, roots, p);
      split_linear(exact_div(g, d), roots, p);
      return;
    }
  }
}

RootFactorization prime_field_roots(Poly f) {
  Field field = f.field();
  const std::uint64_t p = field.characteristic();
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  std::vector<Scalar> distinct;
  if (p <= 5000) {
    for (std::uint64_t a = 0; a < p; ++a) {
      Scalar s = field.from_int(static_cast<long long>(a));
      if (f.eval(s).is_zero()) distinct.push_back(s);
    }
  } else {
    Poly t(field, {field.zero(), field.one()});
    Poly tp = powmod(t, mpz_class(std::to_string(p)), f);
    Poly g = gcd(f, tp - t);
    split_linear(g, distinct, p);
  }
  std::sort(distinct.begin(), distinct.end());
  RootFactorization out;
  std::size_t total = 0;
  for (const auto& r : distinct) {
    std::size_t m = strip_root(f, r);
    out.roots.emplace_back(r, m);
    total += m;
  }
  out.splits = total == deg;
  return out;
}

}  // namespace

RootFactorization find_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (f.degree() == 0) return {{}, true};
  return f.field().is_rational() ? rational_roots(f) : prime_field_roots(f);
}

Poly poly_det(std::vector<std::vector<Poly>> m, Field field) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(field.one());
  bool negate = false;
  Poly prev = Poly::constant(field.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) return Poly(field);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? det.scaled(field.from_int(-1)) : det;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  Field f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pm[i][j] = i == j ? Poly(f, {-m(i, j), f.one()}) : Poly(f, {-m(i, j)});
    }
  }
  return poly_det(std::move(pm), f);
}

}  // namespace p1bimod
