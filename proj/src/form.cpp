#include "p1bimod/form.hpp"

#include <stdexcept>

#include "p1bimod/poly.hpp"

namespace p1bimod {

Form Form::zero(Field field, std::size_t degree) { return {field, std::vector<Scalar>(degree + 1, field.zero())}; }

Form Form::monomial(Field field, std::size_t a, std::size_t b) {
  Form f = zero(field, a + b);
  f.coeffs_[b] = field.one();
  return f;
}

bool Form::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Scalar Form::eval(const Scalar& x0, const Scalar& x1) const {
  Scalar acc = field_.zero();
  const std::size_t d = degree();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Scalar term = coeffs_[j];
    for (std::size_t k = 0; k < d - j; ++k) term *= x0;
    for (std::size_t k = 0; k < j; ++k) term *= x1;
    acc += term;
  }
  return acc;
}

Form operator*(const Form& a, const Form& b) {
  if (a.is_none() || b.is_none()) return Form::none(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  return {a.field_, std::move(c)};
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("adding forms of different degree");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

Form Form::pow(std::size_t k) const {
  Form r = one(field_);
  for (std::size_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::size_t Form::order_at(const P1Point& p) const {
  if (is_zero()) throw std::domain_error("order of the zero form");
  const std::size_t d = degree();
  if (p.is_infinity()) {
    std::size_t k = 0;
    while (k <= d && coeffs_[k].is_zero()) ++k;
    return k;
  }
  // f(t, 1) = sum_j c_j t^(d-j)
  std::vector<Scalar> c(d + 1, field_.zero());
  for (std::size_t j = 0; j <= d; ++j) c[d - j] = coeffs_[j];
  Poly f(field_, std::move(c));
  Poly lin = Poly::linear_root(p.p0());
  std::size_t k = 0;
  while (f.degree() >= 1) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++k;
  }
  return k;
}

bool Form::operator==(const Form& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  return coeffs_ == o.coeffs_;
}

std::string Form::to_string() const {
  if (is_none()) return "none";
  std::string s;
  const std::size_t d = degree();
  for (std::size_t j = 0; j <= d; ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[j].to_string() + ")";
    if (d - j) s += "*x0^" + std::to_string(d - j);
    if (j) s += "*x1^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

}  // namespace p1bimod
