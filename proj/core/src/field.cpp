#include "gpd/field.hpp"

#include <algorithm>
#include <sstream>

namespace gpd {

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw FieldMismatchError("elements belong to different fields (" +
                             a.field().symbol() + " vs " + b.field().symbol() +
                             ")");
  }
}

// In-place reduction modulo the monic m: t^deg = -sum_{i<deg} m_i t^i.
void reduce_mod(std::vector<Rational>& c, const std::vector<Integer>& m,
                int deg) {
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    Rational lead = c[k];
    c[k] = 0;
    if (lead != 0) {
      for (int i = 0; i < deg; ++i) {
        c[k - deg + i] -= lead * Rational(m[i]);
      }
    }
  }
  c.resize(static_cast<std::size_t>(deg));
}

using Poly = std::vector<Rational>;  // low degree first, trimmed

int poly_deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<std::size_t>(poly_deg(p) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Euclidean division, returns quotient and leaves the remainder in num.
Poly poly_divmod(Poly& num, const Poly& den) {
  int dd = poly_deg(den);
  Poly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1);
  while (poly_deg(num) >= dd && poly_deg(num) >= 0) {
    int dn = poly_deg(num);
    Rational coef = num[dn] / den[dd];
    q[dn - dd] += coef;
    for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= coef * den[i];
    trim(num);
  }
  trim(q);
  return q;
}

}  // namespace

Field Field::rationals() { return from_min_poly(std::vector<long long>{0, 1}); }

Field Field::from_min_poly(const std::vector<long long>& coeffs,
                           std::string symbol) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return from_min_poly(std::move(c), std::move(symbol));
}

Field Field::from_min_poly(std::vector<Integer> coeffs, std::string symbol) {
  if (coeffs.size() < 2) {
    throw PreconditionError("minimal polynomial must have degree >= 1");
  }
  if (coeffs.back() != 1) {
    throw PreconditionError("minimal polynomial must be monic");
  }
  auto data = std::make_shared<detail::FieldData>();
  data->degree = static_cast<int>(coeffs.size()) - 1;
  data->min_poly = std::move(coeffs);
  data->symbol = std::move(symbol);
  return Field(std::move(data));
}

FieldElement Field::zero() const {
  return FieldElement(data_, std::vector<Rational>(degree()));
}

FieldElement Field::one() const { return integer(1); }

FieldElement Field::integer(long long n) const { return rational(Rational(n)); }

FieldElement Field::rational(const Rational& r) const {
  std::vector<Rational> c(degree());
  c[0] = r;
  return FieldElement(data_, std::move(c));
}

FieldElement Field::generator() const {
  std::vector<Rational> c(degree() + 1);
  c[1] = 1;
  return element(std::move(c));
}

FieldElement Field::element(std::vector<Rational> coeffs) const {
  reduce_mod(coeffs, data_->min_poly, degree());
  return FieldElement(data_, std::move(coeffs));
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& r) { return r == 0; });
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return FieldElement(data_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return FieldElement(a.data_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return FieldElement(a.data_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  const int deg = a.data_->degree;
  std::vector<Rational> prod(2 * static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod(prod, a.data_->min_poly, deg);
  return FieldElement(a.data_, std::move(prod));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero");
  // Extended Euclid on (a(t), m(t)) over Q[t], tracking the a-coefficient.
  Poly r0(data_->min_poly.begin(), data_->min_poly.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (poly_deg(r1) > 0) {
    Poly rem = r0;
    Poly q = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
    if (poly_deg(r1) < 0) {
      throw NonInvertibleError(
          "element is a zero divisor: the minimal polynomial is reducible");
    }
  }
  Rational lead_inv = 1 / r1[0];
  std::vector<Rational> out(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * lead_inv;
  return field().element(std::move(out));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = gpd::cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string FieldElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) {
      out << mag.str();
      if (i > 0) out << "*";
    }
    if (i >= 1) {
      out << data_->symbol;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace gpd
