#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gpd/errors.hpp"
#include "gpd/rational.hpp"

namespace gpd {

namespace detail {
struct FieldData {
  std::vector<Integer> min_poly;  // monic, low degree first, size degree+1
  int degree = 1;
  std::string symbol = "t";
};
}  // namespace detail

class FieldElement;

// A number field Q[t]/(m(t)) for a monic integer polynomial m. The rationals
// themselves are the degree-1 case m(t) = t, so every scalar in the library
// is a FieldElement of some Field.
//
// Irreducibility of user-supplied m is not checked; inverting an element that
// shares a factor with a reducible m raises NonInvertibleError at that point.
class Field {
 public:
  static Field rationals();
  // coeffs low degree first, e.g. {1,1,1} for t^2+t+1.
  static Field from_min_poly(const std::vector<long long>& coeffs,
                             std::string symbol = "t");
  static Field from_min_poly(std::vector<Integer> coeffs,
                             std::string symbol = "t");

  int degree() const { return data_->degree; }
  const std::vector<Integer>& min_poly() const { return data_->min_poly; }
  const std::string& symbol() const { return data_->symbol; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement integer(long long n) const;
  FieldElement rational(const Rational& r) const;
  // The class of t. For m(t) = t this is 0.
  FieldElement generator() const;
  // Reduces an arbitrary-length coefficient vector modulo m.
  FieldElement element(std::vector<Rational> coeffs) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ || a.data_->min_poly == b.data_->min_poly;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  friend class FieldElement;
  explicit Field(std::shared_ptr<const detail::FieldData> d)
      : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

// Element of Q[t]/(m(t)), stored as exactly degree() reduced rational
// coefficients of 1, t, ..., t^(degree-1). Immutable; equality is
// coefficient-wise.
class FieldElement {
 public:
  Field field() const { return Field(data_); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // no t-part
  // Constant term; meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  FieldElement operator-() const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }
  // Lexicographic coefficient order; a total order used for canonical,
  // reproducible element listings.
  static int cmp(const FieldElement& a, const FieldElement& b);

  // Human-readable polynomial, e.g. "2t+1", "-1/3t^2".
  std::string str() const;

 private:
  friend class Field;
  FieldElement(std::shared_ptr<const detail::FieldData> d,
               std::vector<Rational> c)
      : data_(std::move(d)), coeffs_(std::move(c)) {}

  std::shared_ptr<const detail::FieldData> data_;
  std::vector<Rational> coeffs_;
};

struct FieldElementLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const {
    return FieldElement::cmp(a, b) < 0;
  }
};

}  // namespace gpd
