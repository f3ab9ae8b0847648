#pragma once

// Number fields K = Q[y]/(g(y)) with g monic irreducible, element
// arithmetic, minimal polynomials, roots of integer polynomials in K
// (Trager's norm method), and the set of cosine values lying in K.

#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "niven/classify.hpp"
#include "niven/factor.hpp"
#include "niven/poly.hpp"

namespace niven {

class FieldElement;

class NumberField {
 public:
  /// Throws DomainError unless g is monic of positive degree and irreducible;
  /// the message names a nontrivial factor when g is reducible.
  explicit NumberField(IntPoly g, const FactorConfig& config = {});

  const IntPoly& modulus() const { return data_->g; }
  int degree() const { return data_->g.degree(); }

  FieldElement element(const RatPoly& coeffs) const;
  FieldElement from_rational(const mpq_class& q) const;
  /// The class of y.
  FieldElement generator() const;

  bool operator==(const NumberField& o) const { return data_->g == o.data_->g; }

 private:
  friend class FieldElement;
  struct Data {
    IntPoly g;
    RatPoly g_rat;
  };
  explicit NumberField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// An element of K stored as a polynomial in y of degree < deg g.
class FieldElement {
 public:
  const RatPoly& value() const { return value_; }
  /// Exactly deg g coefficients, ascending.
  std::vector<mpq_class> coeffs() const;
  NumberField field() const;
  bool is_zero() const { return value_.is_zero(); }
  /// Rational value when the element lies in Q.
  bool is_rational() const { return value_.degree() <= 0; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  /// Extended Euclid against g. Throws DomainError for zero.
  FieldElement inverse() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  friend class NumberField;
  FieldElement(std::shared_ptr<const NumberField::Data> owner, RatPoly value);
  void same_field(const FieldElement& o) const;

  std::shared_ptr<const NumberField::Data> owner_;
  RatPoly value_;
};

/// p(a) computed in K.
FieldElement evaluate(const IntPoly& p, const FieldElement& a);

/// Primitive integer minimal polynomial of a (positive leading coefficient):
/// the squarefree part of Res_y(g(y), x - a(y)), checked by substitution.
IntPoly elem_minpoly(const FieldElement& a);

struct RootOptions {
  FactorConfig factor;
  /// Shifts s = 0 .. max_shift are tried for a squarefree norm.
  unsigned max_shift = 64;
};

/// All alpha in K with p(alpha) = 0 for squarefree p, sorted by coefficients.
/// Each root is re-checked by substitution.
std::vector<FieldElement> roots_in_field(const IntPoly& p, const NumberField& K, const RootOptions& opts = {});

struct CosineValues {
  /// Sorted by angle class.
  std::vector<std::pair<AngleClass, FieldElement>> values;
  OrbitDigraph digraph;
};

/// C(K): every 2cos(2 pi m/n) lying in K with an explicit representation.
/// Pairing of classes with elements uses the embedding y -> largest real
/// root of g (largest real part when g has no real root).
CosineValues cosine_values_in_field(const NumberField& K, const RootOptions& opts = {});

}  // namespace niven
