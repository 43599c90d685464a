#pragma once

#include <atomic>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvg/rational.hpp"

namespace tvg {

/// The maximal real subfield of the m-th cyclotomic field, Q(cos(2*pi/m)).
///
/// Elements are stored in the power basis of eta = 2*cos(2*pi/m), an algebraic
/// integer whose minimal polynomial is monic with integer coefficients and has
/// degree phi(m)/2.  Every coordinate of a regular polygon with n vertices lives
/// in the field of order m = 4n, because sin(2*pi*k/n) = cos(2*pi*(4k - n)/(4n)).
///
/// Fields are interned: get() returns a reference that stays valid for the
/// lifetime of the process, so elements can hold a plain pointer to it.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return min_poly_.size() - 1; }

  /// Monic minimal polynomial of eta, coefficients from low to high degree.
  const std::vector<Integer>& min_poly() const noexcept { return min_poly_; }

  /// Sign of sum(num[i] * eta^i) decided with interval arithmetic at the given
  /// precision; nullopt when the enclosure still straddles zero.
  std::optional<int> interval_sign(const std::vector<Integer>& num, long precision_bits) const;

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;
  ~CyclotomicField();

 private:
  explicit CyclotomicField(unsigned order);

  struct Enclosures;
  const Enclosures& enclosures(long precision_bits) const;

  unsigned order_;
  std::vector<Integer> min_poly_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, low to high degree.
std::vector<Integer> cyclotomic_polynomial(unsigned order);

/// Exact real number in a cyclotomic real subfield.
///
/// A value without a field is a plain rational; it adopts the field of the
/// other operand in mixed arithmetic, so generic code can write F(0) and F(1).
/// Representation: integer numerators over one positive common denominator,
/// fully reduced, trailing zero coefficients trimmed (zero has no coefficients).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  Cyclotomic(const Cyclotomic& other);
  Cyclotomic(Cyclotomic&& other) noexcept;
  Cyclotomic& operator=(const Cyclotomic& other);
  Cyclotomic& operator=(Cyclotomic&& other) noexcept;
  ~Cyclotomic() = default;

  /// Value sum(coeffs[i] * eta^i), reduced modulo the minimal polynomial.
  static Cyclotomic from_coefficients(const CyclotomicField& field, const std::vector<Rational>& coeffs);

  /// cos(2*pi*k/m) in the field of order m.
  static Cyclotomic cos_2pi(const CyclotomicField& field, long k);

  const CyclotomicField* field() const noexcept { return field_; }
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_rational() const noexcept { return num_.size() <= 1; }
  int sign() const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) { return lhs * rhs.inverse(); }
  friend Cyclotomic operator-(Cyclotomic value);

  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend std::strong_ordering operator<=>(const Cyclotomic& lhs, const Cyclotomic& rhs);

 private:
  void normalize();
  void adopt_field(const Cyclotomic& other);

  const CyclotomicField* field_ = nullptr;
  std::vector<Integer> num_;
  Integer den_ = 1;
  // 2 = not yet computed; otherwise -1, 0, +1.
  mutable std::atomic<signed char> sign_cache_{2};
};

inline int sign_of(const Cyclotomic& x) { return x.sign(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

/// Bracket syntax "[c0 c1 ... ck]": space-separated rational coefficients of
/// eta^0, eta^1, ...; zero is "[0]".
std::string to_string(const Cyclotomic& x);
Cyclotomic parse_cyclotomic(const CyclotomicField& field, std::string_view text);

}  // namespace tvg
