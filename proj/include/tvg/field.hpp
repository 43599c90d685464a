#pragma once

#include <concepts>
#include <string>

#include "tvg/cyclotomic.hpp"
#include "tvg/rational.hpp"

namespace tvg {

/// An exact ordered field: the two realizations are Rational and Cyclotomic.
template <class F>
concept ExactField = std::constructible_from<F, long> && requires(const F& a, const F& b) {
  F(a + b);
  F(a - b);
  F(a * b);
  F(a / b);
  F(-a);
  { a == b } -> std::convertible_to<bool>;
  { sign_of(a) } -> std::convertible_to<int>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <ExactField F>
bool less(const F& a, const F& b) {
  return sign_of(F(b - a)) > 0;
}

template <ExactField F>
const char* field_name();

template <>
inline const char* field_name<Rational>() { return "rational"; }
template <>
inline const char* field_name<Cyclotomic>() { return "cyclotomic"; }

}  // namespace tvg
