#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace wrideal {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(const std::string& s);

// A rational or one of the two infinities, totally ordered.
struct ExtendedRational {
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rational value{0};

  static ExtendedRational finite(Rational q) { return {Kind::Finite, q}; }
  static ExtendedRational pos_inf() { return {Kind::PosInf, Rational{0}}; }
  static ExtendedRational neg_inf() { return {Kind::NegInf, Rational{0}}; }

  bool is_finite() const { return kind == Kind::Finite; }
  ExtendedRational negated() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind != Kind::Finite || a.value == b.value) return std::strong_ordering::equal;
    return a.value < b.value ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator<(const ExtendedRational& a, const Rational& q) { return a < finite(q); }
  friend bool operator<(const Rational& q, const ExtendedRational& a) { return finite(q) < a; }
};

std::string to_string(const ExtendedRational& x);
// "inf", "+inf", "-inf" or a rational.
ExtendedRational parse_extended(const std::string& s);

}  // namespace wrideal
