#include "wrideal/rational.hpp"

#include <charconv>

#include "wrideal/grid.hpp"

namespace wrideal {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) throw Error("not a rational: '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational{parse_int(s, s)};
  const std::string_view view(s);
  const auto den = parse_int(view.substr(slash + 1), s);
  if (den == 0) throw Error("zero denominator in '" + s + "'");
  return Rational{parse_int(view.substr(0, slash), s), den};
}

ExtendedRational ExtendedRational::negated() const {
  switch (kind) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: return finite(-value);
  }
  return *this;
}

std::string to_string(const ExtendedRational& x) {
  switch (x.kind) {
    case ExtendedRational::Kind::NegInf: return "-inf";
    case ExtendedRational::Kind::PosInf: return "inf";
    case ExtendedRational::Kind::Finite: return to_string(x.value);
  }
  return "?";
}

ExtendedRational parse_extended(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtendedRational::pos_inf();
  if (s == "-inf") return ExtendedRational::neg_inf();
  return ExtendedRational::finite(parse_rational(s));
}

}  // namespace wrideal
