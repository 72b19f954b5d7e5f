// Copyright 2026 The sxacml authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SXACML_LITERAL_HPP
#define SXACML_LITERAL_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sxacml/iri.hpp"

namespace sxacml {

enum class LiteralKind { String, Integer, Double, Boolean, DateTime, GeoPoint };

inline const char* to_string(LiteralKind kind) {
  switch (kind) {
    case LiteralKind::String: return "string";
    case LiteralKind::Integer: return "integer";
    case LiteralKind::Double: return "double";
    case LiteralKind::Boolean: return "boolean";
    case LiteralKind::DateTime: return "dateTime";
    case LiteralKind::GeoPoint: return "geoPoint";
  }
  return "?";
}

inline std::optional<LiteralKind> literal_kind_from_string(std::string_view s) {
  if (s == "string") return LiteralKind::String;
  if (s == "integer") return LiteralKind::Integer;
  if (s == "double") return LiteralKind::Double;
  if (s == "boolean") return LiteralKind::Boolean;
  if (s == "dateTime") return LiteralKind::DateTime;
  if (s == "geoPoint") return LiteralKind::GeoPoint;
  return std::nullopt;
}

/// Comparisons other than equality only make sense on these kinds.
inline bool is_ordered_kind(LiteralKind kind) {
  return kind == LiteralKind::Integer || kind == LiteralKind::Double ||
         kind == LiteralKind::DateTime;
}

/// UTC instant, millisecond precision.
struct DateTime {
  std::int64_t millisUtc = 0;
  friend bool operator==(const DateTime&, const DateTime&) = default;
  friend auto operator<=>(const DateTime&, const DateTime&) = default;
};

/// WGS84 coordinates in degrees. lat in [-90, 90], lon in [-180, 180].
struct GeoPoint {
  double latDeg = 0.0;
  double lonDeg = 0.0;
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

namespace detail {

// Howard Hinnant's civil-date algorithms.
inline constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m,
                                              unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline constexpr void civil_from_days(std::int64_t z, std::int64_t& y,
                                      unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y += m <= 2;
}

inline constexpr bool is_leap(std::int64_t y) {
  return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

inline constexpr unsigned days_in_month(std::int64_t y, unsigned m) {
  constexpr unsigned lengths[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return m >= 1 && m <= 12 ? lengths[m - 1] : 0;
}

inline bool parse_digits(std::string_view s, std::size_t pos, std::size_t n,
                         int& out) {
  if (pos + n > s.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

}  // namespace detail

/// Parses an RFC 3339 timestamp. The UTC offset is mandatory ("Z" or
/// "+hh:mm"/"-hh:mm"); the result is normalized to UTC. Fractional seconds
/// beyond milliseconds are truncated.
inline std::optional<DateTime> parse_rfc3339(std::string_view s,
                                             std::string* error = nullptr) {
  auto fail = [&](const char* why) -> std::optional<DateTime> {
    if (error) *error = std::string(why) + " in dateTime '" + std::string(s) + "'";
    return std::nullopt;
  };
  int year, month, day, hour, minute, second;
  if (!detail::parse_digits(s, 0, 4, year)) return fail("bad year");
  if (s.size() < 20 || s[4] != '-' || s[7] != '-') return fail("bad date syntax");
  if (!detail::parse_digits(s, 5, 2, month)) return fail("bad month");
  if (!detail::parse_digits(s, 8, 2, day)) return fail("bad day");
  if (s[10] != 'T' && s[10] != 't') return fail("missing 'T'");
  if (!detail::parse_digits(s, 11, 2, hour)) return fail("bad hour");
  if (s[13] != ':') return fail("bad time syntax");
  if (!detail::parse_digits(s, 14, 2, minute)) return fail("bad minute");
  if (s[16] != ':') return fail("bad time syntax");
  if (!detail::parse_digits(s, 17, 2, second)) return fail("bad second");
  if (month < 1 || month > 12) return fail("month out of range");
  if (day < 1 ||
      day > static_cast<int>(detail::days_in_month(year, static_cast<unsigned>(month))))
    return fail("day out of range");
  if (hour > 23 || minute > 59 || second > 60) return fail("time out of range");
  if (second == 60) second = 59;  // fold leap second

  std::size_t pos = 19;
  int millis = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    int scale = 100;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      if (digits < 3) {
        millis += (s[pos] - '0') * scale;
        scale /= 10;
      }
      ++digits;
      ++pos;
    }
    if (digits == 0) return fail("empty fraction");
  }
  if (pos >= s.size()) return fail("missing UTC offset");
  std::int64_t offsetMinutes = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    const bool negative = s[pos] == '-';
    int oh, om;
    if (!detail::parse_digits(s, pos + 1, 2, oh)) return fail("bad offset hour");
    if (pos + 3 >= s.size() || s[pos + 3] != ':') return fail("bad offset syntax");
    if (!detail::parse_digits(s, pos + 4, 2, om)) return fail("bad offset minute");
    if (oh > 23 || om > 59) return fail("offset out of range");
    offsetMinutes = oh * 60 + om;
    if (negative) offsetMinutes = -offsetMinutes;
    pos += 6;
  } else {
    return fail("missing UTC offset");
  }
  if (pos != s.size()) return fail("trailing characters");

  const std::int64_t days = detail::days_from_civil(year, static_cast<unsigned>(month),
                                                    static_cast<unsigned>(day));
  std::int64_t millisUtc = days * 86400000 + hour * 3600000LL +
                           minute * 60000LL + second * 1000LL + millis;
  millisUtc -= offsetMinutes * 60000;
  return DateTime{millisUtc};
}

/// Formats as UTC RFC 3339; milliseconds are printed only when nonzero.
inline std::string format_rfc3339(DateTime t) {
  std::int64_t millis = t.millisUtc % 1000;
  std::int64_t seconds = t.millisUtc / 1000;
  if (millis < 0) {
    millis += 1000;
    seconds -= 1;
  }
  std::int64_t days = seconds / 86400;
  std::int64_t secOfDay = seconds % 86400;
  if (secOfDay < 0) {
    secOfDay += 86400;
    days -= 1;
  }
  std::int64_t year;
  unsigned month, day;
  detail::civil_from_days(days, year, month, day);
  char buf[40];
  if (millis != 0) {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  static_cast<long long>(year), month, day,
                  static_cast<long long>(secOfDay / 3600),
                  static_cast<long long>((secOfDay / 60) % 60),
                  static_cast<long long>(secOfDay % 60),
                  static_cast<long long>(millis));
  } else {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(year), month, day,
                  static_cast<long long>(secOfDay / 3600),
                  static_cast<long long>((secOfDay / 60) % 60),
                  static_cast<long long>(secOfDay % 60));
  }
  return buf;
}

/// Shortest round-trip decimal form, always with a '.' or exponent so the
/// text reparses as a double.
inline std::string format_double(double value) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

/// Typed literal value.
class Literal {
 public:
  Literal() : kind_(LiteralKind::String), value_(std::string()) {}

  static Literal str(std::string v) { return Literal(LiteralKind::String, std::move(v)); }
  static Literal integer(std::int64_t v) { return Literal(LiteralKind::Integer, v); }
  static Literal real(double v) { return Literal(LiteralKind::Double, v); }
  static Literal boolean(bool v) { return Literal(LiteralKind::Boolean, v); }
  static Literal date_time(DateTime v) { return Literal(LiteralKind::DateTime, v); }

  /// Throws std::out_of_range when coordinates leave the WGS84 ranges.
  static Literal geo_point(double latDeg, double lonDeg) {
    if (latDeg < -90.0 || latDeg > 90.0)
      throw std::out_of_range("geoPoint latitude out of [-90, 90]: " + format_double(latDeg));
    if (lonDeg < -180.0 || lonDeg > 180.0)
      throw std::out_of_range("geoPoint longitude out of [-180, 180]: " + format_double(lonDeg));
    return Literal(LiteralKind::GeoPoint, GeoPoint{latDeg, lonDeg});
  }

  LiteralKind kind() const { return kind_; }

  const std::string& as_string() const { return std::get<std::string>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  double as_double() const { return std::get<double>(value_); }
  bool as_boolean() const { return std::get<bool>(value_); }
  DateTime as_date_time() const { return std::get<DateTime>(value_); }
  const GeoPoint& as_geo_point() const { return std::get<GeoPoint>(value_); }

  /// Numeric value of an Integer or Double literal.
  double numeric() const {
    return kind_ == LiteralKind::Integer ? static_cast<double>(as_integer())
                                         : as_double();
  }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

  /// Canonical text used for axiom keys and debugging.
  std::string key() const {
    switch (kind_) {
      case LiteralKind::String: return "s:" + as_string();
      case LiteralKind::Integer: return "i:" + std::to_string(as_integer());
      case LiteralKind::Double: return "d:" + format_double(as_double());
      case LiteralKind::Boolean: return as_boolean() ? "b:true" : "b:false";
      case LiteralKind::DateTime: return "t:" + std::to_string(as_date_time().millisUtc);
      case LiteralKind::GeoPoint: {
        const GeoPoint& p = as_geo_point();
        return "g:" + format_double(p.latDeg) + "," + format_double(p.lonDeg);
      }
    }
    return "?";
  }

 private:
  using Storage = std::variant<std::string, std::int64_t, double, bool, DateTime, GeoPoint>;
  Literal(LiteralKind kind, Storage value) : kind_(kind), value_(std::move(value)) {}

  LiteralKind kind_;
  Storage value_;
};

/// An ontology term: an individual/class identifier or a typed literal.
using Term = std::variant<Iri, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }

inline std::string term_key(const Term& t) {
  if (const Iri* iri = std::get_if<Iri>(&t)) return "r:" + iri->str();
  return std::get<Literal>(t).key();
}

}  // namespace sxacml

#endif  // SXACML_LITERAL_HPP
