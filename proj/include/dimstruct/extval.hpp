#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "dimstruct/error.hpp"

namespace dimstruct {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// An exact value in [0, +inf]: zero, a positive rational, or +inf.
///
/// A zero rational is always stored as Kind::zero, so two equal values have
/// equal representations and the total order is plain tag-then-rational.
class ExtVal {
public:
  enum class Kind : std::uint8_t { zero, finite, infinite };

  ExtVal() = default;

  static ExtVal zero() { return {}; }
  static ExtVal infinity() {
    ExtVal v;
    v.kind_ = Kind::infinite;
    return v;
  }
  /// Zero when q == 0; throws NegativeInput for q < 0.
  static ExtVal of(Rational q) {
    if (q < 0) {
      throw NegativeInput("negative value " + q.str() + " is outside [0,+inf]");
    }
    ExtVal v;
    if (q != 0) {
      v.kind_ = Kind::finite;
      v.q_ = std::move(q);
    }
    return v;
  }
  static ExtVal of(long long num, long long den = 1) { return of(Rational(num, den)); }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  /// Strictly positive and finite.
  bool is_fin() const noexcept { return kind_ == Kind::finite; }
  bool is_inf() const noexcept { return kind_ == Kind::infinite; }
  /// Anything other than +inf.
  bool bounded() const noexcept { return kind_ != Kind::infinite; }

  /// The rational value; zero for Kind::zero. Must not be called on +inf.
  const Rational& rational() const noexcept { return q_; }

  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.q_ == b.q_);
  }
  friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
    if (a.kind_ != b.kind_) {
      return a.kind_ <=> b.kind_;
    }
    if (a.kind_ != Kind::finite || a.q_ == b.q_) {
      return std::strong_ordering::equal;
    }
    return a.q_ < b.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// "0", "inf" or a reduced "p/q" (integers print as "n/1").
  std::string str() const {
    switch (kind_) {
    case Kind::zero:
      return "0";
    case Kind::infinite:
      return "inf";
    case Kind::finite:
      break;
    }
    return boost::multiprecision::numerator(q_).str() + "/" +
           boost::multiprecision::denominator(q_).str();
  }

  /// Accepts "0", "inf", "+inf", "n" and "p/q" with non-negative integers.
  static ExtVal parse(std::string_view text) {
    if (text == "inf" || text == "+inf") {
      return infinity();
    }
    if (text.empty()) {
      throw ParseError("empty value string");
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    auto digits_only = [](std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    };
    if (!digits_only(num) || !digits_only(den)) {
      throw ParseError("malformed value \"" + std::string(text) + "\"");
    }
    Integer n(std::string{num});
    Integer d(std::string{den});
    if (d == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    return of(Rational(n, d));
  }

private:
  Kind kind_ = Kind::zero;
  Rational q_{};
};

inline std::ostream& operator<<(std::ostream& os, const ExtVal& v) { return os << v.str(); }

/// 0 * inf = 0; otherwise inf absorbs.
inline ExtVal ext_mul(const ExtVal& a, const ExtVal& b) {
  if (a.is_zero() || b.is_zero()) {
    return ExtVal::zero();
  }
  if (a.is_inf() || b.is_inf()) {
    return ExtVal::infinity();
  }
  return ExtVal::of(a.rational() * b.rational());
}

inline ExtVal ext_add(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() || b.is_inf()) {
    return ExtVal::infinity();
  }
  return ExtVal::of(a.rational() + b.rational());
}

/// sign restricted to [0,+inf].
inline ExtVal ext_sign(const ExtVal& a) {
  switch (a.kind()) {
  case ExtVal::Kind::zero:
    return ExtVal::zero();
  case ExtVal::Kind::finite:
    return ExtVal::of(1);
  case ExtVal::Kind::infinite:
    break;
  }
  return ExtVal::infinity();
}

inline ExtVal ext_min(const ExtVal& a, const ExtVal& b) { return b < a ? b : a; }
inline ExtVal ext_max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }

/// Least upper bound; the empty collection gives zero.
template <typename Range>
ExtVal ext_sup(const Range& values) {
  ExtVal best = ExtVal::zero();
  for (const ExtVal& v : values) {
    if (best < v) {
      best = v;
    }
  }
  return best;
}

} // namespace dimstruct
