#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropkit {

using Integer = boost::multiprecision::cpp_int;

/// An integer or +inf. The carrier of both the Z and Z-with-infinity semirings.
///
/// Ordering is total with +inf above every integer. Addition absorbs into
/// +inf; subtraction of a finite amount leaves +inf unchanged.
class ExtInt {
 public:
  ExtInt() = default;
  ExtInt(Integer value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExtInt(T value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static ExtInt infinity() {
    ExtInt x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws PreconditionError on +inf.
  const Integer& value() const;

  /// Narrow to int64 when finite and representable.
  std::optional<std::int64_t> to_int64() const;

  std::string to_string() const;

  ExtInt& operator+=(const ExtInt& rhs);
  ExtInt& operator-=(const Integer& rhs);

  friend ExtInt operator+(ExtInt lhs, const ExtInt& rhs) { return lhs += rhs; }
  friend ExtInt operator-(ExtInt lhs, const Integer& rhs) { return lhs -= rhs; }

  /// Multiplication by a finite scalar; +inf stays +inf for positive factors.
  friend ExtInt operator*(const Integer& factor, const ExtInt& x);

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Integer value_{0};
  bool infinite_ = false;
};

inline const ExtInt& min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }
inline const ExtInt& max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtInt& x);

/// Parses a decimal integer or the literal "inf". Returns nullopt on bad input.
std::optional<ExtInt> parse_ext_int(const std::string& token);

}  // namespace tropkit
