#include "tropkit/ext_int.hpp"

#include <limits>
#include <ostream>

#include "tropkit/errors.hpp"

namespace tropkit {

const Integer& ExtInt::value() const {
  if (infinite_) throw PreconditionError("value() of +inf");
  return value_;
}

std::optional<std::int64_t> ExtInt::to_int64() const {
  if (infinite_) return std::nullopt;
  if (value_ > std::numeric_limits<std::int64_t>::max() ||
      value_ < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value_.convert_to<std::int64_t>();
}

std::string ExtInt::to_string() const { return infinite_ ? "inf" : value_.str(); }

ExtInt& ExtInt::operator+=(const ExtInt& rhs) {
  if (infinite_) return *this;
  if (rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

ExtInt& ExtInt::operator-=(const Integer& rhs) {
  if (!infinite_) value_ -= rhs;
  return *this;
}

ExtInt operator*(const Integer& factor, const ExtInt& x) {
  if (x.is_infinite()) {
    if (factor <= 0) throw PreconditionError("non-positive multiple of +inf");
    return x;
  }
  return ExtInt(factor * x.value());
}

std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.to_string(); }

std::optional<ExtInt> parse_ext_int(const std::string& token) {
  if (token == "inf") return ExtInt::infinity();
  if (token.empty()) return std::nullopt;
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return std::nullopt;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return std::nullopt;
  }
  // cpp_int rejects a leading '+'.
  std::string digits = token[0] == '+' ? token.substr(1) : token;
  return ExtInt(Integer(digits));
}

}  // namespace tropkit
