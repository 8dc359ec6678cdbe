#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matroid_forge {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Reduced "p/q" form; the denominator is always written, so 5 becomes "5/1".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational sum(std::span<const Rational> values);

/// A capacity that is either a finite nonnegative rational or +infinity.
class Capacity {
 public:
  Capacity() = default;
  Capacity(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  Capacity(int value) : value_(value) {}                   // NOLINT(implicit)

  static Capacity infinite() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  /// Finite value; meaningless when is_infinite().
  const Rational& value() const { return value_; }

  Capacity& operator+=(const Capacity& other);
  friend Capacity operator+(Capacity a, const Capacity& b) { return a += b; }
  friend bool operator==(const Capacity& a, const Capacity& b);
  friend std::strong_ordering operator<=>(const Capacity& a, const Capacity& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_string(const Capacity& capacity);

}  // namespace matroid_forge
