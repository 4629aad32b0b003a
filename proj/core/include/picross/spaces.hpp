#pragma once

// Exact elements of Q + Q*sqrt(2) and truncated positive cones built from them.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace picross {

using Rational = boost::multiprecision::cpp_rational;

/// a + b*sqrt(2) with rational a, b. Any sign.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// -1, 0 or +1, decided without floating point.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_}; }
  friend QuadraticNumber operator*(long long k, const QuadraticNumber& x) {
    return {x.a_ * k, x.b_ * k};
  }
  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }

  // sqrt(2) is irrational, so equal values have equal coordinates.
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b_ == y.b_) {
      if (denominator(x.a_) == 1 && denominator(y.a_) == 1) return numerator(x.a_) < numerator(y.a_);
      return x.a_ < y.a_;
    }
    return (y - x).sign() > 0;
  }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(y < x); }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x < y); }

 private:
  Rational a_{0};
  Rational b_{0};
};

QuadraticNumber max(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber min(const QuadraticNumber& x, const QuadraticNumber& y);

/// Nonnegative a + b*sqrt(2); an element of the positive cone.
class SemigroupElement {
 public:
  SemigroupElement() = default;
  SemigroupElement(long long n);  // NOLINT(google-explicit-constructor)
  explicit SemigroupElement(const QuadraticNumber& value);
  SemigroupElement(Rational a, Rational b);

  static SemigroupElement sqrt2() { return SemigroupElement(Rational(0), Rational(1)); }

  const QuadraticNumber& value() const { return value_; }
  const Rational& a() const { return value_.a(); }
  const Rational& b() const { return value_.b(); }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }
  bool is_zero() const { return value_.sign() == 0; }

  friend SemigroupElement operator+(const SemigroupElement& x, const SemigroupElement& y) {
    return SemigroupElement(x.value_ + y.value_);
  }
  /// Throws std::domain_error when y > x.
  friend SemigroupElement operator-(const SemigroupElement& x, const SemigroupElement& y) {
    return SemigroupElement(x.value_ - y.value_);
  }
  friend bool operator==(const SemigroupElement& x, const SemigroupElement& y) {
    return x.value_ == y.value_;
  }
  friend bool operator<(const SemigroupElement& x, const SemigroupElement& y) {
    return x.value_ < y.value_;
  }
  friend bool operator>(const SemigroupElement& x, const SemigroupElement& y) { return y < x; }
  friend bool operator<=(const SemigroupElement& x, const SemigroupElement& y) { return !(y < x); }
  friend bool operator>=(const SemigroupElement& x, const SemigroupElement& y) { return !(x < y); }

 private:
  QuadraticNumber value_;
};

SemigroupElement max(const SemigroupElement& x, const SemigroupElement& y);
SemigroupElement min(const SemigroupElement& x, const SemigroupElement& y);

/// Truncated cone, sorted ascending by value.
///
/// SemigroupSpan sets hold every N-combination of the generators up to the
/// cutoff and are closed under sums that stay below it. GroupCone sets hold
/// the Z-combinations with coefficients in [-depth, depth] whose value lies
/// in [0, cutoff]; they sample a dense cone and are not additively closed.
class IndexSet {
 public:
  enum class Kind { SemigroupSpan, GroupCone };

  IndexSet() = default;
  IndexSet(Kind kind, std::vector<SemigroupElement> generators, SemigroupElement cutoff,
           std::vector<SemigroupElement> elements, int depth = 0);

  Kind kind() const { return kind_; }
  const std::vector<SemigroupElement>& generators() const { return generators_; }
  const SemigroupElement& cutoff() const { return cutoff_; }
  const std::vector<SemigroupElement>& elements() const { return elements_; }
  int depth() const { return depth_; }
  std::size_t size() const { return elements_.size(); }
  const SemigroupElement& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const SemigroupElement& x) const;
  bool contains(const SemigroupElement& x) const { return index_of(x).has_value(); }

 private:
  Kind kind_ = Kind::SemigroupSpan;
  std::vector<SemigroupElement> generators_;
  SemigroupElement cutoff_;
  std::vector<SemigroupElement> elements_;
  int depth_ = 0;
};

/// All N-combinations of `generators` with value <= cutoff. Breadth-first
/// over coefficient vectors; values reached along several paths are merged
/// exactly. Throws std::invalid_argument on an empty or nonpositive generator.
IndexSet enumerate(const std::vector<SemigroupElement>& generators, const SemigroupElement& cutoff);

/// Z-combinations of `generators` with every coefficient in [-depth, depth]
/// and value in [0, upper].
IndexSet enumerate_group_cone(const std::vector<SemigroupElement>& generators, int depth,
                              const SemigroupElement& upper);

/// Members below s (open) or up to s (closed). Throws std::out_of_range when
/// s exceeds the cutoff.
std::vector<SemigroupElement> interval(const IndexSet& set, const SemigroupElement& s, bool closed);

/// Members r with r + budget <= cutoff.
std::vector<SemigroupElement> guard_band(const IndexSet& set, const SemigroupElement& budget);

}  // namespace picross
