#include "picross/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace picross {

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(2) compares as a^2 vs 2b^2.
  const Rational a2 = a_ * a_;
  const Rational b2 = 2 * b_ * b_;
  if (a2 == b2) return 0;
  return a2 > b2 ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
}

std::string QuadraticNumber::to_string() const {
  std::ostringstream out;
  if (b_ == 0) {
    out << a_;
  } else if (a_ == 0) {
    out << b_ << "*sqrt2";
  } else {
    out << a_ << (b_.sign() > 0 ? "+" : "") << b_ << "*sqrt2";
  }
  return out.str();
}

QuadraticNumber max(const QuadraticNumber& x, const QuadraticNumber& y) { return x < y ? y : x; }
QuadraticNumber min(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x ? y : x; }

SemigroupElement::SemigroupElement(long long n) : SemigroupElement(QuadraticNumber(n)) {}

SemigroupElement::SemigroupElement(const QuadraticNumber& value) : value_(value) {
  if (value_.sign() < 0) {
    throw std::domain_error("semigroup element must be nonnegative, got " + value_.to_string());
  }
}

SemigroupElement::SemigroupElement(Rational a, Rational b)
    : SemigroupElement(QuadraticNumber(std::move(a), std::move(b))) {}

SemigroupElement max(const SemigroupElement& x, const SemigroupElement& y) { return x < y ? y : x; }
SemigroupElement min(const SemigroupElement& x, const SemigroupElement& y) { return y < x ? y : x; }

IndexSet::IndexSet(Kind kind, std::vector<SemigroupElement> generators, SemigroupElement cutoff,
                   std::vector<SemigroupElement> elements, int depth)
    : kind_(kind),
      generators_(std::move(generators)),
      cutoff_(std::move(cutoff)),
      elements_(std::move(elements)),
      depth_(depth) {}

std::optional<std::size_t> IndexSet::index_of(const SemigroupElement& x) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

void check_generators(const std::vector<SemigroupElement>& generators) {
  if (generators.empty()) throw std::invalid_argument("generator list is empty");
  for (const auto& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("generators must be positive");
  }
}

}  // namespace

IndexSet enumerate(const std::vector<SemigroupElement>& generators,
                   const SemigroupElement& cutoff) {
  check_generators(generators);
  std::set<SemigroupElement> seen{SemigroupElement(0)};
  std::deque<SemigroupElement> frontier{SemigroupElement(0)};
  while (!frontier.empty()) {
    const SemigroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      SemigroupElement y = x + g;
      if (y > cutoff) continue;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return IndexSet(IndexSet::Kind::SemigroupSpan, generators, cutoff,
                  std::vector<SemigroupElement>(seen.begin(), seen.end()));
}

IndexSet enumerate_group_cone(const std::vector<SemigroupElement>& generators, int depth,
                              const SemigroupElement& upper) {
  check_generators(generators);
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  std::set<SemigroupElement> seen;
  std::vector<int> coeff(generators.size(), -depth);
  for (;;) {
    QuadraticNumber v;
    for (std::size_t i = 0; i < generators.size(); ++i) v += coeff[i] * generators[i].value();
    if (v.sign() >= 0 && v <= upper.value()) seen.insert(SemigroupElement(v));
    std::size_t i = 0;
    while (i < coeff.size() && coeff[i] == depth) coeff[i++] = -depth;
    if (i == coeff.size()) break;
    ++coeff[i];
  }
  return IndexSet(IndexSet::Kind::GroupCone, generators, upper,
                  std::vector<SemigroupElement>(seen.begin(), seen.end()), depth);
}

std::vector<SemigroupElement> interval(const IndexSet& set, const SemigroupElement& s,
                                       bool closed) {
  if (s > set.cutoff()) {
    throw std::out_of_range("interval endpoint " + s.to_string() + " exceeds cutoff " +
                            set.cutoff().to_string());
  }
  std::vector<SemigroupElement> out;
  for (const auto& r : set.elements()) {
    if (r < s || (closed && r == s)) out.push_back(r);
  }
  return out;
}

std::vector<SemigroupElement> guard_band(const IndexSet& set, const SemigroupElement& budget) {
  std::vector<SemigroupElement> out;
  for (const auto& r : set.elements()) {
    if (r + budget <= set.cutoff()) out.push_back(r);
  }
  return out;
}

}  // namespace picross
