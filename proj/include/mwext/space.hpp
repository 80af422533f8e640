#pragma once

// Finite measured point spaces and subsets of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mwext {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms with positive denominator, or "p" when q == 1.
std::string to_string(const Rational& r);
// Accepts "p", "-p", "p/q"; throws ParseError.
Rational parse_rational(std::string_view text);

using PointIndex = std::size_t;

// Subset of an n-point space as a bitmask.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t width);
  static PointSet full(std::size_t width);
  static PointSet of(std::size_t width, std::initializer_list<PointIndex> points);

  std::size_t width() const { return width_; }
  bool contains(PointIndex x) const { return (words_[x / 64] >> (x % 64)) & 1U; }
  void insert(PointIndex x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  void erase(PointIndex x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

  std::size_t size() const;
  bool empty() const;
  std::vector<PointIndex> points() const;

  // Throw SpaceMismatch on differing widths.
  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet operator-(const PointSet& o) const;
  PointSet complement() const;
  bool is_subset_of(const PointSet& o) const;
  bool is_disjoint(const PointSet& o) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  // Orders by cardinality first, then by the sorted point lists.
  friend bool operator<(const PointSet& a, const PointSet& b);

  std::size_t hash() const;

 private:
  void require_same(const PointSet& o) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

// Finite discrete space X with a strictly positive rational measure.
class PointSpace {
 public:
  PointSpace(std::vector<std::string> labels, std::vector<Rational> measures);
  // Labels "x1".."xn", every point of measure one.
  static PointSpace uniform(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointIndex x) const { return labels_.at(x); }
  const std::vector<Rational>& measures() const { return measures_; }
  const Rational& measure_of(PointIndex x) const { return measures_.at(x); }
  // Throws UnknownPoint.
  PointIndex index_of(std::string_view label) const;

  Rational measure(const PointSet& s) const;
  bool is_uniform() const;

  // Keeps the listed points in order.
  PointSpace restrict_to(const std::vector<PointIndex>& keep) const;

  // Common denominator of all measures and the integer numerators over it;
  // weights reduce to integer sums of these.
  const BigInt& denominator() const { return denom_; }
  const std::vector<BigInt>& scaled() const { return scaled_; }

  friend bool operator==(const PointSpace& a, const PointSpace& b) {
    return a.labels_ == b.labels_ && a.measures_ == b.measures_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> measures_;
  BigInt denom_;
  std::vector<BigInt> scaled_;
};

}  // namespace mwext
