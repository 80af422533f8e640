#include "mwext/space.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_set>

#include "mwext/error.hpp"

namespace mwext {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  BigInt v(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

PointSet PointSet::full(std::size_t width) {
  PointSet s(width);
  for (PointIndex x = 0; x < width; ++x) s.insert(x);
  return s;
}

PointSet PointSet::of(std::size_t width, std::initializer_list<PointIndex> points) {
  PointSet s(width);
  for (PointIndex x : points) s.insert(x);
  return s;
}

std::size_t PointSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<PointIndex> PointSet::points() const {
  std::vector<PointIndex> out;
  for (PointIndex x = 0; x < width_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

void PointSet::require_same(const PointSet& o) const {
  if (width_ != o.width_) throw Error(ErrorCode::SpaceMismatch, "point sets over different spaces");
}

PointSet PointSet::operator|(const PointSet& o) const {
  require_same(o);
  PointSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

PointSet PointSet::operator&(const PointSet& o) const {
  require_same(o);
  PointSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

PointSet PointSet::operator-(const PointSet& o) const {
  require_same(o);
  PointSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

PointSet PointSet::complement() const { return full(width_) - *this; }

bool PointSet::is_subset_of(const PointSet& o) const {
  require_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool PointSet::is_disjoint(const PointSet& o) const {
  require_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return false;
  return true;
}

bool operator<(const PointSet& a, const PointSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a.points() < b.points();
}

std::size_t PointSet::hash() const {
  std::size_t h = width_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// -------------------------------------------------------------- PointSpace

PointSpace::PointSpace(std::vector<std::string> labels, std::vector<Rational> measures)
    : labels_(std::move(labels)), measures_(std::move(measures)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidArgument, "a point space needs at least one point", "labels");
  if (labels_.size() != measures_.size())
    throw Error(ErrorCode::LengthMismatch, "labels and measures differ in length", "measures");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "duplicate point label '" + l + "'", "labels");
  for (const auto& m : measures_)
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "measures must be strictly positive", "measures");

  denom_ = 1;
  for (const auto& m : measures_) denom_ = boost::multiprecision::lcm(denom_, BigInt(boost::multiprecision::denominator(m)));
  scaled_.reserve(measures_.size());
  for (const auto& m : measures_)
    scaled_.push_back(BigInt(boost::multiprecision::numerator(m)) * (denom_ / BigInt(boost::multiprecision::denominator(m))));
}

PointSpace PointSpace::uniform(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return PointSpace(std::move(labels), std::vector<Rational>(n, Rational(1)));
}

PointIndex PointSpace::index_of(std::string_view label) const {
  for (PointIndex i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

Rational PointSpace::measure(const PointSet& s) const {
  if (s.width() != size()) throw Error(ErrorCode::SpaceMismatch, "point set width differs from space size");
  BigInt total = 0;
  for (PointIndex x = 0; x < size(); ++x)
    if (s.contains(x)) total += scaled_[x];
  return Rational(total, denom_);
}

bool PointSpace::is_uniform() const {
  return std::all_of(measures_.begin(), measures_.end(), [&](const Rational& m) { return m == measures_.front(); });
}

PointSpace PointSpace::restrict_to(const std::vector<PointIndex>& keep) const {
  std::vector<std::string> labels;
  std::vector<Rational> measures;
  for (PointIndex x : keep) {
    labels.push_back(labels_.at(x));
    measures.push_back(measures_.at(x));
  }
  return PointSpace(std::move(labels), std::move(measures));
}

}  // namespace mwext
