#pragma once

#include <string>
#include <vector>

namespace bfre {

// A subset of [0,1] of one of the shapes that solution sets of a single
// bipolar equation can take: nothing, one point, two points, or a closed
// interval. Constructors normalize: points closer than eps() merge, a
// degenerate interval becomes a point and a crossed interval becomes empty.
class SetForm {
 public:
  enum class Kind { Empty, Singleton, TwoPoint, Interval };

  SetForm() = default;
  static SetForm empty() { return {}; }
  static SetForm point(double v);
  static SetForm two_points(double a, double b);
  static SetForm interval(double lo, double hi);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_discrete() const {
    return kind_ == Kind::Singleton || kind_ == Kind::TwoPoint;
  }
  // Smallest and largest element; undefined for the empty set.
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::vector<double> points() const;  // discrete forms only

  bool contains(double v) const;

  friend bool operator==(const SetForm&, const SetForm&) = default;

 private:
  Kind kind_ = Kind::Empty;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Matching is done within eps(). Surviving points are snapped onto the
// matching point or interval endpoint of the other operand (of `b` when both
// are discrete), so intersecting with a column range reuses its bounds
// exactly.
SetForm intersect(const SetForm& a, const SetForm& b);
bool subset_of(const SetForm& a, const SetForm& b);
// Same shape and endpoints within eps().
bool approx_equal(const SetForm& a, const SetForm& b);

// "∅", "{v}", "{v1,v2}" or "[lo,hi]" with six significant digits.
std::string to_string(const SetForm& s);
std::string format_number(double v);

}  // namespace bfre
