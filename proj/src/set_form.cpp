#include "bfre/set_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bfre/errors.hpp"

namespace bfre {

namespace {

SetForm from_points(const std::vector<double>& pts) {
  switch (pts.size()) {
    case 0: return SetForm::empty();
    case 1: return SetForm::point(pts[0]);
    default: return SetForm::two_points(pts[0], pts[1]);
  }
}

double snap_to(const SetForm& range, double v) {
  const double e = eps();
  if (std::abs(v - range.lo()) <= e) return range.lo();
  if (std::abs(v - range.hi()) <= e) return range.hi();
  return v;
}

SetForm discrete_with_range(const SetForm& pts, const SetForm& range) {
  std::vector<double> kept;
  for (double p : pts.points())
    if (range.contains(p)) kept.push_back(snap_to(range, p));
  return from_points(kept);
}

}  // namespace

SetForm SetForm::point(double v) {
  SetForm s;
  s.kind_ = Kind::Singleton;
  s.lo_ = s.hi_ = v;
  return s;
}

SetForm SetForm::two_points(double a, double b) {
  if (a > b) std::swap(a, b);
  if (b - a <= eps()) return point(a);
  SetForm s;
  s.kind_ = Kind::TwoPoint;
  s.lo_ = a;
  s.hi_ = b;
  return s;
}

SetForm SetForm::interval(double lo, double hi) {
  if (lo > hi + eps()) return empty();
  if (hi - lo <= eps()) return point(lo);
  SetForm s;
  s.kind_ = Kind::Interval;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

std::vector<double> SetForm::points() const {
  switch (kind_) {
    case Kind::Singleton: return {lo_};
    case Kind::TwoPoint: return {lo_, hi_};
    default: return {};
  }
}

bool SetForm::contains(double v) const {
  const double e = eps();
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Singleton: return std::abs(v - lo_) <= e;
    case Kind::TwoPoint: return std::abs(v - lo_) <= e || std::abs(v - hi_) <= e;
    case Kind::Interval: return v >= lo_ - e && v <= hi_ + e;
  }
  return false;
}

SetForm intersect(const SetForm& a, const SetForm& b) {
  if (a.is_empty() || b.is_empty()) return SetForm::empty();
  const bool ai = a.kind() == SetForm::Kind::Interval;
  const bool bi = b.kind() == SetForm::Kind::Interval;
  if (ai && bi)
    return SetForm::interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
  if (bi) return discrete_with_range(a, b);
  if (ai) return discrete_with_range(b, a);
  std::vector<double> kept;
  for (double p : a.points())
    for (double q : b.points())
      if (std::abs(p - q) <= eps()) {
        kept.push_back(q);
        break;
      }
  return from_points(kept);
}

bool subset_of(const SetForm& a, const SetForm& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  if (a.is_discrete()) {
    for (double p : a.points())
      if (!b.contains(p)) return false;
    return true;
  }
  return b.kind() == SetForm::Kind::Interval && a.lo() >= b.lo() - eps() &&
         a.hi() <= b.hi() + eps();
}

bool approx_equal(const SetForm& a, const SetForm& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_empty()) return true;
  return std::abs(a.lo() - b.lo()) <= eps() && std::abs(a.hi() - b.hi()) <= eps();
}

std::string format_number(double v) {
  if (std::abs(v) < eps()) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string to_string(const SetForm& s) {
  switch (s.kind()) {
    case SetForm::Kind::Empty: return "∅";
    case SetForm::Kind::Singleton: return "{" + format_number(s.lo()) + "}";
    case SetForm::Kind::TwoPoint:
      return "{" + format_number(s.lo()) + "," + format_number(s.hi()) + "}";
    case SetForm::Kind::Interval:
      return "[" + format_number(s.lo()) + "," + format_number(s.hi()) + "]";
  }
  return "";
}

}  // namespace bfre
