#pragma once

// Elements of the complex group algebra C[G]: sparse formal sums
// sum_g c_g * g with complex coefficients. Multiplication is convolution,
// (x*y)_k = sum_{gh=k} x_g y_h.
//
// Coefficients are complex doubles. Integer-valued inputs stay exact through
// the walk-counting pipeline, which only ever adds and multiplies small
// integers.

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>

#include "faclift/group.hpp"

namespace faclift {

using cxd = std::complex<double>;

class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupAlgebraElement zero(GroupPtr group) { return GroupAlgebraElement(std::move(group)); }

  static GroupAlgebraElement delta(GroupPtr group, int g) {
    GroupAlgebraElement x(std::move(group));
    x.add_term(g, 1.0);
    return x;
  }

  const GroupPtr& group() const { return group_; }
  const std::map<int, cxd>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  cxd coeff(int g) const {
    auto it = c_.find(g);
    return it == c_.end() ? cxd(0.0) : it->second;
  }

  void add_term(int g, cxd v) {
    if (v == cxd(0.0)) return;
    auto [it, fresh] = c_.emplace(g, v);
    if (!fresh) {
      it->second += v;
      if (it->second == cxd(0.0)) c_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check_same_group(o);
    for (auto& [g, v] : o.c_) add_term(g, v);
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a += b;
    return a;
  }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b) {
    a.check_same_group(b);
    GroupAlgebraElement out(a.group_);
    for (auto& [g, xg] : a.c_)
      for (auto& [h, yh] : b.c_) out.add_term(a.group_->mul(g, h), xg * yh);
    return out;
  }

  friend GroupAlgebraElement operator*(cxd s, const GroupAlgebraElement& x) {
    GroupAlgebraElement out(x.group_);
    for (auto& [g, v] : x.c_) out.add_term(g, s * v);
    return out;
  }

  bool operator==(const GroupAlgebraElement& o) const {
    return group_ == o.group_ && c_ == o.c_;
  }

  // Total coefficient mass sum_g c_g (= value under the trivial character).
  cxd coefficient_sum() const {
    cxd s = 0.0;
    for (auto& [g, v] : c_) s += v;
    return s;
  }

  // Renders like "160e + 176g + 160g^2 + 176g^3"; real integer coefficients
  // print without decimals.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, v] : c_) {
      if (!first) os << " + ";
      first = false;
      const std::string& lab = group_->label(g);
      double re = v.real(), im = v.imag();
      if (im == 0.0 && re == std::floor(re)) {
        long long iv = static_cast<long long>(re);
        if (iv == 1 && g != 0)
          os << lab;
        else if (g == 0)
          os << iv;
        else
          os << iv << lab;
      } else {
        os << "(" << re;
        if (im != 0.0) os << (im < 0 ? "" : "+") << im << "i";
        os << ")";
        if (g != 0) os << lab;
      }
    }
    return os.str();
  }

 private:
  void check_same_group(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) fail(Errc::GroupMismatch, "group algebra elements over different groups");
  }

  GroupPtr group_;
  std::map<int, cxd> c_;
};

// H^+ = sum of all elements of the subgroup, coefficient one each.
inline GroupAlgebraElement subgroup_sum(const Subgroup& H) {
  GroupAlgebraElement x(H.group());
  for (int g : H.elements()) x.add_term(g, 1.0);
  return x;
}

}  // namespace faclift
