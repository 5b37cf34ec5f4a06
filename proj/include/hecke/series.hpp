#pragma once

// Truncated formal power series with exact coefficients. A series of order N
// stores the coefficients of tau^0 .. tau^N; products drop everything higher.
// Used for order-by-order verification of the generating identities, where
// every series that appears is a finite product of affine and geometric
// factors, so no general division is needed.

#include <stdexcept>
#include <vector>

namespace hecke {

template <class F>
class TruncSeries {
 public:
  explicit TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    c_.assign(size_t(order) + 1, F(0));
  }

  static TruncSeries constant(int order, const F& v) {
    TruncSeries s(order);
    s.c_[0] = v;
    return s;
  }

  /// a0 + a1*tau
  static TruncSeries affine(int order, const F& a0, const F& a1) {
    TruncSeries s(order);
    s.c_[0] = a0;
    if (order >= 1) s.c_[1] = a1;
    return s;
  }

  /// 1/(1 - r*tau) = 1 + r*tau + r^2*tau^2 + ...
  static TruncSeries geometric(int order, const F& r) {
    TruncSeries s(order);
    s.c_[0] = F(1);
    for (int k = 1; k <= order; ++k) s.c_[size_t(k)] = s.c_[size_t(k - 1)] * r;
    return s;
  }

  int order() const { return int(c_.size()) - 1; }

  const F& operator[](int k) const { return c_.at(size_t(k)); }
  F& operator[](int k) { return c_.at(size_t(k)); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries r = a;
    for (int k = 0; k <= r.order(); ++k) r.c_[size_t(k)] = r.c_[size_t(k)] + b.c_[size_t(k)];
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j)
        r.c_[size_t(i + j)] = r.c_[size_t(i + j)] + a.c_[size_t(i)] * b.c_[size_t(j)];
    return r;
  }

  friend TruncSeries operator*(const F& s, const TruncSeries& a) {
    TruncSeries r = a;
    for (auto& x : r.c_) x = s * x;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("TruncSeries: order mismatch");
  }

  std::vector<F> c_;
};

}  // namespace hecke
