#include "mk/series.hpp"

#include <stdexcept>

namespace mk {

bool TruncSeries::is_zero() const { return first_nonzero() < 0; }

int TruncSeries::first_nonzero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (size_t i = 0; i < n; ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int M = std::min(a.precision(), b.precision());
  TruncSeries r(M);
  for (int i = 0; i <= M; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= M; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::operator*(const Q& s) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("division by zero");
  int M = precision();
  TruncSeries r(M);
  Q inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= M; ++k) {
    Q s = 0;
    for (int j = 1; j <= k; ++j)
      if (c_[j] != 0) s += c_[j] * r.c_[k - j];
    r.c_[k] = -s * inv0;
  }
  return r;
}

TruncSeries TruncSeries::truncated(int M) const {
  TruncSeries r(M);
  for (int i = 0; i <= std::min(M, precision()); ++i) r.c_[i] = c_[i];
  return r;
}

std::string TruncSeries::str() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].get_str() + ")v^" + std::to_string(i);
  }
  return (s.empty() ? "0" : s) + " + O(v^" + std::to_string(c_.size()) + ")";
}

namespace {

TruncSeries poly_to_series(const Poly& p, int shift, int M) {
  TruncSeries r(M);
  for (int i = 0; i <= p.degree(); ++i)
    if (i + shift >= 0 && i + shift <= M) r[i + shift] = p.c[i];
  return r;
}

}  // namespace

TruncSeries scalar_to_series_shifted(const Scalar& x, int shift, int M) {
  if (x.is_zero()) return TruncSeries(M);
  int dv = x.den().valuation();
  int nv = x.num().valuation();
  if (nv - dv + shift < 0) throw std::domain_error("pole at origin");
  // x = v^(nv - dv) * (num / v^nv) / (den / v^dv), both quotients units
  Poly n = x.num().unshifted(nv), d = x.den().unshifted(dv);
  TruncSeries sn = poly_to_series(n, nv - dv + shift, M);
  TruncSeries sd = poly_to_series(d, 0, M);
  return sn * sd.inverse();
}

TruncSeries scalar_to_series(const Scalar& x, int M) { return scalar_to_series_shifted(x, 0, M); }

}  // namespace mk
