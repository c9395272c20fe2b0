#pragma once

#include <string>
#include <vector>

#include "mk/scalar.hpp"

namespace mk {

inline constexpr int kDefaultPrecision = 40;

// Power series in v truncated after v^M (coefficients 0..M are kept).
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(kDefaultPrecision) {}
  explicit TruncSeries(int M) : c_(M + 1) {}

  int precision() const { return static_cast<int>(c_.size()) - 1; }
  const Q& operator[](int i) const { return c_[i]; }
  Q& operator[](int i) { return c_[i]; }
  const std::vector<Q>& coeffs() const { return c_; }

  bool is_zero() const;
  // Lowest index with a nonzero coefficient, or -1.
  int first_nonzero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator*(const Q& s) const;
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  // Requires a nonzero constant term.
  TruncSeries inverse() const;
  TruncSeries truncated(int M) const;

  std::string str() const;

 private:
  std::vector<Q> c_;
};

// Expansion of x in Q[[v]] up to v^M; throws "pole at origin" if x has a pole at v = 0.
TruncSeries scalar_to_series(const Scalar& x, int M = kDefaultPrecision);

// Expansion of v^shift * x; shift must be at least -valuation(x).
TruncSeries scalar_to_series_shifted(const Scalar& x, int shift, int M);

}  // namespace mk
