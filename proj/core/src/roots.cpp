#include "mk/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mk {

Weight zero_weight(int n) { return Weight(n, 0); }

Weight unit_weight(int n, int i) {
  Weight w(n, 0);
  w.at(i) = 2;
  return w;
}

static void check_rank(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mixed ranks");
}

Weight operator+(const Weight& a, const Weight& b) {
  check_rank(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_rank(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator-(const Weight& a) { return scaled(a, -1); }

Weight scaled(const Weight& a, int k) {
  Weight r = a;
  for (auto& x : r) x *= k;
  return r;
}

Q pairing(const Weight& a, const Weight& b) {
  check_rank(a, b);
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  Q r(s, 4);
  r.canonicalize();
  return r;
}

int pairing2(const Weight& a, const Weight& b) {
  check_rank(a, b);
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  if (s % 2 != 0) throw std::logic_error("pairing2: odd doubled product");
  return static_cast<int>(s / 2);
}

bool is_even(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x % 2 == 0; });
}

bool is_positive(const Weight& w) {
  for (int x : w)
    if (x != 0) return x > 0;
  return false;
}

bool is_dominant(const Weight& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
  }
  return true;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

RootSystem build_root_system(int n) {
  if (n <= 0) throw std::invalid_argument("empty rank");
  RootSystem rs;
  rs.n = n;
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      rs.R1.push_back(scaled(unit_weight(n, i), s));
      rs.R3.push_back(scaled(unit_weight(n, i), 2 * s));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          rs.R2.push_back(scaled(unit_weight(n, i), si) + scaled(unit_weight(n, j), sj));
  auto pos = [](const std::vector<Weight>& v) {
    std::vector<Weight> r;
    std::copy_if(v.begin(), v.end(), std::back_inserter(r), is_positive);
    return r;
  };
  rs.R1pos = pos(rs.R1);
  rs.R2pos = pos(rs.R2);
  rs.R3pos = pos(rs.R3);
  return rs;
}

Weight SignedPerm::apply(const Weight& x) const {
  if (x.size() != perm.size()) throw std::invalid_argument("mixed ranks");
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[perm[i]] = sign[i] * x[i];
  return r;
}

const std::vector<SignedPerm>& weyl_group(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<SignedPerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SignedPerm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPerm g{p, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) g.sign[i] = (mask >> i & 1) ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

Weight dominant_rep(const Weight& w) {
  Weight r = w;
  for (auto& x : r) x = std::abs(x);
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

std::vector<Weight> weyl_orbit(const Weight& w) {
  // orbit of a signed permutation action: all sign patterns of all permutations
  std::set<Weight> s;
  Weight a = dominant_rep(w);
  std::sort(a.begin(), a.end());
  int n = static_cast<int>(a.size());
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Weight x = a;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) x[i] = -x[i];
      s.insert(x);
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return {s.begin(), s.end()};
}

bool dominance_leq(const Weight& mu, const Weight& lambda, Lattice lat) {
  check_rank(mu, lambda);
  // lambda - mu = sum_k s_k (eps_k - eps_{k+1}) + s_n eps_n, s_k = partial sums
  long s = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    int d = lambda[i] - mu[i];
    if (d % 2 != 0) return false;
    s += d / 2;
    if (s < 0) return false;
  }
  if (lat == Lattice::C && s % 2 != 0) return false;
  return true;
}

bool linear_extension_less(const Weight& a, const Weight& b) {
  long sa = std::accumulate(a.begin(), a.end(), 0L);
  long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  return a < b;
}

std::vector<Weight> dominant_weights_below(const Weight& lambda, Lattice lat) {
  if (!is_dominant(lambda)) throw std::invalid_argument("dominant_weights_below: weight not dominant");
  int n = static_cast<int>(lambda.size());
  std::vector<Weight> out;
  if (n == 0) return out;
  int top = lambda[0];
  Weight cur(n);
  // descending sequences in [0, top], coordinatewise parity of lambda
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == n) {
      if (dominance_leq(cur, lambda, lat)) out.push_back(cur);
      return;
    }
    for (int x = cap; x >= 0; --x) {
      if ((x - lambda[i]) % 2 != 0) continue;
      cur[i] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, top);
  std::sort(out.begin(), out.end(), linear_extension_less);
  return out;
}

}  // namespace mk
