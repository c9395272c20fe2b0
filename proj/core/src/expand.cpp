#include <algorithm>
#include <stdexcept>

#include "mk/weights.hpp"

namespace mk {

TruncSeries SeriesGA::coeff(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? TruncSeries(M) : it->second;
}

namespace {

using ISer = std::vector<long long>;
using IMap = std::map<Weight, ISer>;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

struct Expander {
  int n, M, window;
  IMap R;

  int dist(const Weight& w) const {
    int d = 0;
    for (int x : w) d = std::max(d, std::abs(x) - window);
    return d;
  }

  // R += coef * v^e * e^x * src  (coef = +-1)
  static void axpy(IMap& dst, const IMap& src, long long coef, int e, const Weight& x, int M) {
    for (const auto& [w, s] : src) {
      Weight t = w + x;
      ISer* out = nullptr;
      for (int o = 0; o + e <= M; ++o) {
        if (s[o] == 0) continue;
        if (!out) {
          auto it = dst.find(t);
          if (it == dst.end()) it = dst.emplace(t, ISer(M + 1, 0)).first;
          out = &it->second;
        }
        (*out)[o + e] = checked_add((*out)[o + e], checked_mul(coef, s[o]));
      }
    }
  }

  void times_binomial(int sign, int e, const Weight& x) {
    IMap add;
    axpy(add, R, -sign, e, x, M);
    for (auto& [w, s] : add) {
      auto it = R.find(w);
      if (it == R.end()) {
        R.emplace(w, std::move(s));
        continue;
      }
      for (int o = 0; o <= M; ++o) it->second[o] = checked_add(it->second[o], s[o]);
    }
  }

  void divide_binomial(int sign, int e, const Weight& x, int max_terms) {
    // 1/(1 - u) = sum_k u^k, u = sign v^e e^x
    IMap acc = R, cur = R;
    for (int k = 1; k <= max_terms; ++k) {
      IMap next;
      axpy(next, cur, sign, e, x, M);
      if (next.empty()) break;
      for (auto& [w, s] : next) {
        auto it = acc.find(w);
        if (it == acc.end()) {
          acc.emplace(w, s);
          continue;
        }
        for (int o = 0; o <= M; ++o) it->second[o] = checked_add(it->second[o], s[o]);
      }
      cur = std::move(next);
    }
    R = std::move(acc);
  }

  // Drops terms whose distance from the window exceeds what factors still to
  // come (each copy moving at most `step` per coordinate for at least `emin`
  // v-order) can recover.
  void prune_map(IMap& m, int step, int emin) const {
    for (auto it = m.begin(); it != m.end();) {
      int d = dist(it->first);
      bool any = false;
      if (d > 0) {
        for (int o = 0; o <= M; ++o) {
          if (it->second[o] == 0) continue;
          int reach = emin > 0 ? step * ((M - o) / emin) : 0;
          if (d > reach)
            it->second[o] = 0;
          else
            any = true;
        }
      } else {
        any = std::any_of(it->second.begin(), it->second.end(), [](long long c) { return c != 0; });
      }
      if (!any)
        it = m.erase(it);
      else
        ++it;
    }
  }
};

struct Factor {
  int sign, e;
  Weight x;
  int d;
};

}  // namespace

SeriesGA expand(const PochProduct& P, int M, int window) {
  if (M < 0) throw std::invalid_argument("expand: negative precision");
  int n = P.rank();
  Expander ex{n, M, window, {}};
  for (const auto& [w, c] : P.prefactor().terms()) {
    TruncSeries s = scalar_to_series(c, M);
    ISer is(M + 1, 0);
    for (int o = 0; o <= M; ++o) {
      if (s[o].get_den() != 1) throw std::domain_error("expand: non-integral prefactor");
      is[o] = s[o].get_num().get_si();
    }
    ex.R.emplace(w, std::move(is));
  }

  std::vector<Factor> fs;
  for (const auto& [key, row] : P.canonical()) {
    const auto& [sign, w, b, res] = key;
    (void)res;
    int d = 0;
    for (auto it = row.begin(); it != row.end(); ++it) {
      d += it->second;
      auto nx = std::next(it);
      int end = nx == row.end() ? M + 1 : std::min(nx->first, M + 1);
      if (d == 0) continue;
      for (int e = it->first; e < end; e += b) {
        if (e < 0) throw std::domain_error("expand: factor with negative v-order");
        fs.push_back({sign, e, w, d});
      }
    }
  }
  std::stable_sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.e < b.e; });

  for (size_t i = 0; i < fs.size(); ++i) {
    const Factor& f = fs[i];
    if (f.d > 0) {
      for (int j = 0; j < f.d; ++j) ex.times_binomial(f.sign, f.e, f.x);
    } else {
      int max_terms;
      if (f.e > 0) {
        max_terms = M / f.e;
      } else {
        if (window < 0) throw std::domain_error("expand: reciprocal factor of v-order 0 needs a weight window");
        max_terms = 2 * (window + 2 * M + 2);
      }
      for (int j = 0; j < -f.d; ++j) ex.divide_binomial(f.sign, f.e, f.x, max_terms);
    }
    if (window >= 0) {
      int step = 0, emin = 0;
      for (size_t k = i + 1; k < fs.size(); ++k) {
        for (int c : fs[k].x) step = std::max(step, std::abs(c));
        if (fs[k].e > 0) emin = emin == 0 ? fs[k].e : std::min(emin, fs[k].e);
      }
      bool free_left = false;
      for (size_t k = i + 1; k < fs.size(); ++k) free_left |= fs[k].e == 0;
      if (!free_left) ex.prune_map(ex.R, step, emin);
    }
  }

  SeriesGA out;
  out.n = n;
  out.M = M;
  for (const auto& [w, s] : ex.R) {
    if (window >= 0 && ex.dist(w) > 0) continue;
    TruncSeries t(M);
    bool any = false;
    for (int o = 0; o <= M; ++o) {
      if (s[o] == 0) continue;
      t[o] = Q(static_cast<long>(s[o]));
      any = true;
    }
    if (any) out.terms.emplace(w, std::move(t));
  }
  return out;
}

ShiftedSeries constant_term_against(const GAElem& F, const PochProduct& W, int M) {
  int K = 0, win = 0;
  for (const auto& [w, c] : F.terms()) {
    K = std::max(K, -c.valuation());
    for (int x : w) win = std::max(win, std::abs(x));
  }
  int Mp = M + K;
  SeriesGA E = expand(W, Mp, win);
  ShiftedSeries r{K, TruncSeries(Mp)};
  for (const auto& [w, c] : F.terms()) {
    auto it = E.terms.find(-w);
    if (it == E.terms.end()) continue;
    r.s += scalar_to_series_shifted(c, K, Mp) * it->second;
  }
  return r;
}

TruncSeries inner_product(const GAElem& f, const GAElem& g, const PochProduct& W, const PochProduct& base, int M) {
  ShiftedSeries num = constant_term_against(f * ga_bar(g), W, M);
  for (int o = 0; o < num.shift; ++o)
    if (num.s[o] != 0) throw std::domain_error("pole at origin");
  TruncSeries ct(M);
  for (int o = 0; o <= M; ++o) ct[o] = num.s[o + num.shift];
  SeriesGA B = expand(base, M, 0);
  TruncSeries cb = B.coeff(zero_weight(base.rank()));
  if (cb[0] == 0) throw std::domain_error("ct of the base weight vanishes at v^0");
  return ct * cb.inverse();
}

}  // namespace mk
