#pragma once

#include <map>
#include <string>
#include <vector>

#include "mk/weights.hpp"

namespace mk {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, square

enum class Rank1Kind { AI1, AIV };

// Vector representation of U_q(sl2) (AI1) or U_q(sl_{n+1}) (AIV_n) with the
// generators of the rank-one coideal subalgebra. q = v^qv.
struct Rank1Module {
  Rank1Kind kind = Rank1Kind::AI1;
  int n = 1;  // rank of the ambient algebra
  int dim = 2;
  int qv = 1;
  Scalar c1, cn, s;  // AI1 uses c1 = cn = c
  int rho_exp = 2;   // the rho-twisted algebra has parameters c * q^rho_exp
  std::vector<std::vector<int>> ambient;  // weight of w_j: omega-units (sl2), e-coordinates (sl_{n+1})
  std::vector<Weight> restricted;          // doubled restricted weight of w_j
  std::map<std::string, Mat> gens;         // "E1", "F1", "K1", ..., "X1", "Xn", "B1", "Bn", "rho(B1)", ...

  Scalar q(int e = 1) const { return Scalar::vpow(qv * e); }
  const Mat& gen(const std::string& name) const;
};

// AI1 uses c1 as c and ignores cn; AIV uses (c1, cn) and requires s = 0.
// Throws "zero parameter".
Rank1Module build_rank1(Rank1Kind kind, int n, const Scalar& c1, const Scalar& cn, const Scalar& s, int qv = 1);
// AI1 with c = q^-1, s = 0.
Rank1Module build_ai1_default(int qv = 1);

struct SphericalPair {
  int level = 0;
  int direction = 1;
  Vec right, left;                 // v_l and f_l, normalized to -1 or 1 at the last coordinate
  Scalar d1, dn, t;                // shifted parameters of the right algebra
  Scalar right_value, left_value;  // eigenvalues of the shifted B (AI1) or of K1 Kn^-1 (AIV)
  bool closed_form = false;        // agrees with the closed-form representatives
};

// Solves the eigenproblem of the algebra shifted by chi^level. direction -1
// uses the negative characters of AI1. Throws "character not integrable here".
SphericalPair solve_spherical(const Rank1Module& M, int level, int direction = 1);

// sum_j f_j v_j e^(restricted weight of w_j)
GAElem matrix_coeff_res(const SphericalPair& p, const Rank1Module& M);

// Closed form of the single-level restriction, normalized to leading
// coefficient 1 at the top weight.
GAElem single_level_res(const Rank1Module& M, int level, int direction = 1);

// Closed-form restriction of the fundamental spherical function of level l;
// the AIV parameters are (c1, cn) = ((-1)^n q^(-2 sigma), 1).
GAElem fundamental_res(Rank1Kind kind, int n, int l, const Q& sigma, int qv);
// The same product with the opposite sign inside the Pochhammer symbol,
// (Y q e^a; q^2)_l instead of (-Y q e^a; q^2)_l.
GAElem fundamental_res_literal(Rank1Kind kind, int n, int l, const Q& sigma, int qv);

// (-1)^m q^(2 sigma) with q = v^qv; throws "sigma incompatible with D".
Scalar aiiia_parameter(const Q& sigma, int m, int qv = 1);

struct MultiplicativityReport {
  std::vector<bool> per_level;  // partial products agree with the tensor coefficient
  bool tensor_checked = false;  // the coproduct eigenrelations were available
  bool tensor_spherical = false;
  bool ok() const;
  std::string json() const;
};

// Restriction of the matrix coefficient of the tensor product of the pairs
// against the product of the single restrictions, and for AI1 and AIV_2 the
// eigenrelations of the iterated coproduct on the tensor vectors.
MultiplicativityReport verify_multiplicativity(const std::vector<SphericalPair>& pairs, const Rank1Module& M);

struct Rank1Report {
  std::string family;
  int n = 1, l = 0;
  Q sigma = 0;
  bool vectors_ok = false;       // every level matched its closed form
  bool single_levels_ok = false; // every Res is a scalar times the single-level closed form
  bool product_ok = false;       // normalized product equals fundamental_res
  bool ffbar_ok = false;         // f bar(f) equals the expanded shift factor
  bool multiplicative_ok = false;
  bool literal_display_matches = false;
  Scalar normalization;          // product = normalization * fundamental_res
  GAElem product, closed, literal;
  std::string discrepancy;
  bool ok() const { return vectors_ok && single_levels_ok && product_ok && ffbar_ok && multiplicative_ok; }
  std::string json() const;
};

// Solves levels 0..|l|-1, multiplies the restrictions and compares with the
// closed forms. AIV with l < 0 uses the tau-flipped parameters.
Rank1Report verify_rank1(Rank1Kind kind, int n, int l, const Q& sigma = Q(0));

// Expanded product of a PochProduct whose symbols are all finite.
GAElem expand_finite(const PochProduct& P);

}  // namespace mk
