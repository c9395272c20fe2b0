#pragma once

#include <string>
#include <vector>

#include "mk/poly.hpp"

namespace mk {

// Doubled epsilon-coordinates: entry i stores 2 * <lambda, eps_i>.
using Weight = std::vector<int>;

Weight zero_weight(int n);
Weight unit_weight(int n, int i);  // eps_i, doubled: 2 at position i
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scaled(const Weight& a, int k);

// Standard dot product on eps-coordinates (doubled dot / 4).
Q pairing(const Weight& a, const Weight& b);
// Doubled dot product divided by 2; integral whenever one side is even.
int pairing2(const Weight& a, const Weight& b);

bool is_even(const Weight& w);
bool is_positive(const Weight& w);  // first nonzero coordinate > 0
bool is_dominant(const Weight& w);  // descending and nonnegative
std::string weight_str(const Weight& w);

struct RootSystem {
  int n = 0;
  std::vector<Weight> R1, R2, R3;
  std::vector<Weight> R1pos, R2pos, R3pos;
};

RootSystem build_root_system(int n);

// Signed permutation: (w x)_{perm[i]} = sign[i] * x_i.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  Weight apply(const Weight& x) const;
};

const std::vector<SignedPerm>& weyl_group(int n);
std::vector<Weight> weyl_orbit(const Weight& w);  // sorted, deduplicated
Weight dominant_rep(const Weight& w);

enum class Lattice {
  C,   // simple roots eps_i - eps_{i+1}, 2 eps_n
  BC,  // simple roots eps_i - eps_{i+1}, eps_n
};

bool dominance_leq(const Weight& mu, const Weight& lambda, Lattice lat = Lattice::C);

// Dominant mu <= lambda, ordered by coordinate sum, then lexicographically.
std::vector<Weight> dominant_weights_below(const Weight& lambda, Lattice lat = Lattice::C);

// Position of mu in the linear extension: compares (coordinate sum, lex).
bool linear_extension_less(const Weight& a, const Weight& b);

}  // namespace mk
