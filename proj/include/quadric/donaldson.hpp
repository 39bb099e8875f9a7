#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadric/excep.hpp"
#include "quadric/lattice.hpp"

namespace quadric {

// Exponents of a Gaeta type resolution
//   0 -> L(-1,-1)^alpha -> L(-1,0)^beta + L(0,-1)^gamma + L^delta -> V -> 0
// or, in dual form,
//   0 -> V -> L(1,0)^alpha + L(0,1)^beta + L^gamma -> L(1,1)^delta -> 0.
struct GaetaExponents {
  Integer alpha;
  Integer beta;
  Integer gamma;
  Integer delta;
  Integer p;  // L = O(p, q)
  Integer q;
  bool dual = false;

  std::array<Integer, 4> as_array() const { return {alpha, beta, gamma, delta}; }
};

// Throws NotGaeta when an exponent is negative.
GaetaExponents gaeta_exponents(const KClass& v, const Integer& p, const Integer& q);
GaetaExponents dual_gaeta_exponents(const KClass& v, const Integer& p, const Integer& q);

// Line bundles in the search order: the seed from floor(nu), then a square spiral
// around floor(nu) out to side 2(r + 2).
std::vector<std::pair<Integer, Integer>> gaeta_search_order(const KClass& v);

// First L in search order with non-negative exponents. Throws SearchExhausted.
GaetaExponents find_gaeta(const KClass& v, bool dual = false);
std::vector<GaetaExponents> all_gaeta(const KClass& v, bool dual = false);

// Z-basis of v-perp = {u : chi(v (x) u) = 0}.
std::vector<KClass> vperp_basis(const KClass& v);

// [Ebar]: E^dual when mu(E) >= mu(v), else E^dual (x) K_X. Throws NotAssociated if it misses v-perp.
KClass kernel_class(const KClass& e, const KClass& v, EpsSign s);

// Coordinates of u in the basis e1 = [L^(-1,-1)], e2 = [L^(-1,0)], e3 = [L^(0,-1)], e4 = [L^]
// where L^ denotes the dual line bundle.
std::array<Integer, 4> to_ebasis(const KClass& u, const Integer& p, const Integer& q);
KClass from_ebasis(const std::array<Integer, 4>& c, const Integer& p, const Integer& q);

// A character of G = prod GL(n_i) stored by its exponents on the determinants, one slot per
// factor with nonzero size.
struct CharVector {
  std::vector<std::string> slots;  // "alpha", "beta", "gamma", "delta"
  std::vector<Integer> exponents;
  std::vector<Integer> sizes;

  // Trivial on the diagonal scalars, so it descends to the quotient by them.
  bool on_scalar_quotient() const;
  bool is_zero() const;
};

// lambda(u) for u in K(X), read off the e-basis coordinates.
CharVector lambda_character(const KClass& u, const GaetaExponents& g);

// Character of the determinant semi-invariant attached to an associated exceptional E.
struct EtaF {
  CharVector character;             // det exponents, one per factor
  std::array<Integer, 4> weighted;  // the same entries scaled by the factor sizes
};

// The divisor is {Hom(E, V) != 0} when mu(E) >= mu(v) and {Hom(V, E) != 0} otherwise.
// Throws Degenerate when every exponent vanishes.
EtaF eta_f(const KClass& e, const KClass& v, const GaetaExponents& g, EpsSign s);

// Sublattice of Z^4 spanned by the classes is saturated.
bool lattice_primitive(const std::vector<KClass>& gens);

}  // namespace quadric
