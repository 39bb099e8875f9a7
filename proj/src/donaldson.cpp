#include "quadric/donaldson.hpp"

#include <algorithm>

#include "quadric/error.hpp"

namespace quadric {

namespace {

Integer chi_twist(const KClass& v, const Integer& p, const Integer& q) { return twist(v, p, q).chi(); }

KClass lb(const Integer& p, const Integer& q) { return KClass::line_bundle(p, q); }

}  // namespace

GaetaExponents gaeta_exponents(const KClass& v, const Integer& p, const Integer& q) {
  GaetaExponents g;
  g.p = p;
  g.q = q;
  g.alpha = -chi_twist(v, -p - 1, -q - 1);
  g.beta = -chi_twist(v, -p - 1, -q);
  g.gamma = -chi_twist(v, -p, -q - 1);
  g.delta = chi_twist(v, -p, -q);
  if (g.alpha < 0 || g.beta < 0 || g.gamma < 0 || g.delta < 0)
    throw Error(ErrorCode::NotGaeta, v.str() + " has a negative exponent for L = O(" + p.get_str() + "," + q.get_str() +
                                         ")");
  return g;
}

GaetaExponents dual_gaeta_exponents(const KClass& v, const Integer& p, const Integer& q) {
  // Dualizing the resolution of v^dual by L^dual-twists gives the dual form for v.
  GaetaExponents s = gaeta_exponents(dual(v), -p, -q);
  GaetaExponents g;
  g.p = p;
  g.q = q;
  g.dual = true;
  g.alpha = s.beta;
  g.beta = s.gamma;
  g.gamma = s.delta;
  g.delta = s.alpha;
  return g;
}

std::vector<std::pair<Integer, Integer>> gaeta_search_order(const KClass& v) {
  if (v.rank() <= 0) throw Error(ErrorCode::NotPositiveRank, v.str());
  Slope nu = v.slope();
  Integer fe = floor(nu.e), ff = floor(nu.f);
  std::vector<std::pair<Integer, Integer>> order;
  // Lower window floor(e) + floor(f) <= e + f < floor(e) + floor(f) + 1 uses O(floor nu);
  // otherwise O(floor nu + (1,1)) is tried first.
  if (nu.e + nu.f >= fe + ff + 1) order.push_back({fe + 1, ff + 1});
  Integer radius = v.rank() + 2;
  for (Integer d = 0; d <= radius; ++d)
    for (Integer i = -d; i <= d; ++i)
      for (Integer j = -d; j <= d; ++j) {
        if (abs(i) != d && abs(j) != d) continue;
        std::pair<Integer, Integer> l{fe + i, ff + j};
        if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
      }
  return order;
}

namespace {

std::vector<GaetaExponents> search(const KClass& v, bool dual_form, bool first_only) {
  std::vector<GaetaExponents> out;
  if (dual_form) {
    for (const auto& [p, q] : gaeta_search_order(dual(v))) {
      try {
        out.push_back(dual_gaeta_exponents(v, -p, -q));
        if (first_only) break;
      } catch (const Error&) {
      }
    }
  } else {
    for (const auto& [p, q] : gaeta_search_order(v)) {
      try {
        out.push_back(gaeta_exponents(v, p, q));
        if (first_only) break;
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace

GaetaExponents find_gaeta(const KClass& v, bool dual_form) {
  auto found = search(v, dual_form, true);
  if (found.empty()) throw Error(ErrorCode::SearchExhausted, "no Gaeta line bundle near " + format_slope(v.slope()));
  return found.front();
}

std::vector<GaetaExponents> all_gaeta(const KClass& v, bool dual_form) { return search(v, dual_form, false); }

std::vector<KClass> vperp_basis(const KClass& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroClass, "v-perp of the zero class");
  // u -> chi(v (x) u) is linear; read its coefficients off the standard basis.
  IntVector row;
  for (int i = 0; i < 4; ++i) {
    IntVector unit(4, 0);
    unit[i] = 1;
    row.push_back(euler_tensor(v, from_vector(unit)));
  }
  std::vector<KClass> basis;
  for (const auto& x : integer_kernel({row})) basis.push_back(from_vector(x));
  return basis;
}

KClass kernel_class(const KClass& e, const KClass& v, EpsSign s) {
  KClass ebar = compare(mu(e), mu(v), s) >= 0 ? dual(e) : serre_twist(dual(e));
  if (euler_tensor(v, ebar) != 0)
    throw Error(ErrorCode::NotAssociated, e.str() + " gives a kernel class outside the orthogonal of " + v.str());
  return ebar;
}

std::array<Integer, 4> to_ebasis(const KClass& u, const Integer& p, const Integer& q) {
  // The dual basis is L(-1,-1), L(-1,0), L(0,-1), L with pairings diag(1, -1, -1, 1).
  return {euler_tensor(u, lb(p - 1, q - 1)), -euler_tensor(u, lb(p - 1, q)), -euler_tensor(u, lb(p, q - 1)),
          euler_tensor(u, lb(p, q))};
}

KClass from_ebasis(const std::array<Integer, 4>& c, const Integer& p, const Integer& q) {
  return c[0] * lb(-p - 1, -q - 1) + c[1] * lb(-p - 1, -q) + c[2] * lb(-p, -q - 1) + c[3] * lb(-p, -q);
}

bool CharVector::on_scalar_quotient() const {
  Integer total = 0;
  for (size_t i = 0; i < exponents.size(); ++i) total += exponents[i] * sizes[i];
  return total == 0;
}

bool CharVector::is_zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const Integer& x) { return x == 0; });
}

namespace {

const char* kSlots[4] = {"alpha", "beta", "gamma", "delta"};

CharVector make_char(const std::array<Integer, 4>& values, const GaetaExponents& g) {
  CharVector c;
  auto sizes = g.as_array();
  for (int i = 0; i < 4; ++i) {
    if (sizes[i] == 0) continue;  // GL(0) has no characters
    c.slots.push_back(kSlots[i]);
    c.exponents.push_back(values[i]);
    c.sizes.push_back(sizes[i]);
  }
  return c;
}

}  // namespace

CharVector lambda_character(const KClass& u, const GaetaExponents& g) {
  if (g.dual) throw Error(ErrorCode::NotGaeta, "lambda is read off the standard Gaeta form");
  auto a = to_ebasis(u, g.p, g.q);
  return make_char({-a[0], -a[1], -a[2], a[3]}, g);
}

EtaF eta_f(const KClass& e, const KClass& v, const GaetaExponents& g, EpsSign s) {
  if (g.dual) throw Error(ErrorCode::NotGaeta, "eta_f is read off the standard Gaeta form");
  const Integer &p = g.p, &q = g.q;
  std::array<KClass, 4> terms = {lb(p - 1, q - 1), lb(p - 1, q), lb(p, q - 1), lb(p, q)};
  std::array<Integer, 4> det;
  if (compare(mu(e), mu(v), s) >= 0) {
    // E is a subsheaf on the divisor: each GL factor acts on Ext^1(E, L_i) (x) C^{n_i}.
    det = {euler_hom(e, terms[0]), -euler_hom(e, terms[1]), -euler_hom(e, terms[2]), -euler_hom(e, terms[3])};
  } else {
    // E is a quotient: the divisor is cut out by det of Hom(B, E) -> Hom(A, E).
    det = {-euler_hom(terms[0], e), euler_hom(terms[1], e), euler_hom(terms[2], e), euler_hom(terms[3], e)};
  }
  EtaF out;
  out.character = make_char(det, g);
  auto n = g.as_array();
  for (int i = 0; i < 4; ++i) out.weighted[i] = n[i] * det[i];
  if (out.character.is_zero())
    throw Error(ErrorCode::Degenerate, "determinant divisor of " + e.str() + " is empty for L = O(" + p.get_str() +
                                           "," + q.get_str() + ")");
  return out;
}

bool lattice_primitive(const std::vector<KClass>& gens) {
  IntMatrix rows;
  for (const auto& g : gens) rows.push_back(to_vector(g));
  return is_saturated(rows);
}

}  // namespace quadric
