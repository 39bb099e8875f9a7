#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadric/chern.hpp"
#include "quadric/polar.hpp"

namespace quadric {

struct ExceptionalRecord {
  KClass cls;
  Slope slope;
  Rational delta;

  const Integer& rank() const { return cls.rank(); }
  friend bool operator==(const ExceptionalRecord& x, const ExceptionalRecord& y) { return x.cls == y.cls; }
  friend auto operator<=>(const ExceptionalRecord& x, const ExceptionalRecord& y) { return x.cls <=> y.cls; }
};

ExceptionalRecord make_record(const KClass& v);

// Closed box of slopes [e_lo, e_hi] x [f_lo, f_hi].
struct SlopeBox {
  Rational e_lo;
  Rational e_hi;
  Rational f_lo;
  Rational f_hi;

  bool contains(const Slope& nu) const { return e_lo <= nu.e && nu.e <= e_hi && f_lo <= nu.f && nu.f <= f_hi; }
};

// chi(v, v) = 1 with positive rank.
bool is_potentially_exceptional(const KClass& v);

// The unique potentially exceptional class of odd rank k and c1 = aE + bF. Throws NotIntegral.
KClass exceptional_class(const Integer& k, const Integer& a, const Integer& b);

// Exceptional characters up to a rank bound.
//
// Twisting by line bundles preserves exceptionality, so the cache stores, for each odd rank k,
// which residues (a mod k, b mod k) of c1 occur. Records anywhere in the plane are generated
// from these tables; box() only selects which ones records() lists.
class ExceptionalCache {
 public:
  explicit ExceptionalCache(EpsSign s = EpsSign::Positive);

  static ExceptionalCache enumerate(long max_rank, const SlopeBox& box, EpsSign s);
  // Rebuilds the residue tables from a record listing, checks the listing is twist-closed inside
  // the box and that it agrees with a fresh residue computation. Throws InvalidCache.
  static ExceptionalCache from_records(long max_rank, const SlopeBox& box, EpsSign s,
                                       const std::vector<KClass>& records);

  void extend(long max_rank);

  long max_rank() const { return max_rank_; }
  EpsSign eps_sign() const { return sign_; }
  const SlopeBox& box() const { return box_; }
  void set_box(const SlopeBox& box) { box_ = box; }

  // True when every exceptional rank below r has been enumerated.
  bool covers_below(const Integer& r) const;
  void require_below(const Integer& r) const;

  std::vector<ExceptionalRecord> records() const { return records_in(box_, max_rank_); }
  std::vector<ExceptionalRecord> records_in(const SlopeBox& box, long max_rank) const;

  // Calls visit(record) for every exceptional E with rank(E) < rank_below and
  // |nuE.e - nu.e|, |nuE.f - nu.f| <= rho_k, where rho_k^2 = radius_sq(k) and ranks with
  // radius_sq(k) = nullopt are skipped. Stops early when visit returns false.
  template <class RadiusSq, class Visit>
  void visit_near(const Slope& nu, const Integer& rank_below, RadiusSq&& radius_sq, Visit&& visit) const;

 private:
  void enumerate_rank(long k);
  std::optional<long> residue_b(long k, const Integer& a) const;

  EpsSign sign_;
  long max_rank_ = 0;
  SlopeBox box_;
  // residues_[k][a mod k] = b mod k, or -1; only odd k are populated.
  std::vector<std::vector<long>> residues_;
};

// Integers n with (n - c)^2 <= r2, as an inclusive range (empty when first > second).
std::pair<Integer, Integer> integers_within(const Rational& c, const Rational& r2);

template <class RadiusSq, class Visit>
void ExceptionalCache::visit_near(const Slope& nu, const Integer& rank_below, RadiusSq&& radius_sq,
                                  Visit&& visit) const {
  for (long k = 1; k <= max_rank_ && k < rank_below; k += 2) {
    std::optional<Rational> rho2 = radius_sq(k);
    if (!rho2) continue;
    Rational scaled = (*rho2) * k * k;
    auto [alo, ahi] = integers_within(nu.e * k, scaled);
    if (alo > ahi) continue;
    auto [blo, bhi] = integers_within(nu.f * k, scaled);
    if (blo > bhi) continue;
    for (Integer a = alo; a <= ahi; ++a) {
      std::optional<long> rb = residue_b(k, a);
      if (!rb) continue;
      Integer b = blo + mod(Integer(*rb) - blo, Integer(k));
      for (; b <= bhi; b += k) {
        KClass c = exceptional_class(k, a, b);
        if (!visit(ExceptionalRecord{c, c.slope(), c.discriminant()})) return;
      }
    }
  }
}

// v potentially exceptional and Delta(v) >= DLP^{<r}(nu(v)).
bool is_exceptional(const KClass& v, const ExceptionalCache& cache);

}  // namespace quadric
