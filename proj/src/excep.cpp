#include "quadric/excep.hpp"

#include <algorithm>
#include <cmath>

#include "quadric/dlp.hpp"
#include "quadric/error.hpp"

namespace quadric {

ExceptionalRecord make_record(const KClass& v) { return {v, v.slope(), v.discriminant()}; }

bool is_potentially_exceptional(const KClass& v) { return v.rank() > 0 && euler_hom(v, v) == 1; }

KClass exceptional_class(const Integer& k, const Integer& a, const Integer& b) {
  // chi = r (P(nu) - Delta) with Delta = 1/2 - 1/(2k^2)
  Integer num = 2 * (a + k) * (b + k) - k * k + 1;
  Integer den = 2 * k;
  if (k <= 0 || num % den != 0)
    throw Error(ErrorCode::NotIntegral, "no exceptional class of rank " + k.get_str() + " and c1 (" + a.get_str() +
                                            "," + b.get_str() + ")");
  return KClass(k, a, b, num / den);
}

std::pair<Integer, Integer> integers_within(const Rational& c, const Rational& r2) {
  if (r2 < 0) return {Integer(1), Integer(0)};
  // Start from a floating guess, then settle exactly.
  double s = std::sqrt(r2.get_d());
  Integer lo = ceil(c - Rational(s));
  Integer hi = floor(c + Rational(s));
  auto inside = [&](const Integer& n) {
    Rational d = n - c;
    return d * d <= r2;
  };
  while (inside(lo - 1)) --lo;
  while (lo <= hi && !inside(lo)) ++lo;
  while (inside(hi + 1)) ++hi;
  while (hi >= lo && !inside(hi)) --hi;
  return {lo, hi};
}

ExceptionalCache::ExceptionalCache(EpsSign s) : sign_(s), box_{0, 1, 0, 1} {
  residues_.resize(2);
  residues_[1] = {0};
  max_rank_ = 1;
}

ExceptionalCache ExceptionalCache::enumerate(long max_rank, const SlopeBox& box, EpsSign s) {
  ExceptionalCache cache(s);
  cache.box_ = box;
  cache.extend(max_rank);
  return cache;
}

void ExceptionalCache::extend(long max_rank) {
  if (max_rank <= max_rank_) return;
  residues_.resize(max_rank + 1);
  for (long k = max_rank_ + 1; k <= max_rank; ++k) {
    if (k % 2 == 1) enumerate_rank(k);
    max_rank_ = k;
  }
}

void ExceptionalCache::enumerate_rank(long k) {
  // Potentially exceptional classes of rank k have a*b = (k-1)/2 mod k, so a is a unit mod k
  // and determines b mod k.
  std::vector<long> table(k, -1);
  Integer kk = k;
  Integer target = (kk - 1) / 2;
  for (long a = 0; a < k; ++a) {
    Integer ia = a;
    if (gcd(ia, kk) != 1) continue;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), ia.get_mpz_t(), kk.get_mpz_t());
    Integer b = mod(target * inv, kk);
    KClass v = exceptional_class(kk, ia, b);
    if (!exceeds(kk, v.slope(), v.discriminant(), *this)) table[a] = b.get_si();
  }
  residues_[k] = std::move(table);
}

std::optional<long> ExceptionalCache::residue_b(long k, const Integer& a) const {
  long ra = mod(a, Integer(k)).get_si();
  long rb = residues_[k][ra];
  if (rb < 0) return std::nullopt;
  return rb;
}

bool ExceptionalCache::covers_below(const Integer& r) const {
  // largest odd rank below r
  if (r <= 1) return true;
  Integer need = (r % 2 == 0) ? Integer(r - 1) : Integer(r - 2);
  return need <= max_rank_;
}

void ExceptionalCache::require_below(const Integer& r) const {
  if (!covers_below(r))
    throw Error(ErrorCode::CacheInsufficient, "exceptional ranks below " + r.get_str() + " needed, cache holds up to " +
                                                  std::to_string(max_rank_));
}

std::vector<ExceptionalRecord> ExceptionalCache::records_in(const SlopeBox& box, long max_rank) const {
  std::vector<ExceptionalRecord> out;
  for (long k = 1; k <= max_rank && k <= max_rank_; k += 2) {
    Integer alo = ceil(box.e_lo * k), ahi = floor(box.e_hi * k);
    Integer blo = ceil(box.f_lo * k), bhi = floor(box.f_hi * k);
    for (Integer a = alo; a <= ahi; ++a) {
      std::optional<long> rb = residue_b(k, a);
      if (!rb) continue;
      for (Integer b = blo + mod(Integer(*rb) - blo, Integer(k)); b <= bhi; b += k)
        out.push_back(make_record(exceptional_class(k, a, b)));
    }
  }
  return out;
}

ExceptionalCache ExceptionalCache::from_records(long max_rank, const SlopeBox& box, EpsSign s,
                                                const std::vector<KClass>& records) {
  auto invalid = [](const std::string& why) { return Error(ErrorCode::InvalidCache, why); };
  if (box.e_hi - box.e_lo < 1 || box.f_hi - box.f_lo < 1)
    throw invalid("box narrower than a unit square cannot represent every residue");
  ExceptionalCache cache(s);
  cache.box_ = box;
  cache.residues_.assign(max_rank + 1, {});
  for (long k = 1; k <= max_rank; k += 2) cache.residues_[k].assign(k, -1);
  cache.max_rank_ = max_rank;
  for (const KClass& v : records) {
    if (!is_potentially_exceptional(v)) throw invalid("record " + v.str() + " has chi(v,v) != 1");
    if (v.rank() > max_rank) throw invalid("record " + v.str() + " above max_rank");
    if (!box.contains(v.slope())) throw invalid("record " + v.str() + " outside box");
    long k = v.rank().get_si();
    long ra = mod(v.c1_e(), Integer(k)).get_si();
    long rb = mod(v.c1_f(), Integer(k)).get_si();
    long& slot = cache.residues_[k][ra];
    if (slot >= 0 && slot != rb) throw invalid("conflicting residues at rank " + std::to_string(k));
    slot = rb;
  }
  std::vector<KClass> listed = records;
  std::sort(listed.begin(), listed.end());
  std::vector<KClass> regenerated;
  for (const auto& rec : cache.records_in(box, max_rank)) regenerated.push_back(rec.cls);
  if (listed != regenerated) throw invalid("record list is not closed under twists inside its box");
  if (cache.residues_ != enumerate(max_rank, box, s).residues_)
    throw invalid("record list disagrees with the exceptional characters up to rank " + std::to_string(max_rank));
  return cache;
}

bool is_exceptional(const KClass& v, const ExceptionalCache& cache) {
  if (!is_potentially_exceptional(v)) return false;
  if (v.rank() == 1) return true;
  return !exceeds(v.rank(), v.slope(), v.discriminant(), cache);
}

}  // namespace quadric
