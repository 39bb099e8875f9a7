#include "quadric/dlp.hpp"

#include <algorithm>

#include "quadric/error.hpp"

namespace quadric {

const char* to_string(BranchSide side) {
  switch (side) {
    case BranchSide::Below: return "below";
    case BranchSide::Above: return "above";
    case BranchSide::Equal: return "equal";
  }
  return "?";
}

const char* to_string(PositionKind kind) {
  switch (kind) {
    case PositionKind::Above: return "above";
    case PositionKind::SingleBranch: return "single_branch";
    case PositionKind::MultiBranch: return "multi_branch";
  }
  return "?";
}

std::optional<BranchValue> branch(const ExceptionalRecord& e, const Slope& nu, EpsSign s) {
  if (!in_dlp_window(nu, e.slope, s)) return std::nullopt;
  Slope d = nu - e.slope;
  int side = sign(degree(d), s);
  if (side < 0) return BranchValue{e, hilbert_p(d) - e.delta, BranchSide::Below};
  if (side > 0) return BranchValue{e, hilbert_p(-d) - e.delta, BranchSide::Above};
  return BranchValue{e, 1 - e.delta, BranchSide::Equal};
}

namespace {

Rational exceptional_delta(long k) { return ratio(1, 2) - ratio(1, 2 * k * k); }

// Squared coordinate radius around nu outside which no rank k exceptional can reach `threshold`.
//
// Write x, y for the two factors of P at the relevant slope difference. Inside the window
// x + y <= 2. For a non-negative threshold both factors are positive, so x y >= t + Delta_k
// forces |x - 1|, |y - 1| <= sqrt(1 - t - Delta_k). For a negative threshold one factor may be
// negative and the bound loosens to (1 + sqrt(1 - t))^2 <= 4 - 2t.
std::optional<Rational> radius_sq(long k, const Rational& threshold) {
  if (threshold < 0) return Rational(4 - 2 * threshold);
  Rational r2 = 1 - threshold - exceptional_delta(k);
  if (r2 < 0) return std::nullopt;
  return r2;
}

std::optional<Rational> line_bundle_floor(const Slope& nu, EpsSign s) {
  // O(floor nu) is always in the window on its Above side.
  auto rec = make_record(KClass::line_bundle(floor(nu.e), floor(nu.f)));
  auto b = branch(rec, nu, s);
  if (!b) return std::nullopt;
  return b->value;
}

}  // namespace

std::vector<BranchValue> branches_at_least(const Integer& r, const Slope& nu, const Rational& threshold,
                                           const ExceptionalCache& cache) {
  cache.require_below(r);
  std::vector<BranchValue> out;
  cache.visit_near(
      nu, r, [&](long k) { return radius_sq(k, threshold); },
      [&](const ExceptionalRecord& e) {
        if (auto b = branch(e, nu, cache.eps_sign()); b && b->value >= threshold) out.push_back(*b);
        return true;
      });
  std::sort(out.begin(), out.end(), [](const BranchValue& x, const BranchValue& y) { return x.bundle < y.bundle; });
  return out;
}

bool exceeds(const Integer& r, const Slope& nu, const Rational& threshold, const ExceptionalCache& cache) {
  cache.require_below(r);
  bool found = false;
  cache.visit_near(
      nu, r, [&](long k) { return radius_sq(k, threshold); },
      [&](const ExceptionalRecord& e) {
        auto b = branch(e, nu, cache.eps_sign());
        if (b && b->value > threshold) found = true;
        return !found;
      });
  return found;
}

std::optional<Rational> sup(const Integer& r, const Slope& nu, const ExceptionalCache& cache) {
  cache.require_below(r);
  if (r <= 1) return std::nullopt;
  auto start = line_bundle_floor(nu, cache.eps_sign());
  std::optional<Rational> best;
  for (const auto& b : branches_at_least(r, nu, start.value_or(Rational(-1)), cache))
    if (!best || b.value > *best) best = b.value;
  return best;
}

std::vector<ExceptionalRecord> sup_attained_by(const Integer& r, const Slope& nu, const ExceptionalCache& cache) {
  std::vector<ExceptionalRecord> out;
  auto s = sup(r, nu, cache);
  if (!s) return out;
  for (const auto& b : branches_at_least(r, nu, *s, cache))
    if (b.value == *s) out.push_back(b.bundle);
  return out;
}

std::vector<ExceptionalRecord> associated(const KClass& v, const ExceptionalCache& cache) {
  Rational delta = v.discriminant();
  std::vector<ExceptionalRecord> out;
  for (const auto& b : branches_at_least(v.rank(), v.slope(), delta, cache)) {
    if (b.value > delta)
      throw Error(ErrorCode::NotSemistable, v.str() + " lies below the branch of " + b.bundle.cls.str());
    out.push_back(b.bundle);
  }
  return out;
}

DlpPosition position(const KClass& v, const ExceptionalCache& cache) {
  DlpPosition p;
  p.associated = associated(v, cache);
  p.sup_value = sup(v.rank(), v.slope(), cache);
  if (p.associated.empty())
    p.kind = PositionKind::Above;
  else if (p.associated.size() == 1)
    p.kind = PositionKind::SingleBranch;
  else
    p.kind = PositionKind::MultiBranch;
  return p;
}

std::vector<GridPoint> grid(const Integer& r, const SlopeBox& box, const Integer& den, const ExceptionalCache& cache) {
  if (den <= 0) throw Error(ErrorCode::BadInterval, "grid denominator must be positive");
  if (box.e_lo > box.e_hi || box.f_lo > box.f_hi) throw Error(ErrorCode::BadInterval, "empty grid box");
  cache.require_below(r);
  std::vector<GridPoint> out;
  for (Integer i = ceil(box.e_lo * den); i <= floor(box.e_hi * den); ++i)
    for (Integer j = ceil(box.f_lo * den); j <= floor(box.f_hi * den); ++j) {
      Slope nu{ratio(i, den), ratio(j, den)};
      out.push_back({nu, sup(r, nu, cache)});
    }
  return out;
}

}  // namespace quadric
