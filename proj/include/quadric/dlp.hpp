#pragma once

#include <optional>
#include <vector>

#include "quadric/excep.hpp"

namespace quadric {

enum class BranchSide { Below, Above, Equal };

const char* to_string(BranchSide side);

struct BranchValue {
  ExceptionalRecord bundle;
  Rational value;
  BranchSide side;
};

// DLP_E(nu), or nullopt outside the window of E.
std::optional<BranchValue> branch(const ExceptionalRecord& e, const Slope& nu, EpsSign s);

// All branches of exceptionals of rank < r with value >= threshold at nu, sorted by bundle.
std::vector<BranchValue> branches_at_least(const Integer& r, const Slope& nu, const Rational& threshold,
                                           const ExceptionalCache& cache);

// Some exceptional E with rank(E) < r has DLP_E(nu) > threshold.
bool exceeds(const Integer& r, const Slope& nu, const Rational& threshold, const ExceptionalCache& cache);

// DLP^{<r}(nu); nullopt stands for -infinity (r = 1).
std::optional<Rational> sup(const Integer& r, const Slope& nu, const ExceptionalCache& cache);

// Bundles attaining sup at nu.
std::vector<ExceptionalRecord> sup_attained_by(const Integer& r, const Slope& nu, const ExceptionalCache& cache);

// Exceptional E of rank < r(v) with DLP_E(nu(v)) = Delta(v). Throws NotSemistable if Delta(v) < DLP^{<r}.
std::vector<ExceptionalRecord> associated(const KClass& v, const ExceptionalCache& cache);

enum class PositionKind { Above, SingleBranch, MultiBranch };

const char* to_string(PositionKind kind);

struct DlpPosition {
  PositionKind kind;
  std::vector<ExceptionalRecord> associated;
  std::optional<Rational> sup_value;
};

DlpPosition position(const KClass& v, const ExceptionalCache& cache);

struct GridPoint {
  Slope nu;
  std::optional<Rational> value;
};

// Samples DLP^{<r} on (1/den)Z^2 inside the box, rows ordered by (e, f).
std::vector<GridPoint> grid(const Integer& r, const SlopeBox& box, const Integer& den, const ExceptionalCache& cache);

}  // namespace quadric
