#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadric/dlp.hpp"

namespace quadric {

// v = v1 + v2 with v1 destabilizing-ordered ahead of v2, one factor of discriminant 1/2,
// nu(v2) - nu(v1) = k/(r1 r2) (E - F) and chi(v1, v2) = -1.
struct BadWitness {
  KClass v1;
  KClass v2;
  Integer k;

  friend bool operator==(const BadWitness& x, const BadWitness& y) { return x.v1 == y.v1 && x.v2 == y.v2; }
};

bool is_semiexceptional(const KClass& v, const ExceptionalCache& cache);
bool exists_semistable(const KClass& v, const ExceptionalCache& cache);

// Every decomposition certifying that v is bad, sorted by (v1, v2). Empty means good.
std::vector<BadWitness> bad_witnesses(const KClass& v, const ExceptionalCache& cache);

// Re-checks a witness against the definition without using the enumeration shortcuts.
bool validate_witness(const KClass& v, const BadWitness& w, const ExceptionalCache& cache);

// -sum_{i<j} chi(v_i, v_j)
Integer shatz_codim(const std::vector<KClass>& parts);

struct Stratum {
  std::string kind;  // "half_discriminant" or "exceptional"
  std::vector<KClass> parts;
  Integer codim;
};

std::vector<Stratum> codim1_strata(const KClass& v, const ExceptionalCache& cache);

enum class ProofStatus { Proved, Conjectural, Unknown };

const char* to_string(ProofStatus s);

struct PicardReport {
  KClass input;
  Rational delta;
  bool nonempty = false;
  bool semiexceptional = false;
  Integer multiplicity = 1;  // N with v = N v', v' primitive
  std::optional<Integer> dimension;
  std::optional<DlpPosition> position;
  std::vector<BadWitness> witnesses;
  bool bad_checked = false;
  std::optional<int> rho;
  std::optional<std::string> pic;
  std::optional<bool> torsion_free;
  std::vector<KClass> kernel_generators;
  std::string theorem_case;
  ProofStatus status = ProofStatus::Unknown;
  std::vector<std::string> notes;

  bool bad() const { return !witnesses.empty(); }
};

PicardReport classify_picard(const KClass& v, const ExceptionalCache& cache);

struct BadScanOptions {
  long rank_lo = 2;
  long rank_hi = 2;
  SlopeBox box;
  // When set, every integral Delta in [lo, hi] is tried; otherwise Delta is taken from the
  // line-bundle branches through each slope.
  std::optional<std::pair<Rational, Rational>> delta_window;
};

struct BadScanEntry {
  KClass v;
  std::vector<BadWitness> witnesses;
};

std::vector<BadScanEntry> bad_scan(const BadScanOptions& opts, const ExceptionalCache& cache);

// A pair v1 = (r, phi E + eps F, 1/2), v2 = (r, eps E + phi F, 1/2) on the O-branch satisfying
// the ordering, slope-difference and pairing conditions, and w1 = v1 + v2.
struct HalfPair {
  KClass v1;
  KClass v2;
  KClass w1;
};

// Pair seeds with rank in [rank_lo, rank_hi] and slopes in (-1, 0]^2.
std::vector<HalfPair> half_pair_seeds(long rank_lo, long rank_hi, const ExceptionalCache& cache);

}  // namespace quadric
