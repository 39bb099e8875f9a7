#include "quadric/classify.hpp"

#include <algorithm>
#include <set>

#include "quadric/donaldson.hpp"
#include "quadric/error.hpp"

namespace quadric {

namespace {

const Rational kHalf(1, 2);

KClass primitive_part(const KClass& v, Integer& n) {
  n = content(v);
  return KClass(v.rank() / n, v.c1_e() / n, v.c1_f() / n, v.chi() / n);
}

}  // namespace

const char* to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::Proved: return "Proved";
    case ProofStatus::Conjectural: return "Conjectural";
    case ProofStatus::Unknown: return "Unknown";
  }
  return "?";
}

bool is_semiexceptional(const KClass& v, const ExceptionalCache& cache) {
  if (v.rank() < 1) throw Error(ErrorCode::NotPositiveRank, v.str());
  Integer n;
  KClass p = primitive_part(v, n);
  if (!is_potentially_exceptional(p)) return false;
  if (p.rank() == 1) return true;
  return !exceeds(p.rank(), p.slope(), p.discriminant(), cache);
}

bool exists_semistable(const KClass& v, const ExceptionalCache& cache) {
  if (v.rank() < 1) throw Error(ErrorCode::NotPositiveRank, v.str());
  Rational delta = v.discriminant();
  if (v.rank() == 1) return is_integer(delta) && delta >= 0;
  if (is_semiexceptional(v, cache)) return true;
  return !exceeds(v.rank(), v.slope(), delta, cache);
}

bool validate_witness(const KClass& v, const BadWitness& w, const ExceptionalCache& cache) {
  const KClass& v1 = w.v1;
  const KClass& v2 = w.v2;
  if (v1 + v2 != v) return false;
  if (v1.rank() <= 0 || v2.rank() <= 0) return false;
  if (cmp_reduced_hilbert(v1, v2, cache.eps_sign()) != std::strong_ordering::greater) return false;
  Rational d1 = v1.discriminant(), d2 = v2.discriminant();
  if (d1 < kHalf || d2 < kHalf || std::min(d1, d2) != kHalf) return false;
  Slope diff = v2.slope() - v1.slope();
  if (diff.e != -diff.f) return false;
  Integer n = v1.rank() * v2.rank();
  Rational k = diff.e * n;
  if (!is_integer(k) || k == 0 || abs(k) > n || k.get_num() != w.k) return false;
  if (euler_hom(v1, v2) != -1) return false;
  return exists_semistable(v1, cache) && exists_semistable(v2, cache);
}

std::vector<BadWitness> bad_witnesses(const KClass& v, const ExceptionalCache& cache) {
  const Integer& r = v.rank();
  if (r < 2) throw Error(ErrorCode::NotPositiveRank, "bad witnesses need rank >= 2, got " + v.str());
  cache.require_below(r);
  Slope nu = v.slope();
  std::vector<BadWitness> out;
  for (Integer r1 = 1; r1 < r; ++r1) {
    Integer r2 = r - r1;
    Integer n = r1 * r2;
    Integer kmax = sqrt(n);  // k^2 <= r1 r2 follows from Delta_other >= 1/2
    for (Integer k = -kmax; k <= kmax; ++k) {
      if (k == 0) continue;
      // c1(v1) = r1 nu - (k/r)(E - F) must be integral
      Rational shift = ratio(k, r);
      Rational a1 = r1 * nu.e - shift;
      Rational b1 = r1 * nu.f + shift;
      if (!is_integer(a1) || !is_integer(b1)) continue;
      Slope nu1{a1 / r1, b1 / r1};
      Rational other = kHalf + ratio(1, n) - ratio(k * k, n * n);
      for (int half_first = 0; half_first < 2; ++half_first) {
        // a discriminant 1/2 class has even rank
        if (half_first && r1 % 2 != 0) continue;
        if (!half_first && r2 % 2 != 0) continue;
        if (!half_first && other == kHalf) continue;  // same candidate as the other role
        Rational d1 = half_first ? kHalf : other;
        Rational chi1 = r1 * (hilbert_p(nu1) - d1);
        if (!is_integer(chi1)) continue;
        BadWitness w{KClass(r1, a1.get_num(), b1.get_num(), chi1.get_num()), {}, k};
        w.v2 = v - w.v1;
        if (validate_witness(v, w, cache)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BadWitness& x, const BadWitness& y) {
    if (x.v1 != y.v1) return x.v1 < y.v1;
    return x.v2 < y.v2;
  });
  return out;
}

Integer shatz_codim(const std::vector<KClass>& parts) {
  Integer total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].rank() <= 0) throw Error(ErrorCode::NotPositiveRank, parts[i].str());
    for (size_t j = i + 1; j < parts.size(); ++j) total -= euler_hom(parts[i], parts[j]);
  }
  return total;
}

std::vector<Stratum> codim1_strata(const KClass& v, const ExceptionalCache& cache) {
  std::vector<Stratum> out;
  for (const auto& w : bad_witnesses(v, cache)) {
    std::vector<KClass> parts{w.v1, w.v2};
    out.push_back({"half_discriminant", parts, shatz_codim(parts)});
  }
  DlpPosition pos = position(v, cache);
  if (pos.kind == PositionKind::SingleBranch) {
    const KClass& e = pos.associated.front().cls;
    std::vector<KClass> parts;
    if (compare(mu(e), mu(v), cache.eps_sign()) >= 0)
      parts = {e, v - e};
    else
      parts = {v - e, e};
    out.push_back({"exceptional", parts, shatz_codim(parts)});
  }
  return out;
}

PicardReport classify_picard(const KClass& v, const ExceptionalCache& cache) {
  if (v.rank() < 1) throw Error(ErrorCode::NotPositiveRank, v.str());
  PicardReport rep;
  rep.input = v;
  rep.delta = v.discriminant();
  primitive_part(v, rep.multiplicity);
  bool primitive = rep.multiplicity == 1;
  if (primitive) rep.torsion_free = true;

  if (v.rank() == 1) {
    rep.nonempty = is_integer(rep.delta) && rep.delta >= 0;
    rep.theorem_case = "rank_one";
    rep.status = ProofStatus::Proved;
    if (!rep.nonempty) {
      rep.theorem_case = "empty";
      rep.torsion_free.reset();
      return rep;
    }
    Integer n = rep.delta.get_num();
    rep.semiexceptional = n == 0;
    rep.dimension = 2 * n;
    if (n == 0) {
      rep.pic = "point";
    } else if (n == 1) {
      rep.rho = 2;
      rep.pic = "Z^2 (Hilbert scheme n=1)";
    } else {
      rep.rho = 3;
      rep.pic = "Z^3 (Hilbert scheme n>=2)";
    }
    return rep;
  }

  cache.require_below(v.rank());
  rep.semiexceptional = is_semiexceptional(v, cache);
  rep.nonempty = rep.semiexceptional || !exceeds(v.rank(), v.slope(), rep.delta, cache);
  if (!rep.nonempty) {
    rep.theorem_case = "empty";
    rep.status = ProofStatus::Proved;
    rep.torsion_free.reset();
    return rep;
  }
  if (rep.semiexceptional) {
    rep.dimension = 0;
    rep.pic = "point";
    rep.theorem_case = "semiexceptional";
    rep.status = ProofStatus::Proved;
    return rep;
  }

  rep.dimension = expected_dim(v);
  rep.position = position(v, cache);
  rep.witnesses = bad_witnesses(v, cache);
  rep.bad_checked = true;

  auto kernel_of = [&](const std::vector<ExceptionalRecord>& es) {
    for (const auto& e : es) rep.kernel_generators.push_back(kernel_class(e.cls, v, cache.eps_sign()));
  };

  if (rep.delta == kHalf) {
    rep.rho = 1;
    rep.pic = "Z";
    rep.theorem_case = "half_discriminant";
    rep.status = ProofStatus::Proved;
    rep.notes.push_back("moduli space is a projective space; v = " + rep.multiplicity.get_str() + " v'");
    return rep;
  }

  switch (rep.position->kind) {
    case PositionKind::Above: {
      Rational shifted = rep.delta - ratio(1, v.rank());
      bool shifted_ok = !exceeds(v.rank(), v.slope(), shifted, cache);
      if (shifted_ok && shifted > kHalf) {
        rep.rho = 3;
        rep.pic = "Z^3";
        rep.theorem_case = "above_shifted";
        rep.status = ProofStatus::Proved;
      } else if (shifted_ok && is_primitive(KClass::from_rnd(v.rank(), v.slope(), shifted))) {
        rep.rho = 3;
        rep.pic = "Z^3";
        rep.theorem_case = "above_shifted_primitive";
        rep.status = ProofStatus::Proved;
      } else if (!rep.bad()) {
        rep.rho = 3;
        rep.pic = "Z^3";
        rep.theorem_case = "above_good";
        rep.status = ProofStatus::Proved;
      } else {
        rep.rho = 3;
        rep.theorem_case = "above_bad";
        rep.status = ProofStatus::Conjectural;
        rep.notes.push_back("Picard rank 3 is conjectural for bad characters above the surface");
      }
      break;
    }
    case PositionKind::SingleBranch: {
      const ExceptionalRecord& e = rep.position->associated.front();
      kernel_of(rep.position->associated);
      if (!rep.bad()) {
        rep.rho = 2;
        rep.pic = "Z^2";
        rep.theorem_case = "single_branch_good";
        rep.status = ProofStatus::Proved;
      } else if (e.rank() == 1) {
        rep.rho = 1;
        rep.pic = "Z";
        rep.theorem_case = "single_branch_bad_line_bundle";
        rep.status = ProofStatus::Proved;
        rep.notes.push_back("kernel of lambda strictly contains Z[Ebar]");
      } else {
        rep.rho = 1;
        rep.theorem_case = "single_branch_bad_higher_rank";
        rep.status = ProofStatus::Conjectural;
        rep.notes.push_back("Picard rank 1 is conjectural for bad characters on a higher rank branch");
      }
      break;
    }
    case PositionKind::MultiBranch: {
      kernel_of(rep.position->associated);
      rep.rho = 1;
      rep.theorem_case = "multi_branch";
      rep.status = ProofStatus::Proved;
      if (primitive) {
        rep.pic = "Z";
      } else {
        IntMatrix rows;
        for (const auto& g : rep.kernel_generators) rows.push_back(to_vector(g));
        bool one_sided = true;
        const auto& es = rep.position->associated;
        for (size_t i = 0; i < es.size(); ++i)
          for (size_t j = i + 1; j < es.size(); ++j)
            if (euler_hom(es[i].cls, es[j].cls) != 0 && euler_hom(es[j].cls, es[i].cls) != 0) one_sided = false;
        if (is_saturated(rows) && one_sided) {
          rep.pic = "Z";
        } else {
          rep.pic = "Z";
          rep.torsion_free.reset();
          rep.notes.push_back("torsion of the Picard group not determined");
        }
      }
      break;
    }
  }
  return rep;
}

std::vector<BadScanEntry> bad_scan(const BadScanOptions& opts, const ExceptionalCache& cache) {
  std::vector<BadScanEntry> out;
  const SlopeBox& box = opts.box;
  for (long r = std::max(2L, opts.rank_lo); r <= opts.rank_hi; ++r) {
    Integer rr = r;
    cache.require_below(rr);
    for (Integer a = ceil(box.e_lo * r); a <= floor(box.e_hi * r); ++a)
      for (Integer b = ceil(box.f_lo * r); b <= floor(box.f_hi * r); ++b) {
        Slope nu{ratio(a, rr), ratio(b, rr)};
        std::set<KClass> candidates;
        if (opts.delta_window) {
          // chi = r (P(nu) - Delta) over the window
          Rational p = hilbert_p(nu);
          Integer chi_lo = ceil(rr * (p - opts.delta_window->second));
          Integer chi_hi = floor(rr * (p - opts.delta_window->first));
          for (Integer chi = chi_lo; chi <= chi_hi; ++chi) candidates.insert(KClass(rr, a, b, chi));
        } else {
          Integer p0 = floor(nu.e), q0 = floor(nu.f);
          for (Integer p = p0 - 1; p <= p0 + 2; ++p)
            for (Integer q = q0 - 1; q <= q0 + 2; ++q) {
              auto br = branch(make_record(KClass::line_bundle(p, q)), nu, cache.eps_sign());
              if (!br) continue;
              Rational chi = rr * (hilbert_p(nu) - br->value);
              if (is_integer(chi)) candidates.insert(KClass(rr, a, b, chi.get_num()));
            }
        }
        for (const KClass& v : candidates) {
          if (v.discriminant() <= kHalf) continue;
          if (!exists_semistable(v, cache)) continue;
          auto ws = bad_witnesses(v, cache);
          if (!ws.empty()) out.push_back({v, std::move(ws)});
        }
      }
  }
  std::sort(out.begin(), out.end(), [](const BadScanEntry& x, const BadScanEntry& y) { return x.v < y.v; });
  return out;
}

std::vector<HalfPair> half_pair_seeds(long rank_lo, long rank_hi, const ExceptionalCache& cache) {
  std::vector<HalfPair> out;
  EpsSign s = cache.eps_sign();
  for (long r = std::max(2L, rank_lo); r <= rank_hi; ++r) {
    if (r % 2 != 0) continue;  // P(nu) = 1/2 needs r^2/2 integral
    Integer rr = r;
    cache.require_below(rr);
    Integer target = rr * rr / 2;
    auto o = make_record(KClass::line_bundle(0, 0));
    std::vector<KClass> on_branch;
    // (a + r)(b + r) = r^2/2 with -r < a, b <= 0
    for (Integer u = 1; u <= rr; ++u) {
      if (target % u != 0) continue;
      Integer w = target / u;
      if (w < 1 || w > rr) continue;
      KClass v(rr, u - rr, w - rr, 0);
      if (!is_primitive(v) || v.discriminant() != kHalf) continue;
      if (compare(mu(o.cls), mu(v), s) <= 0) continue;
      auto br = branch(o, v.slope(), s);
      if (!br || br->value != kHalf) continue;
      if (exceeds(rr, v.slope(), kHalf, cache)) continue;
      on_branch.push_back(v);
    }
    for (const KClass& v1 : on_branch) {
      KClass v2(rr, v1.c1_f(), v1.c1_e(), v1.chi());
      if (std::find(on_branch.begin(), on_branch.end(), v2) == on_branch.end()) continue;
      if (cmp_reduced_hilbert(v1, v2, s) != std::strong_ordering::greater) continue;
      Slope diff = v2.slope() - v1.slope();
      Rational k = diff.e * rr * rr;
      if (diff.e != -diff.f || !is_integer(k) || k == 0 || abs(k) > rr * rr) continue;
      if (euler_hom(v1, v2) != -1) continue;
      out.push_back({v1, v2, v1 + v2});
    }
  }
  return out;
}

}  // namespace quadric
