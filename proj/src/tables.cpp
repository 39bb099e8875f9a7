#include "quadric/tables.hpp"

#include <set>
#include <sstream>

#include "quadric/classify.hpp"

namespace quadric {

namespace {

std::string rnd(const KClass& v) {
  return "(" + v.rank().get_str() + "," + format_slope(v.slope()) + "," + to_string(v.discriminant()) + ")";
}

}  // namespace

std::string wk_table(const ExceptionalCache& cache) {
  BadScanOptions opts;
  opts.rank_lo = 4;
  opts.rank_hi = 12;
  opts.box = SlopeBox{ratio(-1, 4), ratio(-1, 12), ratio(-5, 12), ratio(-1, 4)};
  KClass o = KClass::line_bundle(0, 0);
  std::ostringstream out;
  out << "# k (r,nu,Delta)\n";
  int k = 0;
  for (const auto& entry : bad_scan(opts, cache)) {
    const KClass& v = entry.v;
    if (euler_hom(o, v) != 0) continue;
    DlpPosition pos = position(v, cache);
    bool on_o = pos.kind == PositionKind::SingleBranch && pos.associated.front().cls == o;
    if (!on_o) continue;
    out << ++k << " " << rnd(v) << "\n";
  }
  return out.str();
}

std::string pair_table(long max_rank, const ExceptionalCache& cache) {
  std::ostringstream out;
  out << "# r v1 v2 w1\n";
  for (const auto& p : half_pair_seeds(2, max_rank, cache)) {
    out << p.v1.rank().get_str() << " " << rnd(p.v1) << " " << rnd(p.v2) << " " << rnd(p.w1);
    bool ok = exists_semistable(p.w1, cache) && !bad_witnesses(p.w1, cache).empty();
    if (!ok) out << " UNVERIFIED";
    out << "\n";
  }
  return out.str();
}

namespace {

std::string slope_type(const Slope& nu) {
  int halves = (is_integer(nu.e) ? 0 : 1) + (is_integer(nu.f) ? 0 : 1);
  return halves == 0 ? "integral" : halves == 1 ? "one_half" : "both_half";
}

}  // namespace

std::string r2_table(const ExceptionalCache& cache) {
  std::set<std::string> rows;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      Slope nu{ratio(a, 2), ratio(b, 2)};
      // Delta in (0, 4] means chi in [2(P - 4), 2P)
      Rational p = hilbert_p(nu);
      for (Integer chi = ceil(2 * (p - 4)); chi < 2 * p; ++chi) {
        KClass v(2, a, b, chi);
        PicardReport rep = classify_picard(v, cache);
        std::ostringstream row;
        row << slope_type(nu) << " ";
        if (!rep.nonempty) {
          row << "below empty";
        } else if (rep.semiexceptional) {
          row << "semiexceptional point";
        } else {
          std::string rel;
          if (rep.delta == ratio(1, 2))
            rel = "delta=1/2";
          else if (rep.position->kind == PositionKind::Above)
            rel = "above";
          else
            rel = "on_surface(" + to_string(*rep.position->sup_value) + ")";
          row << rel << " " << rep.pic.value_or("?") << " " << rep.position->associated.size();
        }
        rows.insert(row.str());
      }
    }
  std::ostringstream out;
  out << "# slope_type position pic associated\n";
  for (const auto& r : rows) out << r << "\n";
  return out.str();
}

}  // namespace quadric
