#include "quadric/serialize.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "quadric/error.hpp"

namespace quadric {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) { return Json(to_string(x)); }

Json to_json(const KClass& v) {
  return Json{{"r", to_json(v.rank())}, {"c1", Json::array({to_json(v.c1_e()), to_json(v.c1_f())})},
              {"chi", to_json(v.chi())}};
}

Json to_json(const Slope& nu) { return Json::array({to_json(nu.e), to_json(nu.f)}); }

Json to_json(const BadWitness& w) { return Json{{"v1", to_json(w.v1)}, {"v2", to_json(w.v2)}, {"k", to_json(w.k)}}; }

Json to_json(const DlpPosition& p) {
  Json assoc = Json::array();
  for (const auto& e : p.associated) assoc.push_back(to_json(e.cls));
  return Json{{"kind", to_string(p.kind)},
              {"associated", assoc},
              {"sup", p.sup_value ? to_json(*p.sup_value) : Json(nullptr)}};
}

Json to_json(const PicardReport& rep) {
  Json j;
  j["input"] = to_json(rep.input);
  j["delta"] = to_json(rep.delta);
  j["nonempty"] = rep.nonempty;
  j["semiexceptional"] = rep.semiexceptional;
  j["multiplicity"] = to_json(rep.multiplicity);
  j["dimension"] = rep.dimension ? to_json(*rep.dimension) : Json(nullptr);
  j["position"] = rep.position ? to_json(*rep.position) : Json(nullptr);
  j["bad"] = rep.bad_checked ? Json(rep.bad()) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["rho"] = rep.rho ? Json(*rep.rho) : Json(nullptr);
  j["pic"] = rep.pic ? Json(*rep.pic) : Json(nullptr);
  j["torsion_free"] = rep.torsion_free ? Json(*rep.torsion_free) : Json(nullptr);
  Json ks = Json::array();
  for (const auto& k : rep.kernel_generators) ks.push_back(to_json(k));
  j["kernel_generators"] = ks;
  j["theorem_case"] = rep.theorem_case;
  j["status"] = to_string(rep.status);
  j["notes"] = rep.notes;
  return j;
}

Json to_json(const GaetaExponents& g) {
  return Json{{"L", Json::array({to_json(g.p), to_json(g.q)})},
              {"form", g.dual ? "dual" : "standard"},
              {"exponents", Json::array({to_json(g.alpha), to_json(g.beta), to_json(g.gamma), to_json(g.delta)})}};
}

Json to_json(const CharVector& c) {
  Json e = Json::array(), n = Json::array();
  for (const auto& x : c.exponents) e.push_back(to_json(x));
  for (const auto& x : c.sizes) n.push_back(to_json(x));
  return Json{{"slots", c.slots}, {"exponents", e}, {"sizes", n}};
}

Json to_json(const Stratum& s) {
  Json parts = Json::array();
  for (const auto& p : s.parts) parts.push_back(to_json(p));
  return Json{{"kind", s.kind}, {"parts", parts}, {"codim", to_json(s.codim)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

KClass kclass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("c1") || !j.contains("chi") || !j["c1"].is_array() ||
      j["c1"].size() != 2)
    throw Error(ErrorCode::ParseError, "expected {\"r\":..,\"c1\":[..,..],\"chi\":..}, got " + j.dump());
  return KClass(integer_from_json(j["r"]), integer_from_json(j["c1"][0]), integer_from_json(j["c1"][1]),
                integer_from_json(j["chi"]));
}

KClass parse_kclass(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return kclass_from_json(j);
  }
  std::istringstream in(text);
  std::string r, e, f, d, extra;
  if (!(in >> r >> e >> f >> d) || (in >> extra))
    throw Error(ErrorCode::ParseError, "expected JSON or 'r nu_e nu_f delta', got '" + text + "'");
  return KClass::from_rnd(parse_integer(r), Slope{parse_rational(e), parse_rational(f)}, parse_rational(d));
}

namespace {

Json box_json(const SlopeBox& b) {
  return Json::array({Json::array({to_json(b.e_lo), to_json(b.e_hi)}), Json::array({to_json(b.f_lo), to_json(b.f_hi)})});
}

SlopeBox box_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw Error(ErrorCode::InvalidCache, "box must be [[e_lo,e_hi],[f_lo,f_hi]]");
  return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
          rational_from_json(j[1][1])};
}

}  // namespace

Json cache_to_json(const ExceptionalCache& cache) {
  Json recs = Json::array();
  for (const auto& r : cache.records()) recs.push_back(to_json(r.cls));
  return Json{{"version", 1},
              {"eps_sign", static_cast<int>(cache.eps_sign())},
              {"max_rank", cache.max_rank()},
              {"box", box_json(cache.box())},
              {"records", recs}};
}

ExceptionalCache cache_from_json(const Json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw Error(ErrorCode::InvalidCache, "unsupported cache version");
    int s = j.at("eps_sign").get<int>();
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidCache, "eps_sign must be 1 or -1");
    long max_rank = j.at("max_rank").get<long>();
    if (max_rank < 1) throw Error(ErrorCode::InvalidCache, "max_rank must be positive");
    SlopeBox box = box_from_json(j.at("box"));
    std::vector<KClass> recs;
    for (const auto& r : j.at("records")) recs.push_back(kclass_from_json(r));
    return ExceptionalCache::from_records(max_rank, box, static_cast<EpsSign>(s), recs);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidCache, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidCache) throw;
    throw Error(ErrorCode::InvalidCache, e.what());
  }
}

std::optional<ExceptionalCache> load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidCache, path + ": " + e.what());
  }
  return cache_from_json(j);
}

void save_cache(const std::string& path, const ExceptionalCache& cache) {
  // A unit square box keeps the file reloadable whatever box the caller used.
  ExceptionalCache stored = cache;
  stored.set_box(SlopeBox{0, 1, 0, 1});
  std::string text = cache_to_json(stored).dump() + "\n";

  std::string lock_path = path + ".lock";
  int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd >= 0) ::flock(fd, LOCK_EX);
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
    if (!out) {
      if (fd >= 0) ::close(fd);
      throw Error(ErrorCode::InvalidCache, "cannot write " + tmp);
    }
  }
  int rc = std::rename(tmp.c_str(), path.c_str());
  if (fd >= 0) {
    ::flock(fd, LOCK_UN);
    ::close(fd);
  }
  if (rc != 0) throw Error(ErrorCode::InvalidCache, "cannot rename " + tmp + " to " + path);
}

}  // namespace quadric
