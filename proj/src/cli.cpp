#include "quadric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "quadric/error.hpp"
#include "quadric/serialize.hpp"
#include "quadric/tables.hpp"

namespace quadric::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::vector<Rational> rational_list(const std::string& text, std::size_t n, const std::string& what) {
  auto parts = split(text, ',');
  if (parts.size() != n)
    throw Error(ErrorCode::ParseError, what + " expects " + std::to_string(n) + " comma separated values, got '" + text + "'");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

SlopeBox parse_box(const std::string& text) {
  auto v = rational_list(text, 4, "--box");
  if (v[0] > v[1] || v[2] > v[3]) throw Error(ErrorCode::BadInterval, "box bounds out of order: " + text);
  return {v[0], v[1], v[2], v[3]};
}

std::pair<Rational, Rational> parse_interval(const std::string& text, const std::string& what) {
  auto v = rational_list(text, 2, what);
  if (v[0] > v[1]) throw Error(ErrorCode::BadInterval, what + " bounds out of order: " + text);
  return {v[0], v[1]};
}

std::pair<long, long> parse_ranks(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "--ranks expects lo..hi, got '" + text + "'");
  long lo = to_long(parse_integer(text.substr(0, pos)));
  long hi = to_long(parse_integer(text.substr(pos + 2)));
  if (lo < 1 || lo > hi) throw Error(ErrorCode::BadInterval, "--ranks needs 1 <= lo <= hi, got '" + text + "'");
  return {lo, hi};
}

// JSON, or four comma separated integers r,a,b,chi. Rank may be zero or negative.
KClass parse_raw_class(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return parse_kclass(text);
  auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::ParseError, "expected JSON or r,a,b,chi, got '" + text + "'");
  return KClass(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), parse_integer(parts[3]));
}

std::pair<Integer, Integer> parse_line_bundle(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--L expects p,q, got '" + text + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1])};
}

std::string format_float(const Rational& x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x.get_d();
  return s.str();
}

std::string rnd_string(const KClass& v) {
  return "(" + to_string(v.rank()) + "," + format_slope(v.slope()) + "," + to_string(v.discriminant()) + ")";
}

void print_report_table(const PicardReport& rep, std::ostream& out) {
  out << "input            " << rep.input.str() << "\n";
  if (rep.input.rank() > 0) out << "nu               " << format_slope(rep.input.slope()) << "\n";
  out << "delta            " << to_string(rep.delta) << "\n";
  out << "nonempty         " << (rep.nonempty ? "yes" : "no") << "\n";
  out << "semiexceptional  " << (rep.semiexceptional ? "yes" : "no") << "\n";
  out << "multiplicity     " << to_string(rep.multiplicity) << "\n";
  if (rep.dimension) out << "dimension        " << to_string(*rep.dimension) << "\n";
  if (rep.position) {
    out << "position         " << to_string(rep.position->kind);
    if (rep.position->sup_value) out << " (sup " << to_string(*rep.position->sup_value) << ")";
    out << "\n";
    for (const auto& e : rep.position->associated) out << "  associated     " << rnd_string(e.cls) << "\n";
  }
  if (rep.bad_checked) out << "bad              " << (rep.bad() ? "yes" : "no") << "\n";
  for (const auto& w : rep.witnesses)
    out << "  witness        " << rnd_string(w.v1) << " + " << rnd_string(w.v2) << " k=" << to_string(w.k) << "\n";
  if (rep.rho) out << "rho              " << *rep.rho << "\n";
  if (rep.pic) out << "pic              " << *rep.pic << "\n";
  if (rep.torsion_free) out << "torsion_free     " << (*rep.torsion_free ? "yes" : "no") << "\n";
  for (const auto& k : rep.kernel_generators) out << "  kernel         " << k.str() << "\n";
  out << "case             " << rep.theorem_case << "\n";
  out << "status           " << to_string(rep.status) << "\n";
  for (const auto& n : rep.notes) out << "note             " << n << "\n";
}

Json ebasis_json(const std::array<Integer, 4>& c) {
  Json j = Json::array();
  for (const auto& x : c) j.push_back(to_json(x));
  return j;
}

const char* kFirstTermNote =
    "the first term of the resolution is taken to be L(-1,-1) when reading off eta_f";

struct Tables {
  std::string which = "all";
  long max_pair_rank = 70;
  std::string golden;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::TableMismatch, "cannot read golden file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Pair rows beyond the requested rank are not regenerated, so they are dropped from the golden side too.
std::vector<std::string> golden_lines(const std::string& name, const std::string& text, long max_pair_rank) {
  auto lines = lines_of(text);
  if (name != "pairs") return lines;
  std::vector<std::string> kept;
  for (const auto& l : lines) {
    if (l.rfind("#", 0) == 0 || std::stol(l.substr(0, l.find(' '))) <= max_pair_rank) kept.push_back(l);
  }
  return kept;
}

}  // namespace

ExceptionalCache obtain_cache(const RunConfig& config, long max_rank) {
  max_rank = std::max(max_rank, 1L);
  SlopeBox unit{0, 1, 0, 1};
  std::optional<ExceptionalCache> cache;
  if (config.cache_path) {
    cache = load_cache(*config.cache_path);
    if (cache && cache->eps_sign() != config.eps_sign) cache.reset();
  }
  bool grew = false;
  if (!cache) {
    cache = ExceptionalCache::enumerate(max_rank, unit, config.eps_sign);
    grew = true;
  } else if (cache->max_rank() < max_rank) {
    cache->extend(max_rank);
    grew = true;
  }
  if (grew && config.cache_path) save_cache(*config.cache_path, *cache);
  return *cache;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moduli of sheaves on P1 x P1: existence, DLP position, bad characters and Picard groups"};
  app.require_subcommand(1);

  RunConfig config;
  int eps = 1;
  std::string cache_path;
  bool json = false;
  app.add_option("--eps-sign", eps, "Sign of eps in H = E + (1 + eps)F")->check(CLI::IsMember({1, -1}));
  app.add_option("--cache", cache_path, "Exceptional cache file");
  app.add_option("--margin", config.margin, "Box enlargement for the brute force cross-check")
      ->check(CLI::PositiveNumber);
  app.add_option("--float-digits", config.float_digits, "Decimals in float columns")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "JSON output");

  // classify
  auto* classify = app.add_subcommand("classify", "Full Picard report for a Chern character");
  std::string char_text;
  classify->add_option("--char", char_text, "JSON {\"r\":..,\"c1\":[..,..],\"chi\":..} or 'r nu_e nu_f delta'")
      ->required();
  classify->add_flag("--json", json);

  // dlp
  auto* dlp = app.add_subcommand("dlp", "DLP^{<r} at a slope");
  std::string rank_text, nu_text;
  bool cross_check = false;
  dlp->add_option("--r", rank_text)->required();
  dlp->add_option("--nu", nu_text, "e,f")->required();
  dlp->add_flag("--cross-check", cross_check, "Recompute the sup from every record within the margin box");
  dlp->add_flag("--json", json);

  // dlp-grid
  auto* dlp_grid = app.add_subcommand("dlp-grid", "DLP^{<r} sampled on a grid, as CSV");
  std::string box_text, den_text, out_path;
  dlp_grid->add_option("--r", rank_text)->required();
  dlp_grid->add_option("--box", box_text, "e_lo,e_hi,f_lo,f_hi")->required();
  dlp_grid->add_option("--den", den_text)->required();
  dlp_grid->add_option("--out", out_path, "CSV file (default stdout)");

  // exceptionals
  auto* exceptionals = app.add_subcommand("exceptionals", "Enumerate exceptional characters");
  long max_rank = 1;
  exceptionals->add_option("--max-rank", max_rank)->required()->check(CLI::PositiveNumber);
  exceptionals->add_option("--box", box_text, "e_lo,e_hi,f_lo,f_hi (default 0,1,0,1)");
  exceptionals->add_flag("--json", json);

  // gaeta
  auto* gaeta = app.add_subcommand("gaeta", "Gaeta type resolutions");
  std::string l_text;
  bool dual_form = false, all = false;
  gaeta->add_option("--char", char_text)->required();
  gaeta->add_option("--L", l_text, "p,q");
  gaeta->add_flag("--dual", dual_form);
  gaeta->add_flag("--all", all);
  gaeta->add_flag("--json", json);

  // donaldson
  auto* donaldson = app.add_subcommand("donaldson", "Donaldson homomorphism data on the Gaeta family");
  std::string u_text;
  donaldson->add_option("--char", char_text)->required();
  donaldson->add_option("--u", u_text, "JSON or r,a,b,chi")->required();
  donaldson->add_option("--L", l_text, "p,q");
  donaldson->add_flag("--json", json);

  // bad-scan
  auto* bad_scan_cmd = app.add_subcommand("bad-scan", "Search for bad characters");
  std::string ranks_text, window_text;
  bad_scan_cmd->add_option("--ranks", ranks_text, "lo..hi")->required();
  bad_scan_cmd->add_option("--box", box_text)->required();
  bad_scan_cmd->add_option("--delta-window", window_text, "lo,hi");
  bad_scan_cmd->add_flag("--json", json);

  // walls
  auto* walls_cmd = app.add_subcommand("walls", "Walls of a given type");
  std::string delta_text;
  walls_cmd->add_option("--r", rank_text)->required();
  walls_cmd->add_option("--delta", delta_text)->required();
  walls_cmd->add_option("--window", window_text, "lo,hi")->required();
  walls_cmd->add_flag("--json", json);

  // paper-tables
  auto* tables_cmd = app.add_subcommand("paper-tables", "Regenerate the published tables and diff them");
  Tables tab;
  tables_cmd->add_option("--which", tab.which)->check(CLI::IsMember({"wk", "pairs", "r2", "all"}));
  tables_cmd->add_option("--max-pair-rank", tab.max_pair_rank)->check(CLI::Range(2L, 100000L));
  tables_cmd->add_option("--golden", tab.golden, "Directory of expected tables");
  tables_cmd->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  config.eps_sign = eps == 1 ? EpsSign::Positive : EpsSign::Negative;
  if (!cache_path.empty()) config.cache_path = cache_path;
  if (const char* env = std::getenv("QUADRIC_MODULI_CACHE"); env && *env) config.cache_path = env;
  config.output = json ? Output::Json : Output::Table;
#ifdef QUADRIC_GOLDEN_DIR
  config.golden_dir = QUADRIC_GOLDEN_DIR;
#endif
  if (!tab.golden.empty()) config.golden_dir = tab.golden;

  try {
    if (classify->parsed()) {
      KClass v = parse_kclass(char_text);
      long need = v.rank() > 1 ? to_long(v.rank()) : 1;
      ExceptionalCache cache = obtain_cache(config, need);
      PicardReport rep = classify_picard(v, cache);
      if (config.output == Output::Json)
        out << to_json(rep).dump() << "\n";
      else
        print_report_table(rep, out);
      return 0;
    }

    if (dlp->parsed()) {
      Integer r = parse_integer(rank_text);
      if (r < 1) throw Error(ErrorCode::NotPositiveRank, "--r must be positive");
      auto nu_v = rational_list(nu_text, 2, "--nu");
      Slope nu{nu_v[0], nu_v[1]};
      ExceptionalCache cache = obtain_cache(config, to_long(r) - 1);
      auto s = sup(r, nu, cache);
      Json assoc = Json::array();
      for (const auto& e : sup_attained_by(r, nu, cache)) assoc.push_back(to_json(e.cls));
      Json j{{"sup", s ? to_json(*s) : Json(nullptr)}, {"associated", assoc}};
      if (cross_check) {
        Rational m = config.margin;
        SlopeBox box{nu.e - m, nu.e + m, nu.f - m, nu.f + m};
        std::optional<Rational> brute;
        for (const auto& e : cache.records_in(box, to_long(r) - 1)) {
          if (e.rank() >= r) continue;
          if (auto b = branch(e, nu, cache.eps_sign()); b && (!brute || b->value > *brute)) brute = b->value;
        }
        j["cross_check"] = Json{{"margin", config.margin}, {"agrees", brute == s}};
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (dlp_grid->parsed()) {
      Integer r = parse_integer(rank_text);
      if (r < 1) throw Error(ErrorCode::NotPositiveRank, "--r must be positive");
      Integer den = parse_integer(den_text);
      if (den < 1) throw Error(ErrorCode::BadInterval, "--den must be positive");
      SlopeBox box = parse_box(box_text);
      ExceptionalCache cache = obtain_cache(config, to_long(r) - 1);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open " + out_path);
        sink = &file;
      }
      *sink << "eps,phi,dlp_exact,dlp_float\n";
      for (const auto& pt : grid(r, box, den, cache)) {
        *sink << to_string(pt.nu.e) << "," << to_string(pt.nu.f) << ",";
        if (pt.value)
          *sink << to_string(*pt.value) << "," << format_float(*pt.value, config.float_digits) << "\n";
        else
          *sink << "-inf,-inf\n";
      }
      return 0;
    }

    if (exceptionals->parsed()) {
      ExceptionalCache cache = obtain_cache(config, max_rank);
      SlopeBox box = box_text.empty() ? SlopeBox{0, 1, 0, 1} : parse_box(box_text);
      auto recs = cache.records_in(box, max_rank);
      if (config.output == Output::Json) {
        ExceptionalCache shown = cache;
        shown.set_box(box);
        Json j = cache_to_json(shown);
        j["max_rank"] = max_rank;
        Json rj = Json::array();
        for (const auto& r : recs) rj.push_back(to_json(r.cls));
        j["records"] = rj;
        out << j.dump() << "\n";
      } else {
        out << "# (r,nu,Delta) chi\n";
        for (const auto& r : recs) out << rnd_string(r.cls) << " " << to_string(r.cls.chi()) << "\n";
      }
      return 0;
    }

    if (gaeta->parsed()) {
      KClass v = parse_kclass(char_text);
      std::vector<GaetaExponents> found;
      if (!l_text.empty()) {
        auto [p, q] = parse_line_bundle(l_text);
        found.push_back(dual_form ? dual_gaeta_exponents(v, p, q) : gaeta_exponents(v, p, q));
      } else if (all) {
        found = all_gaeta(v, dual_form);
        if (found.empty()) throw Error(ErrorCode::SearchExhausted, "no Gaeta resolution in the search range");
      } else {
        found.push_back(find_gaeta(v, dual_form));
      }
      Json list = Json::array();
      for (const auto& g : found) {
        Json gj = to_json(g);
        gj["ebasis"] = ebasis_json(to_ebasis(v, g.p, g.q));
        list.push_back(gj);
      }
      out << Json{{"char", to_json(v)}, {"gaeta", list}}.dump() << "\n";
      return 0;
    }

    if (donaldson->parsed()) {
      KClass v = parse_kclass(char_text);
      KClass u = parse_raw_class(u_text);
      GaetaExponents g;
      if (!l_text.empty()) {
        auto [p, q] = parse_line_bundle(l_text);
        g = gaeta_exponents(v, p, q);
      } else {
        g = find_gaeta(v);
      }
      ExceptionalCache cache = obtain_cache(config, to_long(v.rank()));
      CharVector lam = lambda_character(u, g);
      Json basis = Json::array();
      for (const auto& b : vperp_basis(v)) basis.push_back(to_json(b));
      Json assoc = Json::array();
      if (exists_semistable(v, cache)) {
        for (const auto& e : position(v, cache).associated) {
          Json ej{{"E", to_json(e.cls)}};
          try {
            ej["kernel_class"] = to_json(kernel_class(e.cls, v, cache.eps_sign()));
          } catch (const Error& ex) {
            ej["kernel_class"] = Json{{"error", std::string(to_string(ex.code()))}};
          }
          try {
            EtaF eta = eta_f(e.cls, v, g, cache.eps_sign());
            Json w = Json::array();
            for (const auto& x : eta.weighted) w.push_back(to_json(x));
            ej["eta_f"] = Json{{"character", to_json(eta.character)}, {"weighted", w}};
          } catch (const Error& ex) {
            ej["eta_f"] = Json{{"error", std::string(to_string(ex.code()))}};
          }
          assoc.push_back(ej);
        }
      }
      Json j{{"char", to_json(v)},
             {"gaeta", to_json(g)},
             {"u", to_json(u)},
             {"ebasis", ebasis_json(to_ebasis(u, g.p, g.q))},
             {"lambda", to_json(lam)},
             {"in_vperp", euler_tensor(v, u) == 0},
             {"in_char_group", lam.on_scalar_quotient()},
             {"vperp_basis", basis},
             {"associated", assoc},
             {"notes", Json::array({kFirstTermNote})}};
      out << j.dump() << "\n";
      return 0;
    }

    if (bad_scan_cmd->parsed()) {
      BadScanOptions opts;
      std::tie(opts.rank_lo, opts.rank_hi) = parse_ranks(ranks_text);
      opts.box = parse_box(box_text);
      if (!window_text.empty()) opts.delta_window = parse_interval(window_text, "--delta-window");
      ExceptionalCache cache = obtain_cache(config, opts.rank_hi);
      auto entries = bad_scan(opts, cache);
      if (config.output == Output::Json) {
        Json j = Json::array();
        for (const auto& e : entries) {
          Json ws = Json::array();
          for (const auto& w : e.witnesses) ws.push_back(to_json(w));
          j.push_back(Json{{"char", to_json(e.v)},
                           {"nu", to_json(e.v.slope())},
                           {"delta", to_json(e.v.discriminant())},
                           {"witnesses", ws}});
        }
        out << j.dump() << "\n";
      } else {
        out << "# rank nu Delta k\n";
        for (const auto& e : entries) {
          out << to_string(e.v.rank()) << " " << format_slope(e.v.slope()) << " " << to_string(e.v.discriminant());
          for (const auto& w : e.witnesses) out << " " << to_string(w.k);
          out << "\n";
        }
      }
      return 0;
    }

    if (walls_cmd->parsed()) {
      Integer r = parse_integer(rank_text);
      Rational delta = parse_rational(delta_text);
      auto [lo, hi] = parse_interval(window_text, "--window");
      Json j = Json::array();
      for (const auto& w : walls(r, delta, lo, hi))
        j.push_back(Json{{"xi", Json::array({to_json(w.x), to_json(w.y)})}, {"m", to_json(w.m)}});
      out << j.dump() << "\n";
      return 0;
    }

    if (tables_cmd->parsed()) {
      std::vector<std::string> names;
      for (const char* n : {"wk", "pairs", "r2"})
        if (tab.which == "all" || tab.which == n) names.push_back(n);
      long need = 12;
      if (std::find(names.begin(), names.end(), "pairs") != names.end()) need = std::max(need, 2 * tab.max_pair_rank);
      ExceptionalCache cache = obtain_cache(config, need);
      Json report = Json::object();
      std::vector<std::string> mismatched;
      for (const auto& name : names) {
        std::string table = name == "wk"      ? wk_table(cache)
                            : name == "pairs" ? pair_table(tab.max_pair_rank, cache)
                                              : r2_table(cache);
        std::optional<bool> match;
        if (!config.golden_dir.empty()) {
          std::string expected = read_file(config.golden_dir + "/" + name + ".txt");
          match = lines_of(table) == golden_lines(name, expected, tab.max_pair_rank);
          if (!*match) mismatched.push_back(name);
        }
        if (config.output == Output::Json) {
          report[name] = Json{{"table", lines_of(table)}, {"match", match ? Json(*match) : Json(nullptr)}};
        } else {
          out << "## " << name << "\n" << table;
          if (match) out << "## " << name << ": " << (*match ? "match" : "MISMATCH") << "\n";
        }
      }
      if (config.output == Output::Json) out << report.dump() << "\n";
      if (!mismatched.empty()) {
        std::string list;
        for (const auto& m : mismatched) list += (list.empty() ? "" : ",") + m;
        throw Error(ErrorCode::TableMismatch, "tables differ from golden files: " + list);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}}.dump() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace quadric::cli
