#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "quadric/classify.hpp"
#include "quadric/donaldson.hpp"

namespace quadric {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);  // "p/q"
Json to_json(const KClass& v);    // {"r":..,"c1":[..,..],"chi":..}
Json to_json(const Slope& nu);
Json to_json(const BadWitness& w);
Json to_json(const DlpPosition& p);
Json to_json(const PicardReport& rep);
Json to_json(const GaetaExponents& g);
Json to_json(const CharVector& c);
Json to_json(const Stratum& s);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
KClass kclass_from_json(const Json& j);

// Either the JSON form or "r nu_e nu_f delta" with rationals written p/q.
KClass parse_kclass(const std::string& text);

// Cache file: {"version":1,"eps_sign":s,"max_rank":R,"box":[[e_lo,e_hi],[f_lo,f_hi]],"records":[...]}
Json cache_to_json(const ExceptionalCache& cache);
ExceptionalCache cache_from_json(const Json& j);

// Reads a cache file; nullopt when it is missing. Throws InvalidCache on malformed content.
std::optional<ExceptionalCache> load_cache(const std::string& path);
// Writes to a temporary file next to `path` and renames it over, under an advisory lock.
void save_cache(const std::string& path, const ExceptionalCache& cache);

}  // namespace quadric
