#include "eisen/cli/cache.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/util/sha256.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace eisen {

namespace {

const char* kModule = "cli";

using nlohmann::json;

std::string rational_string(const BigRational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x) << "/" << boost::multiprecision::denominator(x);
  return os.str();
}

BigRational rational_from(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw Error(ErrorCode::CacheError, kModule, "bad rational " + s);
  return BigRational(from_decimal(s.substr(0, slash)), from_decimal(s.substr(slash + 1)));
}

const char* kind_name(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::TwoTerm: return "two";
    case Relation::Kind::ThreeTerm: return "three";
    case Relation::Kind::SignStar: return "star";
  }
  return "?";
}

Relation::Kind kind_from(const std::string& s) {
  if (s == "two") return Relation::Kind::TwoTerm;
  if (s == "three") return Relation::Kind::ThreeTerm;
  if (s == "star") return Relation::Kind::SignStar;
  throw Error(ErrorCode::CacheError, kModule, "bad relation kind " + s);
}

template <class E>
E enum_from(const std::string& s, std::initializer_list<std::pair<const char*, E>> table) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  throw Error(ErrorCode::CacheError, kModule, "bad option value " + s);
}

json options_to_json(const SpaceOptions& o) {
  json j;
  j["curve"] = curve_name(o.curve);
  j["relative_to"] = relative_name(o.relative_to);
  j["sign"] = sign_name(o.sign);
  j["modulus"] = o.modulus ? json(std::to_string(*o.modulus)) : json(nullptr);
  return j;
}

SpaceOptions options_from_json(const json& j) {
  SpaceOptions o;
  o.curve = enum_from<Curve>(j.at("curve").get<std::string>(), {{"X0", Curve::X0}, {"X1", Curve::X1}});
  o.relative_to = enum_from<RelativeTo>(j.at("relative_to").get<std::string>(),
                                        {{"none", RelativeTo::None},
                                         {"all", RelativeTo::AllCusps},
                                         {"cinf", RelativeTo::CInfinity},
                                         {"czero", RelativeTo::CZero}});
  o.sign = enum_from<Sign>(j.at("sign").get<std::string>(),
                           {{"none", Sign::None}, {"plus", Sign::Plus}, {"minus", Sign::Minus}});
  if (!j.at("modulus").is_null()) o.modulus = std::stoll(j.at("modulus").get<std::string>());
  return o;
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["modulus"] = m.is_modular() ? json(to_decimal(*m.modulus())) : json(nullptr);
  json entries = json::array();
  for (const BigInt& x : m.flatten()) entries.push_back(to_decimal(x));
  j["entries"] = entries;
  return j;
}

IntMatrix matrix_from_json(const json& j) {
  const std::size_t r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
  IntVector v;
  for (const auto& e : j.at("entries")) v.push_back(from_decimal(e.get<std::string>()));
  if (v.size() != r * c) throw Error(ErrorCode::CacheError, kModule, "matrix entry count mismatch");
  std::optional<BigInt> m;
  if (!j.at("modulus").is_null()) m = from_decimal(j.at("modulus").get<std::string>());
  return IntMatrix::unflatten(v, r, c, m);
}

json presentation_to_json(const PresentationData& d) {
  json j;
  j["N"] = d.N;
  j["options"] = options_to_json(d.options);
  json gens = json::array();
  for (const ManinSymbol& s : d.generators) gens.push_back({s.u, s.v});
  j["generators"] = gens;
  json rels = json::array();
  for (const Relation& r : d.relations) {
    json terms = json::array();
    for (const auto& [i, c] : r.terms) terms.push_back({std::to_string(i), std::to_string(c)});
    rels.push_back({{"kind", kind_name(r.kind)}, {"terms", terms}});
  }
  j["relations"] = rels;
  j["free_generators"] = d.free_generators;
  json lif = json::array();
  for (const auto& row : d.lattice_in_free) {
    json jr = json::array();
    for (const BigRational& x : row) jr.push_back(rational_string(x));
    lif.push_back(jr);
  }
  j["lattice_in_free"] = lif;
  j["generator_coordinates"] = matrix_to_json(d.generator_coordinates);
  j["boundary"] = matrix_to_json(d.boundary);
  j["basis"] = matrix_to_json(d.basis);
  return j;
}

PresentationData presentation_from_json(const json& j) {
  PresentationData d;
  d.N = j.at("N").get<int64_t>();
  d.options = options_from_json(j.at("options"));
  for (const auto& g : j.at("generators")) {
    ManinSymbol s = make_symbol(d.options.curve, d.N, g.at(0).get<int64_t>(), g.at(1).get<int64_t>());
    d.generators.push_back(s);
  }
  if (d.generators != manin_generators(d.options.curve, d.N))
    throw Error(ErrorCode::CacheError, kModule, "generator list differs from the canonical ordering");
  for (const auto& r : j.at("relations")) {
    Relation rel{kind_from(r.at("kind").get<std::string>()), {}};
    for (const auto& t : r.at("terms"))
      rel.terms.emplace_back(std::stoull(t.at(0).get<std::string>()), std::stoll(t.at(1).get<std::string>()));
    d.relations.push_back(rel);
  }
  d.free_generators = j.at("free_generators").get<std::vector<std::size_t>>();
  for (const auto& row : j.at("lattice_in_free")) {
    std::vector<BigRational> r;
    for (const auto& x : row) r.push_back(rational_from(x.get<std::string>()));
    d.lattice_in_free.push_back(r);
  }
  d.generator_coordinates = matrix_from_json(j.at("generator_coordinates"));
  d.boundary = matrix_from_json(j.at("boundary"));
  d.basis = matrix_from_json(j.at("basis"));
  return d;
}

std::string cache_key(int64_t N, const SpaceOptions& opts) {
  return "eisen-cache/v" + std::to_string(kCacheSchema) + "/N=" + std::to_string(N) + "/" + opts.key();
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key) {
  return dir / (sha256_hex(key) + ".json");
}

json cache_entry_to_json(const CacheEntry& e) {
  json j;
  j["schema"] = e.schema;
  j["key"] = e.key;
  j["presentation"] = presentation_to_json(e.data);
  json ops = json::object();
  for (const auto& [label, m] : e.operators) ops[label] = matrix_to_json(m);
  j["operators"] = ops;
  return j;
}

CacheEntry cache_entry_from_json(const json& j) {
  CacheEntry e;
  e.schema = j.at("schema").get<int>();
  if (e.schema != kCacheSchema) throw Error(ErrorCode::CacheError, kModule, "unsupported cache schema");
  e.key = j.at("key").get<std::string>();
  e.data = presentation_from_json(j.at("presentation"));
  for (const auto& [label, m] : j.at("operators").items()) e.operators[label] = matrix_from_json(m);
  return e;
}

void save_cache(const std::filesystem::path& dir, const CacheEntry& e) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = cache_path(dir, e.key);
  const std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::CacheError, kModule, "cannot write " + tmp.string());
    out << cache_entry_to_json(e).dump() << '\n';
    if (!out) throw Error(ErrorCode::CacheError, kModule, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::optional<CacheEntry> load_cache(const std::filesystem::path& dir, const std::string& key) {
  const std::filesystem::path path = cache_path(dir, key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::CacheError, kModule, path.string() + ": " + ex.what());
  }
  CacheEntry e;
  try {
    e = cache_entry_from_json(j);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::CacheError, kModule, path.string() + ": " + ex.what());
  }
  if (e.key != key) throw Error(ErrorCode::CacheError, kModule, "cache file holds another key");
  return e;
}

}  // namespace eisen
