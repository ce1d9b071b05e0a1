#include "pisl/series/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#ifndef PISL_DEFAULT_DATA_DIR
#define PISL_DEFAULT_DATA_DIR "data"
#endif

namespace pisl::series {

BigInt json_integer(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigRational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw std::invalid_argument("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

BigRational json_rational(const Json& j) {
  if (j.is_number_integer()) return BigRational(json_integer(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

namespace {
const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}
}  // namespace

TermKind term_kind_from_json(const Json& j) {
  const std::string name = field(j, "name").get<std::string>();
  if (name == "W") return KindW{json_rational(field(j, "x"))};
  if (name == "F4") return KindF4{};
  if (name == "B2k_TT") {
    return KindB2kTT{json_integer(field(j, "b1")), json_integer(field(j, "c1")), json_integer(field(j, "b2")),
                     json_integer(field(j, "c2"))};
  }
  if (name == "B2k2_T") return KindB2k2T{json_integer(field(j, "b")), json_integer(field(j, "c"))};
  if (name == "B2k_F") return KindB2kF{json_rational(field(j, "x"))};
  if (name == "F_only") return KindFOnly{json_rational(field(j, "x"))};
  if (name == "B2n_conv_recip") {
    BigRational x = json_rational(field(j, "x"));
    return KindRecip{x};
  }
  if (name == "B2n_conv12") return KindConv12{json_rational(field(j, "y"))};
  if (name == "S_poly") return KindS{json_rational(field(j, "y"))};
  throw std::invalid_argument("unknown term kind '" + name + "'");
}

Json to_json(const TermKind& kind) {
  Json j;
  j["name"] = kind_name(kind);
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, KindW> || std::is_same_v<K, KindB2kF> || std::is_same_v<K, KindFOnly> ||
                      std::is_same_v<K, KindRecip>) {
          j["x"] = to_string(k.x);
        } else if constexpr (std::is_same_v<K, KindConv12> || std::is_same_v<K, KindS>) {
          j["y"] = to_string(k.y);
        } else if constexpr (std::is_same_v<K, KindB2kTT>) {
          j["b1"] = to_string(k.b1);
          j["c1"] = to_string(k.c1);
          j["b2"] = to_string(k.b2);
          j["c2"] = to_string(k.c2);
        } else if constexpr (std::is_same_v<K, KindB2k2T>) {
          j["b"] = to_string(k.b);
          j["c"] = to_string(k.c);
        }
      },
      kind);
  return j;
}

SeriesEntry entry_from_json(const Json& j) {
  std::string id = j.is_object() && j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "?";
  try {
    SeriesEntry e;
    e.id = field(j, "id").get<std::string>();
    e.status = parse_status(field(j, "status").get<std::string>());
    e.a = json_integer(field(j, "a"));
    e.b = json_integer(field(j, "b"));
    e.base = json_rational(field(j, "base"));
    if (e.base == 0) throw std::invalid_argument("base must be nonzero");
    e.term = term_kind_from_json(field(j, "term_kind"));
    e.rhs = parse_expr(field(j, "rhs").get<std::string>());
    e.tag = j.value("paper_tag", "");
    return e;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument("registry entry " + id + ": " + err.what());
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument("registry entry " + id + ": " + err.what());
  }
}

Json to_json(const SeriesEntry& e) {
  return Json{{"id", e.id},
              {"status", status_name(e.status)},
              {"a", to_string(e.a)},
              {"b", to_string(e.b)},
              {"base", to_string(e.base)},
              {"term_kind", to_json(e.term)},
              {"rhs", format_expr(e.rhs)},
              {"paper_tag", e.tag}};
}

std::vector<SeriesEntry> parse_registry(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("registry: expected a JSON array");
  std::vector<SeriesEntry> out;
  std::set<std::string> seen;
  for (const auto& item : j) {
    out.push_back(entry_from_json(item));
    if (!seen.insert(out.back().id).second) throw std::invalid_argument("registry: duplicate id " + out.back().id);
  }
  return out;
}

std::vector<SeriesEntry> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("registry: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument("registry: " + path + ": " + err.what());
  }
  return parse_registry(j);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("PI_SERIES_LAB_DATA"); env && *env) return env;
  return PISL_DEFAULT_DATA_DIR;
}

std::string default_registry_path() { return default_data_dir() + "/registry.json"; }

const SeriesEntry* find_entry(const std::vector<SeriesEntry>& reg, const std::string& id) {
  for (const auto& e : reg) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Json to_json(const VerifyReport& r) {
  return Json{{"id", r.id},
              {"digits", r.digits},
              {"terms", r.terms},
              {"sum", r.sum.to_string(r.digits + 5)},
              {"rhs", r.rhs.to_string(r.digits + 5)},
              {"tail_bound", r.tail.to_string(6)},
              {"abs_diff", r.diff.to_string(6)},
              {"pass", r.pass}};
}

}  // namespace pisl::series
