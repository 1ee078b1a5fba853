#include "beepid/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace beepid {
namespace {

using nlohmann::json;

enum class Kind { kUnsigned, kReal, kBool, kUnsignedList, kRealList };

struct Field {
  Kind kind;
  std::function<void(SimConfig&, const json&)> set;
  std::function<json(const SimConfig&)> get;
};

std::uint64_t as_unsigned(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ConfigError("key '" + key + "' expects a non-negative integer");
}

double as_real(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("key '" + key + "' expects a number");
  return v.get<double>();
}

bool as_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError("key '" + key + "' expects true or false");
  return v.get<bool>();
}

template <class T, class Conv>
std::vector<T> as_list(const json& v, const std::string& key, Conv conv) {
  std::vector<T> out;
  if (v.is_array()) {
    for (const json& item : v) out.push_back(conv(item, key));
  } else {
    out.push_back(conv(v, key));
  }
  if (out.empty()) throw ConfigError("key '" + key + "' expects a non-empty list");
  return out;
}

#define UNSIGNED_FIELD(name, member)                                                     \
  {                                                                                      \
    name, Field {                                                                        \
      Kind::kUnsigned, [](SimConfig& c, const json& v) { c.member = as_unsigned(v, name); }, \
          [](const SimConfig& c) { return json(c.member); }                              \
    }                                                                                    \
  }
#define REAL_FIELD(name, member)                                                   \
  {                                                                                \
    name, Field {                                                                  \
      Kind::kReal, [](SimConfig& c, const json& v) { c.member = as_real(v, name); }, \
          [](const SimConfig& c) { return json(c.member); }                        \
    }                                                                              \
  }

const std::map<std::string, Field>& schema() {
  static const std::map<std::string, Field> fields = {
      UNSIGNED_FIELD("runs", runs),
      REAL_FIELD("sim_length_s", sim_length_s),
      REAL_FIELD("slot_s", slot_s),
      {"period_ms",
       {Kind::kUnsignedList,
        [](SimConfig& c, const json& v) {
          c.period_ms = as_list<std::uint64_t>(v, "period_ms", as_unsigned);
        },
        [](const SimConfig& c) { return json(c.period_ms); }}},
      UNSIGNED_FIELD("n_nodes", n_nodes),
      UNSIGNED_FIELD("n_active", n_active),
      {"p",
       {Kind::kRealList,
        [](SimConfig& c, const json& v) { c.p = as_list<double>(v, "p", as_real); },
        [](const SimConfig& c) { return json(c.p); }}},
      {"interference_rate",
       {Kind::kRealList,
        [](SimConfig& c, const json& v) {
          c.interference_rate = as_list<double>(v, "interference_rate", as_real);
        },
        [](const SimConfig& c) { return json(c.interference_rate); }}},
      UNSIGNED_FIELD("filter_len", filter_len),
      {"ideal_channel",
       {Kind::kBool,
        [](SimConfig& c, const json& v) { c.ideal_channel = as_bool(v, "ideal_channel"); },
        [](const SimConfig& c) { return json(c.ideal_channel); }}},
      UNSIGNED_FIELD("master_seed", master_seed),
      REAL_FIELD("tx_power_dbm", channel.tx_power_dbm),
      REAL_FIELD("sensitivity_dbm", channel.sensitivity_dbm),
      REAL_FIELD("shadow_std_db", channel.shadow_std_db),
      REAL_FIELD("carrier_hz", channel.carrier_hz),
      REAL_FIELD("pathloss_exponent", channel.pathloss_exponent),
      REAL_FIELD("pathloss_ref_db", channel.pathloss_ref_db),
      REAL_FIELD("area_m", channel.area_m),
      REAL_FIELD("velocity_kmph", channel.velocity_kmph),
  };
  return fields;
}

#undef UNSIGNED_FIELD
#undef REAL_FIELD

const Field& lookup(const std::string& key) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

json parse_unsigned_text(std::string_view text, const std::string& key) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ConfigError("override '" + key + "' expects a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return json(value);
}

json parse_real_text(std::string_view text, const std::string& key) {
  // from_chars for double is missing from older libstdc++; strtod on a copy.
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw ConfigError("override '" + key + "' expects a number, got '" + copy + "'");
  }
  return json(value);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

SimConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SimConfig cfg;
  for (const auto& [key, value] : doc.items()) lookup(key).set(cfg, value);
  return cfg;
}

json config_to_json(const SimConfig& cfg) {
  json doc = json::object();
  for (const auto& [key, field] : schema()) doc[key] = field.get(cfg);
  return doc;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed config '" + path.string() + "': " + e.what());
  }
  return config_from_json(doc);
}

void apply_override(SimConfig& cfg, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("override must look like key=value, got '" + std::string(assignment) + "'");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string_view text = assignment.substr(eq + 1);
  const Field& field = lookup(key);

  json value;
  switch (field.kind) {
    case Kind::kUnsigned:
      value = parse_unsigned_text(text, key);
      break;
    case Kind::kReal:
      value = parse_real_text(text, key);
      break;
    case Kind::kBool:
      if (text == "true" || text == "1") {
        value = true;
      } else if (text == "false" || text == "0") {
        value = false;
      } else {
        throw ConfigError("override '" + key + "' expects true or false");
      }
      break;
    case Kind::kUnsignedList:
      value = json::array();
      for (std::string_view part : split_commas(text)) value.push_back(parse_unsigned_text(part, key));
      break;
    case Kind::kRealList:
      value = json::array();
      for (std::string_view part : split_commas(text)) value.push_back(parse_real_text(part, key));
      break;
  }
  field.set(cfg, value);
}

}  // namespace beepid
