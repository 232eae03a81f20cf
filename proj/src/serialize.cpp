#include <kgenus/number_theory.hpp>
#include <kgenus/serialize.hpp>

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace kgenus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_prime_key(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid prime '" + std::string(text) + "'");
  return value;
}

void insert_exception(std::map<std::uint64_t, Sign>& m, std::uint64_t p, Sign s) {
  const auto [it, inserted] = m.emplace(p, s);
  if (!inserted && it->second != s)
    throw std::invalid_argument("conflicting signs for prime " + std::to_string(p));
}

Json sign_map(const std::map<std::uint64_t, Sign>& m) {
  Json j = Json::object();
  for (const auto& [p, s] : m) j[std::to_string(p)] = to_string(s);
  return j;
}

}  // namespace

Json to_json(const RectorInvariant& genus) {
  return Json{{"default", to_string(genus.default_sign())}, {"exceptions", sign_map(genus.exceptions())}};
}

Json to_json(const Verdict& v) {
  Json j;
  j["degree"] = v.degree;
  j["outcome"] = v.outcome == Outcome::admissible ? "Admissible" : "Obstructed";
  if (v.obstruction) {
    j["prime"] = v.obstruction->prime;
    j["required"] = to_string(v.obstruction->required);
    j["actual"] = to_string(v.obstruction->actual);
  } else {
    j["prime"] = nullptr;
    j["required"] = nullptr;
    j["actual"] = nullptr;
  }
  j["tested"] = v.tested;
  j["skipped"] = v.skipped;
  return j;
}

Json to_json(const ForcedGenusReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["bound"] = r.bound;
  j["forced"] = sign_map(r.forced);
  j["free"] = r.free;
  j["free_count_total"] = r.free_count_total;
  j["max_surviving_genus_points"] = r.max_surviving();
  return j;
}

Json to_json(const XpExample& e) {
  return Json{{"prime", e.prime}, {"genus", to_json(e.genus)}, {"witness", e.witness}};
}

RectorInvariant genus_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("genus must be a JSON object");
    for (const auto& [key, _] : j.items())
      if (key != "default" && key != "exceptions")
        throw std::invalid_argument("unknown genus field '" + key + "'");
    const Sign def = j.contains("default") ? parse_sign(j.at("default").get<std::string>()) : Sign::plus;
    std::map<std::uint64_t, Sign> exceptions;
    if (j.contains("exceptions")) {
      const auto& ex = j.at("exceptions");
      if (!ex.is_object()) throw std::invalid_argument("genus exceptions must be a JSON object");
      for (const auto& [key, value] : ex.items())
        insert_exception(exceptions, parse_prime_key(key), parse_sign(value.get<std::string>()));
    }
    return RectorInvariant(def, std::move(exceptions));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed genus JSON: ") + e.what());
  }
}

RectorInvariant parse_genus_spec(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed genus JSON: ") + e.what());
    }
    return genus_from_json(j);
  }

  std::optional<Sign> def;
  std::map<std::uint64_t, Sign> exceptions;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto section = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (section.empty()) continue;

    if (section.starts_with("default")) {
      const auto eq = section.find('=');
      if (eq == std::string_view::npos || trim(section.substr(0, eq)) != "default")
        throw std::invalid_argument("expected 'default=+1' or 'default=-1', got '" + std::string(section) + "'");
      if (def) throw std::invalid_argument("default given twice");
      def = parse_sign(trim(section.substr(eq + 1)));
      continue;
    }

    auto entries = section;
    while (!entries.empty()) {
      const auto comma = entries.find(',');
      const auto entry = trim(entries.substr(0, comma));
      entries = comma == std::string_view::npos ? std::string_view{} : entries.substr(comma + 1);
      const auto colon = entry.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("expected 'prime:sign', got '" + std::string(entry) + "'");
      insert_exception(exceptions, parse_prime_key(entry.substr(0, colon)), parse_sign(trim(entry.substr(colon + 1))));
    }
  }
  return RectorInvariant(def.value_or(Sign::plus), std::move(exceptions));
}

std::string format_genus_spec(const RectorInvariant& genus) {
  std::string out;
  for (const auto& [p, s] : genus.exceptions()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p) + ':' + to_string(s);
  }
  if (!out.empty()) out += ';';
  return out + "default=" + to_string(genus.default_sign());
}

Json coefficient_json(const Coefficient& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

}  // namespace kgenus
