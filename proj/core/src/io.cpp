#include "semigraph/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semigraph::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw FormatError(origin + ": " + what);
}

int expect_int(const json& j, const std::string& origin, const std::string& where) {
  if (!j.is_number_integer()) fail(origin, where + " is not an integer");
  return j.get<int>();
}

std::vector<std::vector<int>> expect_table(const json& j, const std::string& origin,
                                           const std::string& name) {
  if (!j.is_array()) fail(origin, name + " is not an array");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    const std::string rowname = name + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(origin, rowname + " is not an array");
    std::vector<int> r;
    r.reserve(row.size());
    for (size_t k = 0; k < row.size(); ++k)
      r.push_back(expect_int(row[k], origin, rowname + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(r));
  }
  return out;
}

SemiringTable semiring_from_json(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "semiring must be a JSON object");
  if (!j.contains("order")) fail(origin, "missing \"order\"");
  if (!j.contains("add")) fail(origin, "missing \"add\"");
  if (!j.contains("mul")) fail(origin, "missing \"mul\"");

  SemiringTable t;
  t.order = expect_int(j.at("order"), origin, "order");
  t.add = expect_table(j.at("add"), origin, "add");
  t.mul = expect_table(j.at("mul"), origin, "mul");
  if (j.contains("labels")) {
    const auto& ls = j.at("labels");
    if (!ls.is_array()) fail(origin, "labels is not an array");
    for (size_t i = 0; i < ls.size(); ++i) {
      if (!ls[i].is_string()) fail(origin, "labels[" + std::to_string(i) + "] is not a string");
      t.labels.push_back(ls[i].get<std::string>());
    }
  }
  try {
    return normalize_identities(std::move(t));
  } catch (const FormatError& e) {
    fail(origin, e.what());
  }
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
}

SemiringTable factor_from_json(const json& j, const std::string& origin,
                               const std::filesystem::path& base, size_t index);

ProductSemiring product_from_json(const json& j, const std::string& origin,
                                  const std::filesystem::path& base) {
  if (!j.is_object() || !j.contains("factors")) fail(origin, "missing \"factors\"");
  const auto& fs = j.at("factors");
  if (!fs.is_array()) fail(origin, "\"factors\" is not an array");
  if (fs.empty()) fail(origin, "\"factors\" is empty");
  std::vector<SemiringTable> factors;
  factors.reserve(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) factors.push_back(factor_from_json(fs[i], origin, base, i));
  return direct_product(std::move(factors));
}

SemiringTable factor_from_json(const json& j, const std::string& origin,
                               const std::filesystem::path& base, size_t index) {
  const std::string where = "factors[" + std::to_string(index) + "]";
  if (j.is_object()) return semiring_from_json(j, origin + ": " + where);
  if (!j.is_string()) fail(origin, where + " must be an object or a string");
  const auto s = j.get<std::string>();
  if (s.rfind("catalog:", 0) == 0) {
    try {
      return catalog(s.substr(8));
    } catch (const FormatError& e) {
      fail(origin, where + ": " + e.what());
    }
  }
  if (s.rfind("file:", 0) == 0) {
    const std::filesystem::path ref = base / s.substr(5);
    return load_semiring(ref.string());
  }
  fail(origin, where + " must be an inline semiring, \"catalog:NAME\", or \"file:PATH\"");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot open for writing");
  out << content;
  if (!out) throw FormatError(path + ": write failed");
}

SemiringTable parse_semiring(const std::string& text, const std::string& origin) {
  return semiring_from_json(parse_text(text, origin), origin);
}

SemiringTable load_semiring(const std::string& path) {
  return parse_semiring(read_file(path), path);
}

std::string serialize_semiring(const SemiringTable& t) {
  ordered_json j;
  j["order"] = t.order;
  if (!t.labels.empty()) j["labels"] = t.labels;
  j["add"] = t.add;
  j["mul"] = t.mul;
  return j.dump(2) + "\n";
}

ProductSemiring load_product(const std::string& path) {
  const auto j = parse_text(read_file(path), path);
  return product_from_json(j, path, std::filesystem::path(path).parent_path());
}

std::vector<CampaignEntry> load_campaign(const std::string& path) {
  const auto j = parse_text(read_file(path), path);
  if (!j.is_array()) fail(path, "campaign must be a JSON array of products");
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<CampaignEntry> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string where = "entry " + std::to_string(i);
    const auto& pj = j[i];
    if (!pj.is_object()) fail(path, where + " is not a product object");
    CampaignEntry entry;
    if (pj.contains("name")) {
      if (!pj.at("name").is_string()) fail(path, where + ": \"name\" is not a string");
      entry.name = pj.at("name").get<std::string>();
    } else {
      entry.name = "product-" + std::to_string(i);
    }
    entry.factors = product_from_json(pj, path + ": " + where, base).factors();
    out.push_back(std::move(entry));
  }
  return out;
}

LoadedInput load_input(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog(spec.substr(8));
  const auto j = parse_text(read_file(spec), spec);
  if (j.is_object() && j.contains("factors"))
    return product_from_json(j, spec, std::filesystem::path(spec).parent_path());
  return semiring_from_json(j, spec);
}

}  // namespace semigraph::io
