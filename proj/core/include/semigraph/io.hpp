#pragma once

#include <string>
#include <variant>
#include <vector>

#include "semigraph/product.hpp"
#include "semigraph/theory.hpp"

namespace semigraph::io {

// Semiring file: { "order": q, "labels": [..optional..], "add": [[..]xq],
// "mul": [[..]xq] }. Loaded tables are re-indexed so the identities sit at
// 0 and 1.
SemiringTable parse_semiring(const std::string& text, const std::string& origin);
SemiringTable load_semiring(const std::string& path);

std::string serialize_semiring(const SemiringTable& t);

// Product file: { "factors": [ <inline semiring> | "catalog:NAME" |
// "file:PATH", ... ] }; file: paths resolve relative to the referencing file.
ProductSemiring load_product(const std::string& path);

// Campaign file: a JSON array of product objects, each optionally named.
std::vector<CampaignEntry> load_campaign(const std::string& path);

// Accepts a semiring file, a product file, or a "catalog:NAME" string.
using LoadedInput = std::variant<SemiringTable, ProductSemiring>;
LoadedInput load_input(const std::string& spec);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace semigraph::io
