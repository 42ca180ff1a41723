// Command line front end: axiom checks, total-graph builds, metric dimension,
// case prediction and the predicted-vs-computed campaign.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "semigraph/graph.hpp"
#include "semigraph/io.hpp"
#include "semigraph/metric_dim.hpp"
#include "semigraph/theory.hpp"

namespace {

using namespace semigraph;

// Exit codes: 0 ok, 1 semantic failure, 2 malformed input, 3 cap exceeded,
// 4 unsupported case.

void set_threads(int threads) {
  if (threads > 0) setenv("SEMIGRAPH_THREADS", std::to_string(threads).c_str(), 1);
}

std::string render_tuple(const SemiringTable& t, const std::vector<int>& xs) {
  std::string out = "(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += t.label(xs[i]);
  }
  return out + ")";
}

SemiringTable to_table(const io::LoadedInput& in, int cap) {
  if (std::holds_alternative<SemiringTable>(in)) return std::get<SemiringTable>(in);
  return materialize(std::get<ProductSemiring>(in), static_cast<std::uint64_t>(cap)).table;
}

ProductSemiring to_product(const io::LoadedInput& in) {
  if (std::holds_alternative<ProductSemiring>(in)) return std::get<ProductSemiring>(in);
  return direct_product({std::get<SemiringTable>(in)});
}

Graph build_graph(const io::LoadedInput& in, bool restricted, int cap) {
  if (std::holds_alternative<SemiringTable>(in))
    return build_total_graph(std::get<SemiringTable>(in), restricted, cap);
  return build_total_graph(std::get<ProductSemiring>(in), restricted,
                           static_cast<std::uint64_t>(cap));
}

std::string witness_labels(const Graph& g, const std::vector<int>& W) {
  std::string out = "[";
  for (size_t i = 0; i < W.size(); ++i) {
    if (i) out += ",";
    out += g.labels[static_cast<size_t>(W[i])];
  }
  return out + "]";
}

int cmd_check(const std::string& input, int cap) {
  const SemiringTable t = to_table(io::load_input(input), cap);
  const AxiomReport report = verify_axioms(t);
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto ax = static_cast<Axiom>(i);
    const AxiomVerdict& v = report.at(ax);
    if (v.pass) {
      std::printf("%-36s ok\n", axiom_name(ax));
    } else {
      std::printf("%-36s FAIL at %s\n", axiom_name(ax),
                  render_tuple(t, v.counterexample).c_str());
    }
  }
  const std::vector<int> zs = zero_divisors(t);
  std::string zset = "{";
  for (size_t i = 0; i < zs.size(); ++i) {
    if (i) zset += ",";
    zset += t.label(zs[i]);
  }
  zset += "}";
  std::printf("order=%d zero_divisors=%s\n", t.order, zset.c_str());
  std::printf("core_semiring=%s admissible=%s\n", report.core_semiring() ? "yes" : "no",
              report.admissible() ? "yes" : "no");
  return report.admissible() ? 0 : 1;
}

int cmd_dim(const std::string& input, bool unrestricted, bool oracle, int threads, int cap) {
  set_threads(threads);
  const Graph g = build_graph(io::load_input(input), !unrestricted, cap);
  const auto start = std::chrono::steady_clock::now();
  const ResolvingSetResult res =
      oracle ? metric_dimension_oracle(g) : metric_dimension_exact(g, cap);
  const auto stop = std::chrono::steady_clock::now();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  std::fprintf(stderr, "time_ms=%lld\n", static_cast<long long>(ms));
  std::printf("dim=%d witness=%s method=%s\n", res.dimension,
              witness_labels(g, res.witness).c_str(), method_name(res.method));
  return 0;
}

int cmd_predict(const std::string& input, bool strict) {
  const ProductSemiring p = to_product(io::load_input(input));
  ClassifyOptions opt;
  opt.strict_haupt2 = strict;
  const CasePrediction c = classify_product(p, opt);
  std::string dim = c.predicted_dim ? std::to_string(*c.predicted_dim) : "?";
  std::printf("case=%s n=%d m=%d n_z=%d |S|=%llu |Z|=%llu dim=%s\n", case_name(c.kind),
              c.n_total, c.m, c.n_z, static_cast<unsigned long long>(c.s_count),
              static_cast<unsigned long long>(c.z_count), dim.c_str());
  const auto z = static_cast<unsigned long long>(c.z_count);
  switch (c.kind) {
    case TheoryCase::Trivial:
      std::printf("formula: |Z|=1 leaves a one-vertex graph, dim=0\n");
      break;
    case TheoryCase::AllBoolean:
      if (c.n_total >= 3)
        std::printf("formula: n>=3 all-Boolean, dim = n = %d\n", c.n_total);
      else
        std::printf("formula: n=2 all-Boolean, dim = 1\n");
      break;
    case TheoryCase::Generic: {
      const unsigned long long pw = 1ull << c.n_total;
      std::printf("formula: |Z| - 2^n + 1 = %llu - %llu + 1 = %s\n", z, pw, dim.c_str());
      break;
    }
    case TheoryCase::Haupt1: {
      const unsigned long long pw = 1ull << (c.m + c.n_z);
      std::printf("formula: |Z| - 2^(m+n_z) + m + 1 = %llu - %llu + %d + 1 = %s\n", z, pw, c.m,
                  dim.c_str());
      break;
    }
    case TheoryCase::Haupt2: {
      const unsigned long long pw = 1ull << (c.m + c.n_z + 1);
      std::printf("formula: |Z| - 2^(m+n_z+1) + 2 = %llu - %llu + 2 = %s\n", z, pw, dim.c_str());
      break;
    }
    case TheoryCase::Unsupported:
      break;
  }
  for (const std::string& note : c.hypothesis_notes) std::printf("note: %s\n", note.c_str());
  return c.kind == TheoryCase::Unsupported ? 4 : 0;
}

int cmd_verify(const std::string& path, bool csv, bool no_oracle, int threads, bool strict) {
  const std::vector<CampaignEntry> entries =
      path.empty() ? default_campaign() : io::load_campaign(path);
  CampaignOptions opt;
  opt.use_oracle = !no_oracle;
  opt.threads = threads;
  opt.classify.strict_haupt2 = strict;
  const CampaignReport report = verify_campaign(entries, opt);
  const std::string out = csv ? render_csv(report) : render_text(report);
  std::fputs(out.c_str(), stdout);
  return report.clean() ? 0 : 1;
}

int cmd_graph(const std::string& input, bool unrestricted, const std::string& dot_path, int cap) {
  const Graph g = build_graph(io::load_input(input), !unrestricted, cap);
  const std::string dot = export_dot(g);
  if (dot_path.empty()) {
    std::fputs(dot.c_str(), stdout);
  } else {
    io::write_file(dot_path, dot);
    std::printf("nodes=%d edges=%zu\n", g.size(), g.edge_count());
  }
  return 0;
}

int cmd_enumerate(int order, const std::string& out_dir, const EnumerationFilters& filters) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  int count = 0;
  enumerate_semirings(order, filters, [&](const SemiringTable& t) {
    if (!out_dir.empty()) {
      char name[64];
      std::snprintf(name, sizeof(name), "semiring-q%d-%03d.json", order, count);
      io::write_file((std::filesystem::path(out_dir) / name).string(), io::serialize_semiring(t));
    }
    ++count;
  });
  std::printf("count=%d\n", count);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"total graphs of finite semirings: axioms, metric dimension, case predictions"};
  app.require_subcommand(1);

  std::string input, campaign_path, dot_path, out_dir;
  bool unrestricted = false, oracle = false, csv = false, no_oracle = false, strict = false;
  bool no_comm = false, no_antineg = false, no_zclosed = false;
  int threads = 0, cap = semigraph::kGraphCap, order = 0;

  CLI::App* check = app.add_subcommand("check", "verify the axioms of a table or product");
  check->add_option("input", input, "path to a semiring or product file, or catalog:NAME")
      ->required();
  check->add_option("--cap", cap, "largest product order to expand");

  CLI::App* dim = app.add_subcommand("dim", "metric dimension of the total graph");
  dim->add_option("input", input, "path to a semiring or product file, or catalog:NAME")
      ->required();
  dim->add_flag("--unrestricted", unrestricted, "use all of S, not just the zero divisors");
  dim->add_flag("--oracle", oracle, "brute-force solver instead of the pruned one");
  dim->add_option("--threads", threads, "worker threads (0 = auto)");
  dim->add_option("--cap", cap, "largest vertex count to accept");

  CLI::App* predict = app.add_subcommand("predict", "case classification and predicted dimension");
  predict->add_option("input", input, "path to a semiring or product file, or catalog:NAME")
      ->required();
  predict->add_flag("--strict-haupt2", strict, "require both Boolean and z-type factors");

  CLI::App* verify = app.add_subcommand("verify", "predicted vs computed over a campaign");
  verify->add_option("campaign", campaign_path, "campaign file (defaults to the built-in list)");
  verify->add_flag("--csv", csv, "machine-readable output");
  verify->add_flag("--no-oracle", no_oracle, "skip the brute-force cross-check");
  verify->add_option("--threads", threads, "worker threads (0 = auto)");
  verify->add_flag("--strict-haupt2", strict, "require both Boolean and z-type factors");

  CLI::App* graph = app.add_subcommand("graph", "export the total graph as DOT");
  graph->add_option("input", input, "path to a semiring or product file, or catalog:NAME")
      ->required();
  graph->add_flag("--unrestricted", unrestricted, "use all of S, not just the zero divisors");
  graph->add_option("--dot", dot_path, "write DOT here and print a summary instead");
  graph->add_option("--cap", cap, "largest vertex count to accept");

  CLI::App* enumerate = app.add_subcommand("enumerate", "all tables of a small order");
  enumerate->add_option("order", order, "number of elements (2..4)")->required();
  enumerate->add_option("--out-dir", out_dir, "write each table as a JSON file here");
  enumerate->add_flag("--no-commutative", no_comm, "drop the commutativity filter");
  enumerate->add_flag("--no-antinegative", no_antineg, "drop the antinegativity filter");
  enumerate->add_flag("--no-zclosed", no_zclosed, "drop the zero-divisor closure filter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(input, cap);
    if (app.got_subcommand(dim)) return cmd_dim(input, unrestricted, oracle, threads, cap);
    if (app.got_subcommand(predict)) return cmd_predict(input, strict);
    if (app.got_subcommand(verify))
      return cmd_verify(campaign_path, csv, no_oracle, threads, strict);
    if (app.got_subcommand(graph)) return cmd_graph(input, unrestricted, dot_path, cap);
    if (app.got_subcommand(enumerate)) {
      semigraph::EnumerationFilters filters;
      filters.commutative = !no_comm;
      filters.antinegative = !no_antineg;
      filters.zclosed = !no_zclosed;
      return cmd_enumerate(order, out_dir, filters);
    }
  } catch (const semigraph::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const semigraph::CapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const semigraph::UnsupportedCaseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const semigraph::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
