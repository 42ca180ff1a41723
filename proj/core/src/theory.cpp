#include "semigraph/theory.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <set>

#include "parallel.hpp"

namespace semigraph {

const char* case_name(TheoryCase c) {
  switch (c) {
    case TheoryCase::Trivial: return "TRIVIAL";
    case TheoryCase::AllBoolean: return "ALL_BOOLEAN";
    case TheoryCase::Generic: return "GENERIC";
    case TheoryCase::Haupt1: return "HAUPT1";
    case TheoryCase::Haupt2: return "HAUPT2";
    case TheoryCase::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Ok: return "ok";
    case EntryStatus::Mismatch: return "MISMATCH";
    case EntryStatus::Skipped: return "skipped";
    case EntryStatus::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case EntryStatus::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

namespace {

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::vector<FactorClass> classify_factors(const ProductSemiring& p) {
  std::vector<FactorClass> fc;
  fc.reserve(static_cast<size_t>(p.factor_count()));
  for (int i = 0; i < p.factor_count(); ++i) {
    try {
      fc.push_back(classify_factor(p.factor(i)));
    } catch (const HypothesisError& e) {
      throw HypothesisError("factor " + std::to_string(i) + ": " + e.what());
    }
  }
  return fc;
}

std::uint64_t zero_divisor_count(const ProductSemiring& p, const std::vector<FactorClass>& fc) {
  std::uint64_t nonz = 1;
  for (const auto& f : fc) nonz *= static_cast<std::uint64_t>(f.u_count);
  return p.order() - nonz;
}

int narrow_dim(long long v) {
  if (v < 0 || v > INT_MAX) throw CapError("predicted dimension " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

std::vector<Element> support(const ProductSemiring& p) {
  classify_factors(p);
  const int n = p.factor_count();
  if (n > 24) throw CapError("support of a " + std::to_string(n) + "-factor product is too large");
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(pow2(n)));
  Element e(static_cast<size_t>(n), 0);
  for (;;) {
    out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<size_t>(i)] == 1) e[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    e[static_cast<size_t>(i)] = 1;
  }
  return out;
}

long long lower_bound(const ProductSemiring& p) {
  const auto fc = classify_factors(p);
  return static_cast<long long>(zero_divisor_count(p, fc)) -
         static_cast<long long>(pow2(p.factor_count())) + 1;
}

CasePrediction classify_product(const ProductSemiring& p, const ClassifyOptions& opt) {
  const auto fc = classify_factors(p);
  const int n = p.factor_count();

  CasePrediction c;
  c.n_total = n;
  c.s_count = p.order();
  c.z_count = zero_divisor_count(p, fc);

  int bools = 0, ztypes = 0, rtypes = 0, r_at = -1;
  for (int i = 0; i < n; ++i) {
    switch (fc[static_cast<size_t>(i)].kind) {
      case FactorKind::Bool: ++bools; break;
      case FactorKind::ZType: ++ztypes; break;
      case FactorKind::RType: ++rtypes; r_at = i; break;
      case FactorKind::Generic: break;
    }
  }

  if (c.z_count == 1) {
    c.kind = TheoryCase::Trivial;
    c.predicted_dim = 0;
    if (c.s_count == 2)
      c.hypothesis_notes.push_back(
          "|S|=2 with |Z|=1: the one-vertex graph is treated like the |S|>=3 trivial case");
    return c;
  }

  if (bools == n) {
    c.kind = TheoryCase::AllBoolean;
    c.m = n;
    c.predicted_dim = n >= 3 ? n : 1;
    return c;
  }

  int fat = 0;  // factors with at least two non-zero-divisors
  for (const auto& f : fc)
    if (f.u_count >= 2) ++fat;
  bool generic = true;
  for (const auto& f : fc)
    if (f.z_count < 2 && fat - (f.u_count >= 2 ? 1 : 0) < 1) {
      generic = false;
      break;
    }
  if (generic) {
    c.kind = TheoryCase::Generic;
    c.predicted_dim =
        narrow_dim(static_cast<long long>(c.z_count) - static_cast<long long>(pow2(n)) + 1);
    return c;
  }

  if (bools + ztypes == n && bools >= 1 && ztypes >= 1) {
    c.kind = TheoryCase::Haupt1;
    c.m = bools;
    c.n_z = ztypes;
    // every u_i is 1 here, so the count identity is structural
    if (c.z_count != c.s_count - 1) throw std::logic_error("HAUPT1 count identity |Z| = |S|-1 broke");
    const long long via_z = static_cast<long long>(c.z_count) -
                            static_cast<long long>(pow2(c.m + c.n_z)) + c.m + 1;
    const long long via_s =
        static_cast<long long>(c.s_count) + c.m - static_cast<long long>(pow2(c.m + c.n_z));
    if (via_z != via_s) throw std::logic_error("HAUPT1 formula forms disagree");
    c.predicted_dim = narrow_dim(via_z);
    return c;
  }

  if (rtypes == 1 && bools + ztypes == n - 1) {
    c.m = bools;
    c.n_z = ztypes;
    c.r_order = fc[static_cast<size_t>(r_at)].order;
    const bool strict_ok = bools >= 1 && ztypes >= 1;
    if (strict_ok || (!opt.strict_haupt2 && bools + ztypes >= 1)) {
      c.kind = TheoryCase::Haupt2;
      if (c.s_count != c.z_count + static_cast<std::uint64_t>(c.r_order) - 1)
        throw std::logic_error("HAUPT2 count identity |S| = |Z|+|R|-1 broke");
      const long long via_z = static_cast<long long>(c.z_count) -
                              static_cast<long long>(pow2(c.m + c.n_z + 1)) + 2;
      const long long via_s = static_cast<long long>(c.s_count) -
                              static_cast<long long>(pow2(c.m + c.n_z + 1)) - c.r_order + 3;
      if (via_z != via_s) throw std::logic_error("HAUPT2 formula forms disagree");
      c.predicted_dim = narrow_dim(via_z);
      if (!strict_ok)
        c.hypothesis_notes.push_back(
            "one-sided mix m=" + std::to_string(c.m) + ", n_z=" + std::to_string(c.n_z) +
            ": accepted under the m+n_z>=1 reading; the strict m>=1 and n_z>=1 reading rejects it");
      return c;
    }
    c.hypothesis_notes.push_back("strict reading requested and m=" + std::to_string(c.m) +
                                 ", n_z=" + std::to_string(c.n_z) + " is one-sided");
  }

  c.kind = TheoryCase::Unsupported;
  std::string kinds;
  for (int i = 0; i < n; ++i) {
    if (i) kinds += ",";
    kinds += factor_kind_name(fc[static_cast<size_t>(i)].kind);
  }
  c.hypothesis_notes.push_back("no case matched; factor kinds: " + kinds);
  return c;
}

int predict_dimension(const ProductSemiring& p, const ClassifyOptions& opt) {
  const auto c = classify_product(p, opt);
  if (c.kind == TheoryCase::Unsupported) {
    std::string msg = "no dimension formula applies";
    for (const auto& note : c.hypothesis_notes) msg += "; " + note;
    throw UnsupportedCaseError(msg);
  }
  return *c.predicted_dim;
}

WitnessConstruction construct_witness(const ProductSemiring& p, const CasePrediction& c) {
  if (c.kind == TheoryCase::Unsupported)
    throw UnsupportedCaseError("cannot construct a witness for an unsupported case");

  WitnessConstruction wc;
  const int n = p.factor_count();
  const auto zs = product_zero_divisors(p);

  std::map<std::uint32_t, std::vector<Element>> buckets;
  for (const auto& e : zs.elements) buckets[p.z_pattern(e)].push_back(e);
  for (auto& [mask, members] : buckets) {
    wc.m_masks.push_back(mask);
    for (size_t i = 1; i < members.size(); ++i) wc.punctured_union.push_back(members[i]);
    if (members.size() == 1) {
      wc.no_twin_set.push_back(members[0]);
    } else {
      wc.twin_set.insert(wc.twin_set.end(), members.begin(), members.end());
    }
    wc.m_classes.push_back(std::move(members));
  }
  std::sort(wc.punctured_union.begin(), wc.punctured_union.end());
  std::sort(wc.twin_set.begin(), wc.twin_set.end());
  std::sort(wc.no_twin_set.begin(), wc.no_twin_set.end());

  auto in_support = [](const Element& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0 || x == 1; });
  };
  for (const auto& e : wc.twin_set)
    if (!in_support(e)) wc.t_prime.push_back(e);

  auto ones_except = [n](int at) {
    Element e(static_cast<size_t>(n), 1);
    e[static_cast<size_t>(at)] = 0;
    return e;
  };

  switch (c.kind) {
    case TheoryCase::Trivial:
      break;
    case TheoryCase::AllBoolean:
      if (n == 2) {
        wc.witness.push_back({1, 0});
      } else {
        for (int i = 0; i < n; ++i) wc.witness.push_back(ones_except(i));
      }
      break;
    case TheoryCase::Generic:
      wc.witness = wc.punctured_union;
      break;
    case TheoryCase::Haupt1: {
      const auto fc = classify_factors(p);
      for (int i = 0; i < n; ++i)
        if (fc[static_cast<size_t>(i)].kind == FactorKind::Bool)
          wc.t_dprime.push_back(ones_except(i));
      wc.witness = wc.t_prime;
      wc.witness.insert(wc.witness.end(), wc.t_dprime.begin(), wc.t_dprime.end());
      std::sort(wc.witness.begin(), wc.witness.end());
      break;
    }
    case TheoryCase::Haupt2: {
      const auto fc = classify_factors(p);
      for (int i = 0; i < n; ++i)
        if (fc[static_cast<size_t>(i)].kind == FactorKind::RType) {
          wc.t_dprime.push_back(ones_except(i));
          break;
        }
      wc.witness = wc.t_prime;
      wc.witness.insert(wc.witness.end(), wc.t_dprime.begin(), wc.t_dprime.end());
      std::sort(wc.witness.begin(), wc.witness.end());
      break;
    }
    case TheoryCase::Unsupported:
      break;
  }

  if (c.predicted_dim && static_cast<long long>(wc.witness.size()) != *c.predicted_dim)
    throw std::logic_error("witness size " + std::to_string(wc.witness.size()) +
                           " does not match predicted dimension " +
                           std::to_string(*c.predicted_dim));
  return wc;
}

namespace {

// Pattern partition and graph twin partition as sorted member lists; the
// pattern side always refines the graph side in a restricted total graph
// (equal non-empty patterns give equal closed neighborhoods).
struct PartitionCompare {
  bool equal = false;
  bool refinement = true;
  bool degenerate_only = true;  // every merge joins singleton open twins
  std::vector<std::string> merge_notes;
};

PartitionCompare compare_partitions(const ProductSemiring& p, const Graph& g,
                                    const TwinPartition& twins) {
  const int n = g.size();
  std::map<std::uint32_t, std::vector<int>> by_pattern;
  for (int v = 0; v < n; ++v) by_pattern[p.z_pattern(g.elements[static_cast<size_t>(v)])].push_back(v);

  PartitionCompare out;
  out.equal = static_cast<int>(by_pattern.size()) == twins.count();

  std::vector<int> pattern_class(static_cast<size_t>(n), -1);
  std::vector<int> pattern_size;
  {
    int id = 0;
    for (const auto& [mask, members] : by_pattern) {
      for (const int v : members) pattern_class[static_cast<size_t>(v)] = id;
      pattern_size.push_back(static_cast<int>(members.size()));
      for (const int v : members)
        if (twins.class_of[static_cast<size_t>(v)] != twins.class_of[static_cast<size_t>(members[0])])
          out.refinement = false;
      ++id;
    }
  }

  for (const auto& cls : twins.classes) {
    std::set<int> inside;
    for (const int v : cls.members) inside.insert(pattern_class[static_cast<size_t>(v)]);
    if (inside.size() <= 1) continue;
    out.equal = false;
    int covered = 0;
    bool all_singleton = true;
    for (const int pc : inside) {
      covered += pattern_size[static_cast<size_t>(pc)];
      if (pattern_size[static_cast<size_t>(pc)] != 1) all_singleton = false;
    }
    if (covered != static_cast<int>(cls.members.size())) out.refinement = false;
    if (!all_singleton || cls.kind != TwinKind::Open) out.degenerate_only = false;
    std::string note = "pattern classes merge into one open-twin class {";
    for (size_t i = 0; i < cls.members.size(); ++i) {
      if (i) note += ",";
      note += g.labels[static_cast<size_t>(cls.members[i])];
    }
    note += "}";
    out.merge_notes.push_back(std::move(note));
  }
  // A broken refinement means the partitions cross; never report them equal.
  if (!out.refinement) out.equal = false;
  return out;
}

bool twin_discipline(const TwinPartition& twins, const std::vector<int>& witness) {
  std::vector<int> out_count(static_cast<size_t>(twins.count()), 0);
  std::vector<char> in_w(twins.class_of.size(), 0);
  for (const int v : witness) in_w[static_cast<size_t>(v)] = 1;
  for (size_t v = 0; v < twins.class_of.size(); ++v)
    if (!in_w[v] && ++out_count[static_cast<size_t>(twins.class_of[v])] > 1) return false;
  return true;
}

// Direct x+y membership test on the expanded table, next to the pattern
// shortcut the product graph was built with.
bool adjacency_cross_check(const ProductSemiring& p, const Graph& g, std::uint64_t cap) {
  if (p.order() > cap) return true;
  const auto mp = materialize(p, cap);
  std::vector<char> zdiv(static_cast<size_t>(mp.table.order), 0);
  for (const int x : zero_divisors(mp.table)) zdiv[static_cast<size_t>(x)] = 1;

  std::vector<int> vertex_of(static_cast<size_t>(mp.table.order), -1);
  int found = 0;
  for (int x = 0; x < mp.table.order; ++x)
    if (zdiv[static_cast<size_t>(x)]) {
      const int v = g.index_of(mp.elements[static_cast<size_t>(x)]);
      if (v < 0) return false;
      vertex_of[static_cast<size_t>(x)] = v;
      ++found;
    }
  if (found != g.size()) return false;

  for (int x = 0; x < mp.table.order; ++x)
    for (int y = x + 1; y < mp.table.order; ++y) {
      if (!zdiv[static_cast<size_t>(x)] || !zdiv[static_cast<size_t>(y)]) continue;
      const bool direct = zdiv[static_cast<size_t>(mp.table.add[static_cast<size_t>(x)][static_cast<size_t>(y)])] != 0;
      if (direct != g.adjacent(vertex_of[static_cast<size_t>(x)], vertex_of[static_cast<size_t>(y)]))
        return false;
    }
  return true;
}

CampaignRow run_entry(const CampaignEntry& entry, const CampaignOptions& opt) {
  CampaignRow row;
  row.product = entry.name;
  try {
    const auto p = direct_product(entry.factors);
    const auto c = classify_product(p, opt.classify);
    row.kind = c.kind;
    row.m = c.m;
    row.n_z = c.n_z;
    row.z_count = c.z_count;
    row.notes = c.hypothesis_notes;
    if (c.kind == TheoryCase::Unsupported) {
      row.status = EntryStatus::Unsupported;
      return row;
    }
    row.predicted = c.predicted_dim;

    const auto g = build_total_graph(p, true, static_cast<std::uint64_t>(opt.graph_cap));
    const auto dm = distances(g, 1);
    const auto exact = metric_dimension_exact(g, opt.graph_cap);
    row.exact = exact.dimension;

    bool bad = false;
    auto flag = [&](std::string note) {
      bad = true;
      row.notes.push_back(std::move(note));
    };

    if (*row.predicted != exact.dimension)
      flag("predicted " + std::to_string(*row.predicted) + " but exact dimension is " +
           std::to_string(exact.dimension));

    if (opt.use_oracle && g.size() <= opt.oracle_cap) {
      const auto oracle = metric_dimension_oracle(g, opt.oracle_cap);
      row.oracle = oracle.dimension;
      if (oracle.dimension != exact.dimension) flag("oracle and pruned dimensions differ");
      else if (oracle.witness != exact.witness) flag("oracle and pruned witnesses differ");
    }

    const auto lb = lower_bound(p);
    row.bound_ok = exact.dimension >= lb;
    if (!row.bound_ok)
      flag("exact dimension " + std::to_string(exact.dimension) + " below lower bound " +
           std::to_string(lb));

    const auto wc = construct_witness(p, c);
    std::vector<int> wverts;
    wverts.reserve(wc.witness.size());
    bool mapped = true;
    for (const auto& e : wc.witness) {
      const int v = g.index_of(e);
      if (v < 0) {
        mapped = false;
        break;
      }
      wverts.push_back(v);
    }
    row.witness_ok = mapped && is_resolving(g, dm, wverts).resolving &&
                     static_cast<long long>(wc.witness.size()) == *row.predicted;
    if (!row.witness_ok) flag("constructed witness does not resolve");

    const auto twins = twin_partition(g);
    if (!twin_discipline(twins, exact.witness)) flag("pruned witness leaves two twins out");
    const auto cmp = compare_partitions(p, g, twins);
    row.twin_ok = cmp.equal;
    if (!cmp.equal) {
      if (cmp.refinement && cmp.degenerate_only && !cmp.merge_notes.empty()) {
        for (const auto& note : cmp.merge_notes) row.notes.push_back(note + " (flagged, not failed)");
      } else {
        for (const auto& note : cmp.merge_notes) row.notes.push_back(note);
        flag("pattern and graph twin partitions disagree beyond the open-twin collision");
      }
    }

    if (!adjacency_cross_check(p, g, static_cast<std::uint64_t>(opt.graph_cap)))
      flag("pattern adjacency differs from direct sum evaluation");

    row.status = bad ? EntryStatus::Mismatch : EntryStatus::Ok;
  } catch (const HypothesisError& e) {
    row.status = EntryStatus::HypothesisViolation;
    row.notes.push_back(e.what());
  } catch (const CapError& e) {
    row.status = EntryStatus::Skipped;
    row.notes.push_back(e.what());
  }
  return row;
}

}  // namespace

CampaignReport verify_campaign(const std::vector<CampaignEntry>& entries,
                               const CampaignOptions& opt) {
  CampaignReport report;
  report.rows.resize(entries.size());
  detail::parallel_for(static_cast<int>(entries.size()), opt.threads, [&](int i) {
    report.rows[static_cast<size_t>(i)] = run_entry(entries[static_cast<size_t>(i)], opt);
  });
  for (const auto& row : report.rows) {
    switch (row.status) {
      case EntryStatus::Ok: ++report.ok; break;
      case EntryStatus::Mismatch: ++report.mismatches; break;
      case EntryStatus::Skipped: ++report.skipped; break;
      case EntryStatus::HypothesisViolation: ++report.violations; break;
      case EntryStatus::Unsupported: ++report.unsupported; break;
    }
  }
  return report;
}

namespace {

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string pad(std::string s, size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string joined_notes(const CampaignRow& row) {
  std::string out;
  for (size_t i = 0; i < row.notes.size(); ++i) {
    if (i) out += "; ";
    out += row.notes[i];
  }
  return out;
}

}  // namespace

std::string render_text(const CampaignReport& report) {
  size_t wp = 7;
  for (const auto& row : report.rows) wp = std::max(wp, row.product.size());
  std::string out = pad("product", wp) + "  " + pad("case", 12) + pad("m", 3) + pad("n_z", 4) +
                    pad("|Z|", 4) + pad("pred", 5) + pad("exact", 6) + pad("oracle", 7) +
                    pad("wit", 4) + pad("bound", 6) + pad("status", 21) + "notes\n";
  for (const auto& row : report.rows) {
    const bool solved = row.status == EntryStatus::Ok || row.status == EntryStatus::Mismatch;
    out += pad(row.product, wp) + "  " + pad(case_name(row.kind), 12) +
           pad(std::to_string(row.m), 3) + pad(std::to_string(row.n_z), 4) +
           pad(std::to_string(row.z_count), 4) + pad(opt_str(row.predicted), 5) +
           pad(opt_str(row.exact), 6) + pad(opt_str(row.oracle), 7) +
           pad(solved ? (row.witness_ok ? "yes" : "NO") : "-", 4) +
           pad(solved ? (row.bound_ok ? "yes" : "NO") : "-", 6) + pad(status_name(row.status), 21) +
           joined_notes(row) + "\n";
  }
  for (const auto& row : report.rows) {
    if (row.status == EntryStatus::Mismatch)
      out += "MISMATCH " + row.product + ": " + joined_notes(row) + "\n";
    if (row.status == EntryStatus::Unsupported)
      out += "UNSUPPORTED " + row.product + ": " + joined_notes(row) + "\n";
  }
  out += "entries=" + std::to_string(report.rows.size()) + " ok=" + std::to_string(report.ok) +
         " mismatches=" + std::to_string(report.mismatches) +
         " skipped=" + std::to_string(report.skipped) +
         " hypothesis_violations=" + std::to_string(report.violations) +
         " unsupported=" + std::to_string(report.unsupported) + "\n";
  return out;
}

std::string render_csv(const CampaignReport& report) {
  std::string out = "product,case,m,n_z,z_count,predicted,exact,oracle,witness_ok,bound_ok,notes\n";
  for (const auto& row : report.rows) {
    const bool solved = row.status == EntryStatus::Ok || row.status == EntryStatus::Mismatch;
    out += csv_field(row.product) + "," + case_name(row.kind) + "," + std::to_string(row.m) + "," +
           std::to_string(row.n_z) + "," + std::to_string(row.z_count) + "," +
           (row.predicted ? std::to_string(*row.predicted) : "") + "," +
           (row.exact ? std::to_string(*row.exact) : "") + "," +
           (row.oracle ? std::to_string(*row.oracle) : "") + "," +
           (solved ? (row.witness_ok ? "true" : "false") : "") + "," +
           (solved ? (row.bound_ok ? "true" : "false") : "") + "," + csv_field(joined_notes(row)) +
           "\n";
  }
  return out;
}

std::vector<CampaignEntry> default_campaign() {
  const std::array<const char*, 4> roster = {"BOOL", "CHAIN_3", "T3", "BXMODX2"};
  std::array<SemiringTable, 4> tables;
  std::array<std::uint64_t, 4> orders{}, units{};
  for (size_t i = 0; i < roster.size(); ++i) {
    tables[i] = catalog(roster[i]);
    orders[i] = static_cast<std::uint64_t>(tables[i].order);
    units[i] = orders[i] - zero_divisors(tables[i]).size();
  }

  std::vector<CampaignEntry> out;
  auto add = [&](const std::vector<size_t>& pick) {
    std::uint64_t s = 1, u = 1;
    for (const size_t i : pick) {
      s *= orders[i];
      u *= units[i];
    }
    if (s - u > 20) return;
    CampaignEntry entry;
    for (const size_t i : pick) {
      if (!entry.name.empty()) entry.name += "*";
      entry.name += roster[i];
      entry.factors.push_back(tables[i]);
    }
    out.push_back(std::move(entry));
  };

  for (size_t i = 0; i < 4; ++i) add({i});
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i; j < 4; ++j) add({i, j});
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i; j < 4; ++j)
      for (size_t k = j; k < 4; ++k) add({i, j, k});
  return out;
}

}  // namespace semigraph
