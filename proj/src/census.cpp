#include <algorithm>
#include <set>
#include <stdexcept>

#include "hurwitz/oracle.hpp"

namespace hurwitz {

std::string_view to_string(CensusFilter filter) {
  switch (filter) {
    case CensusFilter::MainForm:
      return "main-form";
    case CensusFilter::BoccaraForm:
      return "boccara-form";
    case CensusFilter::AllCompatible:
      return "all-compatible";
  }
  return "main-form";
}

CensusFilter census_filter_from_string(std::string_view text) {
  if (text == "main-form") return CensusFilter::MainForm;
  if (text == "boccara-form") return CensusFilter::BoccaraForm;
  if (text == "all-compatible") return CensusFilter::AllCompatible;
  throw std::invalid_argument("unknown census filter '" + std::string(text) + "'");
}

std::string_view to_string(CensusVerdict verdict) {
  switch (verdict) {
    case CensusVerdict::Realizable:
      return "realizable";
    case CensusVerdict::Exception:
      return "exception";
    case CensusVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

using Collection = std::vector<Partition>;  // sorted descending

std::vector<Partition> nontrivial_partitions(int d) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(d)) {
    if (!p.is_trivial()) out.push_back(std::move(p));
  }
  return out;
}

int branching_of(const Partition& p) { return p.total() - p.length(); }

// {a, b} plus hooks with sum m_k = p + q - 2 + extra, every m_k <= d - 1.
void add_form_collections(int d, int extra, std::set<Collection>& out) {
  const auto parts = nontrivial_partitions(d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      const int m = parts[i].length() + parts[j].length() - 2 + extra;
      if (m <= 0) continue;
      for (const auto& lambda : partitions_of(m, d - 1)) {
        Collection c = {parts[i], parts[j]};
        for (int mk : lambda.parts()) c.push_back(Partition::hook(d, mk));
        std::sort(c.rbegin(), c.rend());
        out.insert(std::move(c));
      }
    }
  }
}

void add_boccara_collections(int d, std::set<Collection>& out) {
  const auto parts = nontrivial_partitions(d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      for (std::size_t k = j; k < parts.size(); ++k) {
        const bool has_hook = parts[i].hook_excess() > 0 || parts[j].hook_excess() > 0 || parts[k].hook_excess() > 0;
        if (!has_hook) continue;
        const int v = branching_of(parts[i]) + branching_of(parts[j]) + branching_of(parts[k]);
        if (v % 2 != 0) continue;
        Collection c = {parts[i], parts[j], parts[k]};
        std::sort(c.rbegin(), c.rend());
        out.insert(std::move(c));
      }
    }
  }
}

// Multisets of at least two partitions with 2d - 2 <= v <= 2d - 2 + 2 max_genus, v even.
void add_compatible_collections(int d, int max_genus, std::set<Collection>& out) {
  const auto parts = nontrivial_partitions(d);
  const int lo = 2 * d - 2;
  const int hi = 2 * d - 2 + 2 * max_genus;
  Collection current;
  auto rec = [&](auto&& self, std::size_t from, int v) -> void {
    if (current.size() >= 2 && v >= lo && v % 2 == 0) out.insert(current);
    for (std::size_t i = from; i < parts.size(); ++i) {
      const int w = v + branching_of(parts[i]);
      if (w > hi) continue;
      current.push_back(parts[i]);
      self(self, i, w);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::optional<Verdict> closed_form(const BranchData& bd, CensusFilter filter) {
  try {
    if (filter == CensusFilter::BoccaraForm) return decide_boccara(bd);
    return decide_main(bd);
  } catch (const OutsideFormError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<BranchData> enumerate_collections(int d_max, CensusFilter filter, const CensusOptions& options) {
  if (options.max_genus < 0) throw std::invalid_argument("census: max_genus must be non-negative");
  std::vector<BranchData> out;
  for (int d = std::max(options.d_min, 1); d <= d_max; ++d) {
    std::set<Collection> collections;
    switch (filter) {
      case CensusFilter::MainForm:
        if (d >= 2) add_form_collections(d, 0, collections);
        break;
      case CensusFilter::BoccaraForm:
        if (d >= 2) add_boccara_collections(d, collections);
        break;
      case CensusFilter::AllCompatible:
        add_compatible_collections(d, options.max_genus, collections);
        break;
    }
    for (const auto& c : collections) out.emplace_back(d, c);
  }
  return out;
}

std::vector<CensusEntry> census(int d_max, CensusFilter filter, const CensusOptions& options) {
  std::vector<CensusEntry> out;
  for (auto& bd : enumerate_collections(d_max, filter, options)) {
    CensusEntry entry{bd, CensusVerdict::Unknown, std::nullopt, false, 0, closed_form(bd, filter)};
    const CoverGenus genus = cover_genus(bd);
    entry.genus = static_cast<int>(genus.value());
    const SearchResult found = search_any_genus(bd, options.budget);
    entry.proven = found.proven();
    if (found.found()) {
      entry.verdict = CensusVerdict::Realizable;
      entry.witness = found.tuple;
    } else if (found.status == SearchStatus::ProvenNone) {
      entry.verdict = CensusVerdict::Exception;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<BranchData> probe_collections(int d_max, int g) {
  if (g < 0) throw std::invalid_argument("probe: genus must be non-negative");
  std::vector<BranchData> out;
  for (int d = 2; d <= d_max; ++d) {
    std::set<Collection> collections;
    add_form_collections(d, 2 * g, collections);
    for (const auto& c : collections) out.emplace_back(d, c);
  }
  return out;
}

ProbeReport probe_conjecture(int d_max, int g, const SearchBudget& budget) {
  ProbeReport report;
  report.d_max = d_max;
  report.genus = g;
  for (auto& bd : probe_collections(d_max, g)) {
    ++report.probed;
    const SearchResult found = search_tuples(bd, g, budget);
    if (found.found()) {
      ++report.realized;
    } else if (found.status == SearchStatus::ProvenNone) {
      report.counterexamples.push_back(std::move(bd));
    } else {
      report.undecided.push_back(std::move(bd));
    }
  }
  return report;
}

}  // namespace hurwitz
