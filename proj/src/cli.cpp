#include "hurwitz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hurwitz/json_io.hpp"

namespace hurwitz {

namespace {

struct Options {
  std::optional<int> degree;
  std::vector<std::string> collection_parts;
  std::string collection;
  std::string input;
  bool json = false;
  int shards = 1;
  std::optional<std::int64_t> max_nodes;
  std::optional<double> time_limit;
  std::optional<int> genus;
  int r = 0;
  int d_max = 0;
  std::string filter = "main-form";
  std::vector<std::string> perms;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json(const Options& o, std::istream& in) {
  std::string text;
  if (!o.input.empty()) {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON input: ") + e.what());
  }
}

BranchData branch_data_of(const Options& o, const Json& doc) {
  const Json& j = doc.contains("branch_data") ? doc.at("branch_data") : doc;
  BranchData bd = branch_data_from_json(j);
  if (o.degree && *o.degree != bd.degree()) {
    throw UsageError("-d " + std::to_string(*o.degree) + " does not match degree " + std::to_string(bd.degree()));
  }
  return bd;
}

BranchData read_branch_data(const Options& o, std::istream& in) {
  if (!o.collection.empty()) {
    if (!o.degree) throw UsageError("-d is required with an inline collection");
    return BranchData::parse(*o.degree, o.collection);
  }
  return branch_data_of(o, read_json(o, in));
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.max_nodes;
  b.time_limit = o.time_limit;
  b.parallel_shards = std::max(1, o.shards);
  return b;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << (v.realizable ? "realizable" : "not realizable") << " (" << to_string(v.reason) << "): degree "
      << v.witness.degree << ", gcd " << v.witness.gcd << ", max m " << v.witness.max_m << ", v "
      << v.witness.total_branching << "\n";
}

void print_tuple(std::ostream& out, const RealizationTuple& t) {
  out << "degree " << t.degree << "\n";
  std::size_t width = 0;
  for (const auto& role : t.roles) width = std::max(width, role.size());
  for (std::size_t k = 0; k < t.perms.size(); ++k) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << t.roles[k] << t.perms[k].to_string() << "\n";
  }
}

void print_report(std::ostream& out, const VerificationReport& r) {
  auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
  out << "degree match      " << mark(r.degree_match) << "\n"
      << "types match       " << mark(r.types_match) << "\n"
      << "product identity  " << mark(r.product_identity) << "\n"
      << "transitive        " << mark(r.transitive) << "\n"
      << "genus             " << r.genus.to_string() << "\n";
}

// decide_main, falling back to decide_boccara for data outside the main form.
Verdict decide_any(const BranchData& bd) {
  try {
    return decide_main(bd);
  } catch (const OutsideFormError&) {
    if (is_boccara_shape(bd)) return decide_boccara(bd);
    throw;
  }
}

int run_decide(const Options& o, std::istream& in, std::ostream& out) {
  const BranchData bd = read_branch_data(o, in);
  const Verdict v = decide_any(bd);
  if (o.json) {
    out << Json{{"branch_data", to_json(bd)}, {"verdict", to_json(v)}}.dump() << "\n";
  } else {
    print_verdict(out, v);
  }
  return v.realizable ? kExitYes : kExitNo;
}

int run_realize(const Options& o, std::istream& in, std::ostream& out) {
  const BranchData bd = read_branch_data(o, in);
  const Realization r = realize(bd);
  if (r.tuple && !verify_realization(r.normalized, *r.tuple).ok()) {
    throw LemmaViolation("realize: witness failed verification");
  }
  if (o.json) {
    Json j{{"branch_data", to_json(r.normalized)}, {"verdict", to_json(r.verdict)}};
    if (r.tuple) j["tuple"] = to_json(*r.tuple);
    out << j.dump() << "\n";
  } else {
    print_verdict(out, r.verdict);
    if (r.tuple) print_tuple(out, *r.tuple);
  }
  return r.verdict.realizable ? kExitYes : kExitNo;
}

int run_verify(const Options& o, std::istream& in, std::ostream& out) {
  std::optional<BranchData> bd;
  std::optional<RealizationTuple> tuple;
  if (!o.collection.empty()) {
    bd = read_branch_data(o, in);
    if (o.perms.empty()) throw UsageError("verify with an inline collection needs --perm for each permutation");
    RealizationTuple t;
    t.degree = bd->degree();
    for (std::size_t k = 0; k < o.perms.size(); ++k) {
      t.perms.push_back(Permutation::parse(o.perms[k], t.degree));
      t.roles.push_back("perm-" + std::to_string(k + 1));
    }
    tuple = std::move(t);
  } else {
    const Json doc = read_json(o, in);
    if (!doc.contains("tuple")) throw UsageError("verify input needs a \"tuple\" field");
    bd = branch_data_of(o, doc);
    tuple = tuple_from_json(doc.at("tuple"));
  }
  const VerificationReport report = verify_realization(*bd, *tuple);
  if (o.json) {
    out << to_json(report).dump() << "\n";
  } else {
    print_report(out, report);
  }
  return report.ok() ? kExitYes : kExitNo;
}

int run_search(const Options& o, std::istream& in, std::ostream& out) {
  const BranchData bd = read_branch_data(o, in);
  const SearchResult r =
      o.genus ? search_tuples(bd, *o.genus, budget_of(o)) : search_any_genus(bd, budget_of(o));
  if (o.json) {
    out << Json{{"branch_data", to_json(bd)}, {"search", to_json(r)}}.dump() << "\n";
  } else {
    out << to_string(r.status) << " after " << r.nodes << " nodes\n";
    if (r.tuple) print_tuple(out, *r.tuple);
  }
  return r.found() ? kExitYes : kExitNo;
}

int run_census(const Options& o, std::ostream& out) {
  if (o.d_max < 1) throw UsageError("census needs --d-max >= 1");
  CensusOptions options;
  options.max_genus = o.genus.value_or(0);
  options.budget = budget_of(o);
  const auto entries = census(o.d_max, census_filter_from_string(o.filter), options);
  if (o.json) {
    for (const auto& e : entries) out << to_json(e).dump() << "\n";
    return kExitYes;
  }
  struct Row {
    int total = 0, realizable = 0, exceptions = 0, unknown = 0;
  };
  std::map<int, Row> rows;
  for (const auto& e : entries) {
    Row& row = rows[e.branch_data.degree()];
    ++row.total;
    if (e.verdict == CensusVerdict::Realizable) ++row.realizable;
    if (e.verdict == CensusVerdict::Exception) ++row.exceptions;
    if (e.verdict == CensusVerdict::Unknown) ++row.unknown;
  }
  out << "census " << o.filter << ", degree <= " << o.d_max << "\n";
  out << std::right << std::setw(6) << "d" << std::setw(13) << "collections" << std::setw(12) << "realizable"
      << std::setw(12) << "exceptions" << std::setw(9) << "unknown" << "\n";
  for (const auto& [d, row] : rows) {
    out << std::setw(6) << d << std::setw(13) << row.total << std::setw(12) << row.realizable << std::setw(12)
        << row.exceptions << std::setw(9) << row.unknown << "\n";
  }
  for (const auto& e : entries) {
    if (e.verdict != CensusVerdict::Realizable) {
      out << to_string(e.verdict) << ": d=" << e.branch_data.degree() << " " << e.branch_data.to_string() << "\n";
    }
  }
  return kExitYes;
}

int run_belyi(const Options& o, std::istream& in, std::ostream& out) {
  const BranchData bd = read_branch_data(o, in);
  if (o.r < 1) throw UsageError("belyi needs -r >= 1");
  std::optional<MainForm> chosen;
  for (const auto& form : classify_form(bd)) {
    if (form.lambda.length() == o.r) {
      chosen = form;
      break;
    }
  }
  if (!chosen) {
    throw UsageError("belyi: " + bd.to_string() + " has no main-form designation with " + std::to_string(o.r) +
                     " extra partitions");
  }
  const Verdict v = decide_form(*chosen);
  if (!v.realizable) {
    if (o.json) {
      out << Json{{"branch_data", to_json(bd)}, {"verdict", to_json(v)}}.dump() << "\n";
    } else {
      print_verdict(out, v);
    }
    return kExitNo;
  }
  const RealizationTuple lifted = belyi_lift(realize_form(*chosen), o.r);
  std::vector<Partition> types;
  for (const auto& p : lifted.perms) types.push_back(cycle_type(p));
  const BranchData result(lifted.degree, std::move(types));
  if (!verify_realization(result, lifted).ok()) throw LemmaViolation("belyi: lifted tuple failed verification");
  if (o.json) {
    out << Json{{"source", to_json(bd)}, {"branch_data", to_json(result)}, {"tuple", to_json(lifted)}}.dump() << "\n";
  } else {
    out << "collection " << result.to_string() << "\n";
    print_tuple(out, lifted);
  }
  return kExitYes;
}

int run_probe(const Options& o, std::ostream& out) {
  if (o.d_max < 2) throw UsageError("probe needs --d-max >= 2");
  const int g = o.genus.value_or(1);
  const ProbeReport report = probe_conjecture(o.d_max, g, budget_of(o));
  if (o.json) {
    out << to_json(report).dump() << "\n";
  } else {
    out << "probe degree <= " << report.d_max << ", genus " << report.genus << ": " << report.probed
        << " collections, " << report.realized << " realized, " << report.counterexamples.size()
        << " counterexamples, " << report.undecided.size() << " undecided\n";
    for (const auto& bd : report.counterexamples) {
      out << "COUNTEREXAMPLE d=" << bd.degree() << " " << bd.to_string() << "\n";
    }
    for (const auto& bd : report.undecided) out << "undecided d=" << bd.degree() << " " << bd.to_string() << "\n";
  }
  return report.clean() ? kExitYes : kExitNo;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("-d,--degree", o.degree, "degree of the covering");
  sub->add_option("collection", o.collection_parts, "partitions such as \"(2,2) (3,1)\"");
  sub->add_option("--input", o.input, "read JSON from this file instead of stdin");
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--shards", o.shards, "parallel search shards");
  sub->add_option("--max-nodes", o.max_nodes, "node limit for the search");
  sub->add_option("--time-limit", o.time_limit, "time limit in seconds");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Realizability of branch data on the sphere", "hurwitz"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto* decide = app.add_subcommand("decide", "decide realizability by the closed-form criteria");
  auto* realize_cmd = app.add_subcommand("realize", "build a permutation witness");
  auto* verify = app.add_subcommand("verify", "check a permutation tuple against branch data");
  auto* search = app.add_subcommand("search", "exhaustive search for a witness");
  auto* census_cmd = app.add_subcommand("census", "search every collection of a family");
  auto* belyi = app.add_subcommand("belyi", "three-point lift of a main-form witness");
  auto* probe = app.add_subcommand("probe", "search the positive-genus analogue of the criterion");

  for (auto* sub : {decide, realize_cmd, verify, search, belyi}) add_input(sub, o);
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "JSON output");
  verify->add_option("--perm", o.perms, "permutation in cycle notation, in tuple order");
  for (auto* sub : {search, census_cmd, probe}) {
    add_budget(sub, o);
    sub->add_option("--genus", o.genus, "target genus (search), largest genus (census), genus (probe)");
  }
  belyi->add_option("-r", o.r, "number of extra partitions")->required();
  for (auto* sub : {census_cmd, probe}) sub->add_option("--d-max", o.d_max, "largest degree")->required();
  census_cmd->add_option("--filter", o.filter, "main-form, boccara-form or all-compatible");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    for (const auto& part : o.collection_parts) o.collection += (o.collection.empty() ? "" : " ") + part;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (decide->parsed()) return run_decide(o, in, out);
    if (realize_cmd->parsed()) return run_realize(o, in, out);
    if (verify->parsed()) return run_verify(o, in, out);
    if (search->parsed()) return run_search(o, in, out);
    if (census_cmd->parsed()) return run_census(o, out);
    if (belyi->parsed()) return run_belyi(o, in, out);
    if (probe->parsed()) return run_probe(o, out);
  } catch (const LemmaViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace hurwitz
