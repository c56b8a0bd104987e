// Acceptance gate: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "hurwitz/oracle.hpp"
#include "hurwitz/realizer.hpp"

using namespace hurwitz;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void line(int n, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

void degree_four_exception() {
  const auto t0 = Clock::now();
  const BranchData exception = BranchData::parse(4, "(2,2) (2,2) (3,1)");
  bool ok = !decide_main(exception).realizable && search_tuples(exception, 0).status == SearchStatus::ProvenNone;
  CensusOptions options;
  options.d_min = 4;
  int others = 0;
  for (const auto& bd : enumerate_collections(4, CensusFilter::MainForm, options)) {
    if (bd == exception) continue;
    ++others;
    const Realization r = realize(bd);
    ok = ok && r.tuple && verify_realization(bd, *r.tuple).ok();
  }
  const double dt = seconds_since(t0);
  ok = ok && others > 0 && dt < 1.0;
  line(1, ok, "degree 4: only (2,2) (2,2) (3,1) is unrealizable",
       std::to_string(others) + " other collections realized and verified, " + fmt(dt));
}

void main_form_agreement() {
  const auto t0 = Clock::now();
  CensusOptions options;
  options.d_min = 3;
  const auto all = enumerate_collections(8, CensusFilter::MainForm, options);
  int mismatches = 0, unproven = 0, exceptions = 0;
  for (const auto& bd : all) {
    const SearchResult r = search_tuples(bd, 0);
    if (!r.proven()) ++unproven;
    if (r.found() != decide_main(bd).realizable) {
      ++mismatches;
      std::printf("  mismatch: d=%d %s\n", bd.degree(), bd.to_string().c_str());
    }
    if (r.found() && !verify_realization(bd, *r.tuple).ok()) ++mismatches;
    if (!r.found()) ++exceptions;
  }
  line(2, mismatches == 0 && unproven == 0, "main form, 3 <= d <= 8: closed form equals exhaustive search",
       std::to_string(all.size()) + " collections, " + std::to_string(exceptions) + " exceptions, " +
           std::to_string(mismatches) + " mismatches, " + fmt(seconds_since(t0)));
}

void boccara_agreement() {
  const auto t0 = Clock::now();
  const auto all = enumerate_collections(8, CensusFilter::BoccaraForm);
  int mismatches = 0, unproven = 0, even_high = 0, critical = 0;
  for (const auto& bd : all) {
    const SearchResult r = search_any_genus(bd);
    if (!r.proven()) ++unproven;
    const int v = total_branching(bd);
    if (v >= 2 * bd.degree()) ++even_high;
    if (v == 2 * bd.degree() - 2) ++critical;
    if (r.found() != decide_boccara(bd).realizable) {
      ++mismatches;
      std::printf("  mismatch: d=%d %s\n", bd.degree(), bd.to_string().c_str());
    }
  }
  line(3, mismatches == 0 && unproven == 0 && even_high > 0 && critical > 0,
       "three partitions with a hook, d <= 8, even v: closed form equals search",
       std::to_string(all.size()) + " collections (" + std::to_string(even_high) + " with v >= 2d, " +
           std::to_string(critical) + " with v = 2d-2), " + std::to_string(mismatches) + " mismatches, " +
           fmt(seconds_since(t0)));
}

// Random partition of n into at most max_len parts, each at most max_part.
std::optional<Partition> random_partition(std::mt19937_64& rng, int n, int max_len, int max_part) {
  const int len = std::uniform_int_distribution<int>(1, std::min(n, max_len))(rng);
  std::vector<int> cuts;
  std::vector<int> pool(static_cast<std::size_t>(n - 1));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + (len - 1));
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    parts.push_back(cuts[k] - cuts[k - 1]);
    if (parts.back() > max_part) return std::nullopt;
  }
  return Partition(parts);
}

void random_soundness() {
  std::mt19937_64 rng(314159);
  int done = 0, failures = 0, lifted = 0;
  double worst = 0;
  while (done < 1000) {
    const int d = std::uniform_int_distribution<int>(2, 30)(rng);
    int k = 1;
    if (rng() % 3 == 0) {
      std::vector<int> divisors;
      for (int c = 2; c <= d; ++c) {
        if (d % c == 0) divisors.push_back(c);
      }
      if (!divisors.empty()) k = divisors[rng() % divisors.size()];
    }
    const auto a = random_partition(rng, d / k, d / k, d / k);
    const auto b = random_partition(rng, d / k, d / k, d / k);
    if (!a || !b) continue;
    const int m = a->length() + b->length() - 2;
    if (m < 1) continue;
    const auto lambda = random_partition(rng, m, 5, d - 1);
    if (!lambda) continue;
    const MainForm form{d, a->scaled(k), b->scaled(k), *lambda};
    if (!decide_form(form).realizable) continue;
    const BranchData bd = form.to_branch_data();
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      const Realization r = realize(bd);
      ok = r.tuple && verify_realization(bd, *r.tuple).ok();
    } catch (const std::exception& e) {
      std::printf("  error on d=%d %s: %s\n", d, bd.to_string().c_str(), e.what());
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (!ok || dt >= 0.05) {
      ++failures;
      std::printf("  failed: d=%d %s (%s)\n", d, bd.to_string().c_str(), fmt(dt).c_str());
    }
    if (form.gcd() > 1) ++lifted;
    ++done;
  }
  line(4, failures == 0, "1000 random main-form instances (d <= 30, l <= 5) realize and verify under 50 ms",
       std::to_string(failures) + " failures, " + std::to_string(lifted) + " needed a power lift, slowest " +
           fmt(worst));
}

Permutation cycle1(int n, const std::vector<int>& labels) {
  std::vector<int> points;
  for (int x : labels) points.push_back(x - 1);
  return Permutation::cycle(n, points);
}

void unit_residue_formulas() {
  int checked = 0, bad = 0;
  for (int D = 1; D <= 6; ++D) {
    const auto pair = realize_ones(D, std::vector<int>{D, D});
    ++checked;
    if (pair.size() != 2 || pair[1] != pair[0].inverse() || pair[0].support_size() != D + 1) ++bad;
    for (int m1 = 1; m1 <= D; ++m1) {
      for (int m2 = 1; m2 <= D; ++m2) {
        const int m3 = 2 * D - m1 - m2;
        if (m3 < 1 || m3 > D) continue;
        const auto cycles = realize_ones(D, std::vector<int>{m1, m2, m3});
        std::vector<int> first(static_cast<std::size_t>(m1 + 1));
        std::iota(first.begin(), first.end(), 1);
        std::vector<int> second = {1};
        for (int x = m1 + 1; x >= m1 + m3 - D + 2; --x) second.push_back(x);
        for (int x = m1 + 2; x <= D + 1; ++x) second.push_back(x);
        const int n = D + 1;
        ++checked;
        const bool ok = cycles.size() == 3 && cycles[0] == cycle1(n, first) && cycles[1] == cycle1(n, second) &&
                        (cycles[0] * cycles[1] * cycles[2]).is_identity() &&
                        cycles[2].support_size() == m3 + 1 && is_transitive(cycles, n);
        if (!ok) {
          ++bad;
          std::printf("  mismatch: D=%d (%d,%d,%d)\n", D, m1, m2, m3);
        }
      }
    }
  }
  line(5, bad == 0, "unit residues: inverse pair for (D,D) and the displayed cycles for every (m1,m2,m3), D <= 6",
       std::to_string(checked) + " cases, " + std::to_string(bad) + " mismatches");
}

struct BelyiInstance {
  int d;
  const char* a;
  const char* b;
  const char* lambda;
};

constexpr BelyiInstance kBelyi[] = {
    {4, "(3,1)", "(2,2)", "(1,1)"},          {3, "(2,1)", "(1,1,1)", "(2,1)"},
    {5, "(3,2)", "(2,2,1)", "(2,1)"},        {6, "(4,2)", "(2,2,2)", "(2,1)"},
    {6, "(3,3)", "(2,2,1,1)", "(1,1,1,1)"},  {7, "(4,3)", "(3,2,2)", "(2,1)"},
    {8, "(5,3)", "(2,2,2,2)", "(2,1,1)"},    {8, "(4,4)", "(2,2,2,2)", "(2,2)"},
    {9, "(6,3)", "(3,3,3)", "(1,1,1)"},      {10, "(7,3)", "(5,5)", "(2)"},
    {10, "(6,4)", "(2,2,2,2,2)", "(2,2,1)"}, {12, "(8,4)", "(4,4,4)", "(2,1)"},
    {12, "(6,6)", "(3,3,3,3)", "(1,1,1,1)"}, {12, "(7,5)", "(3,3,2,2,2)", "(2,2,1)"},
    {11, "(6,5)", "(4,4,3)", "(1,1,1)"},     {5, "(5)", "(1,1,1,1,1)", "(2,2)"},
    {6, "(2,2,2)", "(2,2,2)", "(2,2)"},      {9, "(5,4)", "(3,3,2,1)", "(3,1)"},
    {12, "(9,3)", "(6,6)", "(1,1)"},         {7, "(3,2,2)", "(3,2,1,1)", "(2,2,1)"},
};

void belyi_suite() {
  int bad = 0, count = 0;
  for (const auto& inst : kBelyi) {
    ++count;
    const MainForm form{inst.d, Partition::parse(inst.a), Partition::parse(inst.b), Partition::parse(inst.lambda)};
    const int r = form.lambda.length();
    bool ok = false;
    try {
      const RealizationTuple u = belyi_lift(realize_form(form), r);
      std::vector<int> middle;
      for (int mk : form.lambda.parts()) middle.push_back(mk + 1);
      while (std::accumulate(middle.begin(), middle.end(), 0) < r * inst.d) middle.push_back(1);
      std::vector<Partition> types;
      for (const auto& p : u.perms) types.push_back(cycle_type(p));
      const BranchData tilde(u.degree, types);
      ok = u.perms.size() == 3 && u.degree == r * inst.d && types[0] == form.a.scaled(r) &&
           types[1] == form.b.scaled(r) && types[2] == Partition(middle) && u.product_is_identity() &&
           is_transitive(u.perms, u.degree) && cover_genus(tilde).twice == 0 &&
           total_branching(tilde) == 2 * inst.d * r - 2;
    } catch (const std::exception& e) {
      std::printf("  error: %s\n", e.what());
    }
    if (!ok) {
      ++bad;
      std::printf("  failed: d=%d a=%s b=%s lambda=%s\n", inst.d, inst.a, inst.b, inst.lambda);
    }
  }
  line(6, bad == 0 && count == 20, "three-point lifts of 20 fixed instances (l = r <= 4, d <= 12)",
       std::to_string(count - bad) + "/" + std::to_string(count) + " with scaled types, product id, transitive, genus 0");
}

void property_binary(const char* path) {
  const std::string cmd = std::string("\"") + path + "\"";
  const int status = std::system(cmd.c_str());
  line(7, status == 0, "permutation invariants, 10^4 random cases each", std::string("ran ") + path);
}

void conjecture_probe() {
  const auto t0 = Clock::now();
  const ProbeReport report = probe_conjecture(5, 1);
  for (const auto& bd : report.counterexamples) {
    std::printf("  COUNTEREXAMPLE d=%d %s\n", bd.degree(), bd.to_string().c_str());
  }
  for (const auto& bd : report.undecided) std::printf("  undecided d=%d %s\n", bd.degree(), bd.to_string().c_str());
  line(8, report.clean() && report.probed > 0, "genus-1 probe, d <= 5: every collection realized",
       std::to_string(report.probed) + " probed, " + std::to_string(report.counterexamples.size()) +
           " counterexamples, " + std::to_string(report.undecided.size()) + " undecided, " +
           fmt(seconds_since(t0)));
}

}  // namespace

int main(int argc, char** argv) {
  degree_four_exception();
  main_form_agreement();
  boccara_agreement();
  random_soundness();
  unit_residue_formulas();
  belyi_suite();
  property_binary(argc > 1 ? argv[1] : PERM_PROPERTIES_PATH);
  conjecture_probe();
  std::printf("%s: %d of 8 criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
