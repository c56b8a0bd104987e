#include "hurwitz/branch_data.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

BranchData::BranchData(int degree, std::vector<Partition> partitions)
    : degree_(degree), partitions_(std::move(partitions)) {
  if (degree_ < 1) throw std::invalid_argument("branch data: degree must be positive");
  for (const auto& part : partitions_) {
    if (part.total() != degree_) {
      throw std::invalid_argument("branch data: partition " + part.to_string() + " does not sum to degree " +
                                  std::to_string(degree_));
    }
  }
}

BranchData BranchData::parse(int degree, std::string_view text) {
  std::vector<Partition> partitions;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    if (c != '(') throw std::invalid_argument("branch data: expected '(' in '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("branch data: missing ')' in '" + std::string(text) + "'");
    }
    partitions.push_back(Partition::parse(text.substr(i, close - i + 1)));
    i = close + 1;
  }
  return BranchData(degree, std::move(partitions));
}

BranchData BranchData::without_trivial() const {
  std::vector<Partition> kept;
  for (const auto& part : partitions_) {
    if (!part.is_trivial()) kept.push_back(part);
  }
  return BranchData(degree_, std::move(kept));
}

std::vector<Partition> BranchData::sorted_partitions() const {
  std::vector<Partition> sorted = partitions_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

std::string BranchData::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    if (i) out += ' ';
    out += partitions_[i].to_string();
  }
  return out;
}

bool operator==(const BranchData& lhs, const BranchData& rhs) {
  return lhs.degree_ == rhs.degree_ && lhs.sorted_partitions() == rhs.sorted_partitions();
}

int total_branching(const BranchData& bd) {
  int v = 0;
  for (const auto& part : bd.partitions()) v += bd.degree() - part.length();
  return v;
}

bool is_compatible(const BranchData& bd) { return total_branching(bd) % 2 == 0; }

std::string CoverGenus::to_string() const {
  if (is_integer()) return std::to_string(value());
  return std::to_string(twice) + "/2";
}

CoverGenus cover_genus(const BranchData& bd, int base_genus) {
  // 2 g(X) = v + 2 + d (2 g(Y) - 2)
  long v = total_branching(bd);
  long d = bd.degree();
  return CoverGenus{v + 2 + d * (2L * base_genus - 2)};
}

ResidueVector::ResidueVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw std::invalid_argument("residue vector: needs at least two entries");
  long sum = 0;
  for (int e : entries_) {
    if (e == 0) throw std::invalid_argument("residue vector: zero entry");
    sum += e;
  }
  if (sum != 0) throw std::invalid_argument("residue vector: entries do not sum to zero");
}

ResidueVector::ResidueVector(std::vector<int> zeros, std::vector<int> poles)
    : ResidueVector([&] {
        std::vector<int> entries = std::move(zeros);
        for (int b : poles) entries.push_back(-b);
        return entries;
      }()) {}

std::vector<int> ResidueVector::zeros() const {
  std::vector<int> out;
  for (int e : entries_) {
    if (e > 0) out.push_back(e);
  }
  return out;
}

std::vector<int> ResidueVector::poles() const {
  std::vector<int> out;
  for (int e : entries_) {
    if (e < 0) out.push_back(-e);
  }
  return out;
}

int ResidueVector::positive_sum() const {
  int sum = 0;
  for (int e : entries_) {
    if (e > 0) sum += e;
  }
  return sum;
}

std::string ResidueVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

ResidueVector residue_vector_of(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) {
    throw std::invalid_argument("residue_vector_of: " + a.to_string() + " and " + b.to_string() +
                                " have different totals");
  }
  std::vector<int> zeros(a.parts().begin(), a.parts().end());
  std::vector<int> poles(b.parts().begin(), b.parts().end());
  return ResidueVector(std::move(zeros), std::move(poles));
}

int rv_gcd(const ResidueVector& rv) {
  int g = 0;
  for (int e : rv.entries()) g = std::gcd(g, e < 0 ? -e : e);
  return g;
}

int rv_degree(const ResidueVector& rv) { return rv.positive_sum() / rv_gcd(rv); }

bool is_primitive(const ResidueVector& rv) { return rv_gcd(rv) == 1; }

PrimitiveReduction primitive_reduce(const ResidueVector& rv) {
  int k = rv_gcd(rv);
  std::vector<int> entries(rv.entries().begin(), rv.entries().end());
  for (int& e : entries) e /= k;
  return PrimitiveReduction{ResidueVector(std::move(entries)), k};
}

std::vector<Partition> MainForm::extra_partitions() const {
  std::vector<Partition> out;
  for (int m : lambda.parts()) out.push_back(Partition::hook(degree, m));
  return out;
}

BranchData MainForm::to_branch_data() const {
  std::vector<Partition> partitions = {a, b};
  for (auto& extra : extra_partitions()) partitions.push_back(std::move(extra));
  return BranchData(degree, std::move(partitions));
}

int MainForm::gcd() const {
  int g = 0;
  for (int x : a.parts()) g = std::gcd(g, x);
  for (int x : b.parts()) g = std::gcd(g, x);
  return g;
}

void validate(const MainForm& form) {
  if (form.a.total() != form.degree || form.b.total() != form.degree) {
    throw std::invalid_argument("main form: a and b must be partitions of the degree");
  }
  if (form.lambda.total() != form.a.length() + form.b.length() - 2) {
    throw std::invalid_argument("main form: lambda must be a partition of p + q - 2");
  }
  if (form.lambda.weight() + 1 > form.degree) {
    throw std::invalid_argument("main form: every m_k + 1 must be at most the degree");
  }
}

std::vector<MainForm> classify_form(const BranchData& bd) {
  std::vector<MainForm> forms;
  const auto parts = bd.sorted_partitions();
  const std::size_t n = parts.size();
  if (n < 3) return forms;
  std::vector<int> excess(n);
  for (std::size_t k = 0; k < n; ++k) excess[k] = parts[k].hook_excess();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // parts is sorted descending, so parts[i] >= parts[j]
      std::vector<int> lambda;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (k == i || k == j) continue;
        if (excess[k] < 1) ok = false;
        else lambda.push_back(excess[k]);
      }
      if (!ok) continue;
      const int m = parts[i].length() + parts[j].length() - 2;
      if (m <= 0 || std::accumulate(lambda.begin(), lambda.end(), 0) != m) continue;
      MainForm form{bd.degree(), parts[i], parts[j], Partition(std::move(lambda))};
      if (std::find(forms.begin(), forms.end(), form) == forms.end()) forms.push_back(std::move(form));
    }
  }
  return forms;
}

}  // namespace hurwitz
