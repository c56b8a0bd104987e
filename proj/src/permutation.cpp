#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent_[std::max(x, y)] = std::min(x, y);
    --components_;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

void require_same_degree(const Permutation& p, const Permutation& q, const char* what) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int image : images_) {
    if (image < 0 || static_cast<std::size_t>(image) >= images_.size() || seen[image]) {
      throw std::invalid_argument("permutation: images are not a bijection");
    }
    seen[image] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation: negative degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cyc : cycles) {
    for (int point : cyc) {
      if (point < 0 || point >= degree) throw std::invalid_argument("permutation: point out of range");
      if (used[point]) throw std::invalid_argument("permutation: repeated point in cycles");
      used[point] = 1;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      p.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

Permutation Permutation::cycle(int degree, std::span<const int> points) {
  return from_cycles(degree, {std::vector<int>(points.begin(), points.end())});
}

Permutation Permutation::transposition(int degree, int x, int y) {
  if (x == y) throw std::invalid_argument("transposition: points must differ");
  const int pts[] = {x, y};
  return cycle(degree, pts);
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip_ws();
  std::string_view rest = text.substr(i);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\n')) {
    rest.remove_suffix(1);
  }
  if (rest == "id" || rest == "e" || rest.empty()) return identity(degree);

  std::vector<std::vector<int>> cycles;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
      if (i >= text.size()) throw std::invalid_argument("cycle notation: missing ')' in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw std::invalid_argument("cycle notation: bad point in '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree) {
        throw std::invalid_argument("cycle notation: point " + std::to_string(value) + " outside 1.." +
                                    std::to_string(degree));
      }
      cyc.push_back(value - 1);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation inv = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<int>(i);
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::support_size() const {
  int moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) moved += images_[i] != static_cast<int>(i);
  return moved;
}

std::string Permutation::to_string() const {
  auto cycles = cycle_factors(*this);
  if (cycles.empty()) return "id";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  require_same_degree(p, g, "conjugate");
  // (g p g^-1)(g(x)) = g(p(x))
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[g(x)] = g(p(x));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> orbits_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> cycle_factors(const Permutation& p) {
  auto all = orbits_of(p);
  std::erase_if(all, [](const auto& cyc) { return cyc.size() < 2; });
  return all;
}

CycleType cycle_type(const Permutation& p) {
  if (p.degree() == 0) throw std::invalid_argument("cycle_type: empty permutation");
  std::vector<int> lengths;
  for (const auto& cyc : orbits_of(p)) lengths.push_back(static_cast<int>(cyc.size()));
  return Partition(std::move(lengths));
}

int cycle_count(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  int count = 0;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (int x = start; !seen[x]; x = p(x)) seen[x] = 1;
  }
  return count;
}

int orbit_count(std::span<const Permutation> perms, int n) {
  UnionFind uf(n);
  for (const auto& p : perms) {
    if (p.degree() != n) throw std::invalid_argument("orbit_count: degree mismatch");
    for (int x = 0; x < n; ++x) uf.unite(x, p(x));
  }
  return uf.components();
}

bool is_transitive(std::span<const Permutation> perms, int n) {
  if (n < 1) throw std::invalid_argument("is_transitive: n must be positive");
  return orbit_count(perms, n) == 1;
}

Permutation RealizationTuple::product() const {
  Permutation acc = Permutation::identity(degree);
  for (const auto& p : perms) acc = compose(acc, p);
  return acc;
}

bool RealizationTuple::product_is_identity() const { return product().is_identity(); }

RealizationTuple hurwitz_move(const RealizationTuple& t, std::size_t i) {
  if (i + 1 >= t.perms.size()) throw std::out_of_range("hurwitz_move: index out of range");
  RealizationTuple out = t;
  const Permutation& x = t.perms[i];
  const Permutation& y = t.perms[i + 1];
  out.perms[i] = conjugate(y, x);
  out.perms[i + 1] = x;
  if (out.roles.size() == t.perms.size()) std::swap(out.roles[i], out.roles[i + 1]);
  return out;
}

RealizationTuple inverse_hurwitz_move(const RealizationTuple& t, std::size_t i) {
  if (i + 1 >= t.perms.size()) throw std::out_of_range("inverse_hurwitz_move: index out of range");
  RealizationTuple out = t;
  const Permutation& u = t.perms[i];
  const Permutation& v = t.perms[i + 1];
  out.perms[i] = v;
  out.perms[i + 1] = conjugate(u, v.inverse());
  if (out.roles.size() == t.perms.size()) std::swap(out.roles[i], out.roles[i + 1]);
  return out;
}

}  // namespace hurwitz
