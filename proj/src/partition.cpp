#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition: no parts");
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  bool open = false;
  bool closed = false;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (open || closed || !parts.empty()) {
        throw std::invalid_argument("partition: unexpected '(' in '" + std::string(text) + "'");
      }
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open || closed) {
        throw std::invalid_argument("partition: unbalanced ')' in '" + std::string(text) + "'");
      }
      closed = true;
      ++i;
    } else if (c == ',' || c == ' ' || c == '\t') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (closed) throw std::invalid_argument("partition: trailing text in '" + std::string(text) + "'");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw std::invalid_argument("partition: bad number in '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      parts.push_back(value);
    } else {
      throw std::invalid_argument("partition: unexpected character in '" + std::string(text) + "'");
    }
  }
  if (open && !closed) throw std::invalid_argument("partition: missing ')' in '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

Partition Partition::hook(int degree, int m) {
  if (m < 0 || m + 1 > degree) throw std::invalid_argument("hook partition: need 0 <= m < degree");
  std::vector<int> parts(static_cast<std::size_t>(degree - m), 1);
  parts.front() = m + 1;
  return Partition(std::move(parts));
}

Partition Partition::trivial(int degree) {
  if (degree < 1) throw std::invalid_argument("trivial partition: degree must be positive");
  return Partition(std::vector<int>(static_cast<std::size_t>(degree), 1));
}

Partition Partition::scaled(int factor) const {
  std::vector<int> parts = parts_;
  for (int& part : parts) part *= factor;
  return Partition(std::move(parts));
}

int Partition::hook_excess() const {
  if (parts_.front() < 2) return 0;
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] != 1) return 0;
  }
  return parts_.front() - 1;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

}  // namespace hurwitz
