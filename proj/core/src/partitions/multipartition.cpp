#include "hlv/partitions/multipartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hlv {

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs at least one component");
  const int n = components_.front().size();
  if (n < 1) throw std::invalid_argument("multipartition components must be nonempty");
  for (const auto& c : components_) {
    if (c.size() != n) throw std::invalid_argument("multipartition components must have equal size");
  }
}

MultiPartition MultiPartition::sorted() const {
  auto c = components_;
  std::sort(c.begin(), c.end(), std::greater<>());
  return MultiPartition(std::move(c));
}

std::string MultiPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += '|';
    s += components_[i].to_string();
  }
  return s;
}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    const auto bar = text.find('|', pos);
    comps.push_back(Partition::parse(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return MultiPartition(std::move(comps));
}

long dimension_d_mu(const MultiPartition& mu, int g) {
  const long n = mu.n();
  long d = n * n * (2L * g - 2 + mu.k()) + 2;
  for (const auto& c : mu.components()) {
    for (int p : c.parts()) d -= static_cast<long>(p) * p;
  }
  return d;
}

bool is_indivisible(const MultiPartition& mu) {
  int g = 0;
  for (const auto& c : mu.components()) g = std::gcd(g, c.parts_gcd());
  return g == 1;
}

namespace {

void product(const std::vector<Partition>& ps, int k, std::size_t min_index, bool unordered,
             std::vector<Partition>& current, std::vector<MultiPartition>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = unordered ? min_index : 0; i < ps.size(); ++i) {
    current.push_back(ps[i]);
    product(ps, k, i, unordered, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int n, int k) {
  std::vector<MultiPartition> out;
  std::vector<Partition> current;
  product(enumerate_partitions(n), k, 0, false, current, out);
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions_unordered(int n, int k) {
  std::vector<MultiPartition> out;
  std::vector<Partition> current;
  product(enumerate_partitions(n), k, 0, true, current, out);
  return out;
}

}  // namespace hlv
