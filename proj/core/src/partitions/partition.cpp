#include "hlv/partitions/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hlv {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part in partition");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

int Partition::arm(int i, int j) const { return part(i - 1) - j; }

int Partition::leg(int i, int j) const {
  int l = 0;
  for (int r = i; r < length() && parts_[static_cast<std::size_t>(r)] >= j; ++r) ++l;
  return l;
}

std::vector<CellStats> Partition::cells() const {
  const Partition c = conjugate();
  std::vector<CellStats> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= part(i - 1); ++j) out.push_back({i, j, part(i - 1) - j, c.part(j - 1) - i});
  }
  return out;
}

std::vector<int> Partition::hooks() const {
  std::vector<int> h;
  for (const auto& c : cells()) h.push_back(c.hook());
  return h;
}

int Partition::n() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[static_cast<std::size_t>(i)];
  return s;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Integer Partition::z() const {
  Integer r = 1;
  const auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int k = 1; k <= m[i]; ++k) r *= static_cast<unsigned long>(i) * static_cast<unsigned long>(k);
  }
  return r;
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) return false;
  int a = 0;
  int b = 0;
  for (int i = 0; i < std::max(length(), other.length()); ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b) return false;
  }
  return true;
}

int Partition::parts_gcd() const {
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) {
      token.clear();
      return;
    }
    const auto e = token.find_last_not_of(" \t");
    const std::string t = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    if (used != t.size() || v <= 0) throw std::invalid_argument("malformed partition: " + std::string(text));
    parts.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.find_first_not_of(" \t") == std::string::npos) {
        throw std::invalid_argument("malformed partition: " + std::string(text));
      }
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing: " + std::string(text));
  }
  return Partition(std::move(parts));
}

PartitionStats partition_stats(const Partition& lambda) {
  return {lambda.cells(), lambda.n(), lambda.z(), lambda.conjugate()};
}

Poly hook_polynomial(const Partition& lambda) {
  Poly h(1);
  for (int hook : lambda.hooks()) {
    h = h * (Poly(1) - Poly::variable(Var::q, static_cast<unsigned>(hook)));
  }
  return h;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, current, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

}  // namespace hlv
