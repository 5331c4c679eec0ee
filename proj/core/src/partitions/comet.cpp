#include "hlv/partitions/comet.hpp"

#include <stdexcept>

namespace hlv {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid dimension vector");
    }
    if (used != token.size() || v < 0) throw std::invalid_argument("invalid dimension vector");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::string CometDimensionVector::to_string() const {
  std::string s = std::to_string(v0) + ";";
  for (std::size_t i = 0; i < legs.size(); ++i) {
    s += i ? " / " : " ";
    for (std::size_t j = 0; j < legs[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(legs[i][j]);
    }
  }
  return s;
}

CometDimensionVector CometDimensionVector::parse(std::string_view text, int g) {
  CometDimensionVector v;
  v.g = g;
  const auto semi = text.find(';');
  const auto head = parse_ints(text.substr(0, semi));
  if (head.size() != 1) throw std::invalid_argument("invalid dimension vector");
  v.v0 = head.front();
  if (semi != std::string_view::npos) {
    std::string_view rest = text.substr(semi + 1);
    if (rest.find_first_not_of(" \t") != std::string_view::npos) {
      std::size_t pos = 0;
      while (true) {
        const auto slash = rest.find('/', pos);
        v.legs.push_back(parse_ints(rest.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos)));
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
      }
    }
  }
  return v;
}

MultiPartition dimvec_to_multipartition(const CometDimensionVector& v) {
  if (v.v0 < 1) throw std::invalid_argument("invalid dimension vector");
  std::vector<Partition> comps;
  for (const auto& leg : v.legs) {
    int prev_entry = v.v0;
    int last = v.v0;
    std::vector<int> parts;
    for (int x : leg) {
      if (x < 0 || x > prev_entry) throw std::invalid_argument("invalid dimension vector");
      prev_entry = x;
      if (x < last) {
        parts.push_back(last - x);
        last = x;
      }
    }
    if (last > 0) parts.push_back(last);
    comps.emplace_back(std::move(parts));
  }
  if (comps.empty()) comps.emplace_back(std::vector<int>{v.v0});
  return MultiPartition(std::move(comps));
}

CometDimensionVector multipartition_to_dimvec(const MultiPartition& mu, int g) {
  CometDimensionVector v;
  v.g = g;
  v.v0 = mu.n();
  for (const auto& c : mu.components()) {
    std::vector<int> leg;
    int tail = mu.n();
    for (int p : c.parts()) {
      tail -= p;
      if (tail > 0) leg.push_back(tail);
    }
    v.legs.push_back(std::move(leg));
  }
  return v;
}

}  // namespace hlv
