#include "hlv/oracle/char_variety.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hlv/error.hpp"

namespace hlv {

namespace {

// Products of all sub-multisets of size m of one class's eigenvalues, for
// each m = 0..n.
std::vector<std::set<SmallField::Elem>> sub_products(const SmallField& f, const SemisimpleClass& c, int n) {
  std::vector<std::set<SmallField::Elem>> out(static_cast<std::size_t>(n + 1));
  out[0].insert(1);
  std::vector<std::set<SmallField::Elem>> next;
  for (const auto& [alpha, mult] : c.eigenvalues) {
    next.assign(static_cast<std::size_t>(n + 1), {});
    for (int m = 0; m <= n; ++m) {
      for (auto x : out[static_cast<std::size_t>(m)]) {
        SmallField::Elem y = x;
        for (int take = 0; take <= mult && m + take <= n; ++take) {
          next[static_cast<std::size_t>(m + take)].insert(y);
          y = f.mul(y, alpha);
        }
      }
    }
    out.swap(next);
  }
  return out;
}

long code_of(const FieldMatrix& m, int q) {
  long code = 0;
  for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) code = code * q + *it;
  return code;
}

}  // namespace

bool is_generic_tuple(const ClassTuple& tuple, const SmallField& f) {
  const int n = tuple.n;
  std::vector<std::vector<std::set<SmallField::Elem>>> subs;
  for (const auto& c : tuple.classes) {
    int total = 0;
    std::set<SmallField::Elem> seen;
    for (const auto& [alpha, mult] : c.eigenvalues) {
      if (alpha <= 0 || alpha >= f.size() || mult <= 0 || !seen.insert(alpha).second) return false;
      total += mult;
    }
    if (total != n) return false;
    subs.push_back(sub_products(f, c, n));
  }
  for (int m = 1; m <= n; ++m) {
    std::set<SmallField::Elem> reach{1};
    for (const auto& s : subs) {
      std::set<SmallField::Elem> next;
      for (auto a : reach) {
        for (auto b : s[static_cast<std::size_t>(m)]) next.insert(f.mul(a, b));
      }
      reach.swap(next);
    }
    const bool hits_one = reach.count(1) > 0;
    if (m == n && !hits_one) return false;
    if (m < n && hits_one) return false;
  }
  return true;
}

std::optional<ClassTuple> generic_class_tuple_search(const MultiPartition& mu, const SmallField& f) {
  ClassTuple tuple;
  tuple.n = mu.n();
  tuple.q = f.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < mu.components().size(); ++i) {
    SemisimpleClass c;
    for (int part : mu[i].parts()) c.eigenvalues.emplace_back(1, part);
    for (std::size_t j = 0; j < c.eigenvalues.size(); ++j) slots.emplace_back(i, j);
    tuple.classes.push_back(std::move(c));
  }
  const int units = f.size() - 1;
  // Odometer over (F_q^*)^{slots}, first slot most significant.
  std::vector<int> digit(slots.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      tuple.classes[slots[s].first].eigenvalues[slots[s].second].first = digit[s] + 1;
    }
    if (is_generic_tuple(tuple, f)) return tuple;
    std::size_t pos = slots.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < units) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (slots.empty()) return std::nullopt;
  }
}

bool in_class(const SmallField& f, const FieldMatrix& x, const SemisimpleClass& c) {
  const int n = x.rows;
  for (const auto& [alpha, mult] : c.eigenvalues) {
    FieldMatrix y = x;
    for (int i = 0; i < n; ++i) y.at(i, i) = f.sub(y.at(i, i), alpha);
    if (mat_rank(f, y) != n - mult) return false;
  }
  return true;
}

PointCount char_variety_point_count(int g, const ClassTuple& tuple, const SmallField& f, int jobs, long budget) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (tuple.q != f.size()) throw std::invalid_argument("class tuple and field disagree on q");
  const int n = tuple.n;
  const int q = f.size();
  const Integer order = gl_order(n, q);
  // Estimate before enumerating anything large.
  const double N = order.get_d();
  double codes = 1;
  for (int i = 0; i < n * n; ++i) codes *= q;
  const double estimate = codes + N * static_cast<double>(tuple.classes.size() + 1) +
                          (g > 0 ? static_cast<double>(g + 1) * N * N : 0) +
                          N * N * static_cast<double>(tuple.classes.size());
  if (estimate > static_cast<double>(budget)) throw BudgetError("instance too large");

  PointCount out;
  long steps = static_cast<long>(codes);
  const std::vector<FieldMatrix> gl = enumerate_gl(f, n);
  const auto size = gl.size();
  std::unordered_map<long, std::size_t> index;
  index.reserve(size * 2);
  for (std::size_t i = 0; i < size; ++i) index.emplace(code_of(gl[i], q), i);
  auto idx = [&](const FieldMatrix& m) { return index.at(code_of(m, q)); };
  std::vector<std::size_t> inverse(size);
  for (std::size_t i = 0; i < size; ++i) inverse[i] = idx(*mat_inverse(f, gl[i]));
  const std::size_t id = idx(FieldMatrix::identity(n));
  steps += static_cast<long>(size);

  // Distribution of products X_1⋯X_k.
  std::vector<Integer> prod(size, 0);
  prod[id] = 1;
  for (const auto& c : tuple.classes) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < size; ++i) {
      if (in_class(f, gl[i], c)) members.push_back(i);
    }
    steps += static_cast<long>(size);
    std::vector<Integer> next(size, 0);
    for (std::size_t m = 0; m < size; ++m) {
      if (prod[m] == 0) continue;
      for (auto x : members) next[idx(mat_mul(f, gl[m], gl[x]))] += prod[m];
      steps += static_cast<long>(members.size());
    }
    prod.swap(next);
  }

  // Distribution of products of g commutators.
  std::vector<Integer> comm_dist(size, 0);
  comm_dist[id] = 1;
  if (g > 0) {
    const int workers = std::max(1, jobs);
    std::vector<std::vector<long>> partial(static_cast<std::size_t>(workers), std::vector<long>(size, 0));
    auto work = [&](int w) {
      const std::size_t lo = size * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
      const std::size_t hi = size * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
      auto& local = partial[static_cast<std::size_t>(w)];
      for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
          const FieldMatrix ab = mat_mul(f, gl[a], gl[b]);
          const FieldMatrix c = mat_mul(f, mat_mul(f, ab, gl[inverse[a]]), gl[inverse[b]]);
          ++local[idx(c)];
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
    work(0);
    for (auto& t : threads) t.join();
    std::vector<long> comm(size, 0);
    for (const auto& p : partial) {
      for (std::size_t i = 0; i < size; ++i) comm[i] += p[i];
    }
    steps += static_cast<long>(size * size);
    for (int j = 0; j < g; ++j) {
      std::vector<Integer> next(size, 0);
      for (std::size_t m = 0; m < size; ++m) {
        if (comm_dist[m] == 0) continue;
        for (std::size_t c = 0; c < size; ++c) {
          if (comm[c] == 0) continue;
          next[idx(mat_mul(f, gl[m], gl[c]))] += comm_dist[m] * comm[c];
        }
        steps += static_cast<long>(size);
      }
      comm_dist.swap(next);
    }
  }

  // Commutator product M and class product P with M P = I.
  out.raw = 0;
  for (std::size_t m = 0; m < size; ++m) {
    if (comm_dist[m] != 0) out.raw += comm_dist[m] * prod[inverse[m]];
  }
  steps += static_cast<long>(size);
  out.budget_steps = steps;
  const Integer pgl = order / (q - 1);
  if (out.raw % pgl != 0) throw MathError("genericity violated");
  out.quotient = out.raw / pgl;
  return out;
}

}  // namespace hlv
