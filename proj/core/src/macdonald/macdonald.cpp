#include "hlv/macdonald/macdonald.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hlv/arith/text.hpp"
#include "hlv/cache/record_cache.hpp"

namespace hlv {

namespace {

const Poly kQ = Poly::variable(Var::q);
const Poly kT = Poly::variable(Var::t);

Poly one_minus(const Poly& x) { return Poly(1) - x; }

Poly q_t_monomial(int a, int b) {
  return Poly::monomial(Monomial::from_exponents({0, 0, static_cast<unsigned>(a), static_cast<unsigned>(b), 0, 0, 0}),
                        Rational(1));
}

using Vec = std::vector<RationalFunction>;

// All P_λ for λ ⊢ d, as p-basis vectors indexed like enumerate_partitions(d).
std::vector<Vec> gram_schmidt(int d) {
  const auto& parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  Vec weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly num(Rational(parts[i].z()));
    Poly den(1);
    for (int r : parts[i].parts()) {
      num = num * one_minus(kQ.pow(static_cast<unsigned>(r)));
      den = den * one_minus(kT.pow(static_cast<unsigned>(r)));
    }
    weight[i] = RationalFunction::normalize(num, den);
  }
  auto inner = [&](const Vec& a, const Vec& b) {
    RationalFunction s;
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i] * weight[i];
    }
    return s;
  };
  const auto& m_to_p = transition(Basis::m, Basis::p, d);
  std::vector<Vec> result(n);
  std::vector<RationalFunction> norms(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t idx = n - 1 - step;
    Vec m(n);
    for (const auto& [j, c] : m_to_p[idx]) m[static_cast<std::size_t>(j)] = RationalFunction(c);
    Vec v = m;
    for (std::size_t prev = idx + 1; prev < n; ++prev) {
      const RationalFunction c = inner(m, result[prev]) / norms[prev];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!result[prev][i].is_zero()) v[i] -= c * result[prev][i];
      }
    }
    norms[idx] = inner(v, v);
    result[idx] = std::move(v);
  }
  return result;
}

SymFunc from_p_vector(const Vec& v, int d) {
  SymFunc f(1, d, Basis::p);
  const auto& parts = enumerate_partitions(d);
  for (std::size_t i = 0; i < v.size(); ++i) f.add_term({parts[i]}, v[i]);
  return f;
}

struct Store {
  std::mutex mutex;
  std::map<int, std::vector<SymFunc>> p_by_degree;
  std::map<std::pair<Partition, Basis>, SymFunc> htilde;
  std::optional<std::filesystem::path> dir;
  std::unique_ptr<RecordCache> disk;
};

Store& store() {
  static Store s;
  return s;
}

RationalFunction cell_factor(int a, int l, int g) {
  const Poly z = Poly::variable(Var::z);
  const Poly w = Poly::variable(Var::w);
  auto zw = [&](int ez, int ew) {
    return z.pow(static_cast<unsigned>(ez)) - w.pow(static_cast<unsigned>(ew));
  };
  const Poly den = zw(2 * a + 2, 2 * l) * zw(2 * a, 2 * l + 2);
  const Poly num = zw(2 * a + 1, 2 * l + 1).pow(static_cast<unsigned>(2 * g));
  return RationalFunction::normalize(num, den);
}

SymFunc compute_htilde(const Partition& lambda) {
  const int d = lambda.size();
  const SymFunc jp = convert_basis(integral_J(lambda), Basis::p);
  const RationalFunction inv_t = RationalFunction::normalize(Poly(1), kT);
  SymFunc h(1, d, Basis::p);
  for (const auto& [key, c] : jp.terms()) {
    RationalFunction coeff = c.substitute(Var::t, inv_t);
    // t^n(λ) / Π (1 - t^-ρi) = t^n(λ) Π t^ρi / (t^ρi - 1).
    Poly num = kT.pow(static_cast<unsigned>(lambda.n() + d));
    Poly den(1);
    for (int r : key[0].parts()) den = den * (kT.pow(static_cast<unsigned>(r)) - Poly(1));
    coeff *= RationalFunction::normalize(num, den);
    h.add_term(key, coeff);
  }
  return h;
}

}  // namespace

const SymFunc& macdonald_P(const Partition& lambda) {
  if (lambda.empty()) {
    static const SymFunc unit = SymFunc::constant(1, 0, RationalFunction(1), Basis::m);
    return unit;
  }
  const int d = lambda.size();
  Store& s = store();
  std::lock_guard lock(s.mutex);
  auto it = s.p_by_degree.find(d);
  if (it == s.p_by_degree.end()) {
    std::vector<SymFunc> ps;
    for (const auto& v : gram_schmidt(d)) ps.push_back(convert_basis(from_p_vector(v, d), Basis::m));
    it = s.p_by_degree.emplace(d, std::move(ps)).first;
  }
  return it->second[static_cast<std::size_t>(partition_index(lambda))];
}

SymFunc integral_J(const Partition& lambda) {
  Poly c(1);
  for (const auto& cell : lambda.cells()) c = c * one_minus(q_t_monomial(cell.arm, cell.leg + 1));
  return macdonald_P(lambda) * RationalFunction(c);
}

void set_macdonald_cache_dir(const std::optional<std::filesystem::path>& dir) {
  Store& s = store();
  std::lock_guard lock(s.mutex);
  s.dir = dir;
  s.disk.reset();
  if (dir) s.disk = std::make_unique<RecordCache>(*dir / "macdonald.cache", "MACDONALD-CACHE v1", 2);
}

std::optional<std::filesystem::path> macdonald_cache_file() {
  Store& s = store();
  std::lock_guard lock(s.mutex);
  if (!s.disk) return std::nullopt;
  return s.disk->path();
}

std::string serialize_expansion(const SymFunc& f) {
  if (f.k() != 1) throw std::invalid_argument("expansion serialisation is for one alphabet");
  std::string out;
  for (const auto& [key, c] : f.terms()) {
    if (!out.empty()) out += " | ";
    out += key[0].to_string() + "=" + to_canonical(c);
  }
  return out;
}

SymFunc parse_expansion(const std::string& text, Basis basis, int truncation) {
  SymFunc f(1, truncation, basis);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(" | ", pos);
    if (end == std::string::npos) end = text.size();
    const std::string entry = text.substr(pos, end - pos);
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed expansion entry");
    f.add_term({Partition::parse(entry.substr(0, eq))}, parse_canonical(entry.substr(eq + 1)));
    pos = end == text.size() ? end : end + 3;
  }
  return f;
}

MacdonaldExpansion modified_Htilde(const Partition& lambda, Basis basis) {
  if (basis != Basis::s && basis != Basis::m) throw std::invalid_argument("H~ is provided in the s or m basis");
  Store& s = store();
  RecordCache* disk = nullptr;
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.htilde.find({lambda, basis}); it != s.htilde.end()) return {lambda, basis, it->second};
    disk = s.disk.get();
  }
  const std::string key = lambda.to_string() + ";" + std::string(1, basis_name(basis));
  std::optional<SymFunc> result;
  if (disk) {
    if (auto hit = disk->get(key)) {
      try {
        result = parse_expansion(*hit, basis, lambda.size());
      } catch (const std::exception&) {
        result.reset();
      }
    }
  }
  if (!result) {
    SymFunc h = lambda.empty() ? SymFunc::constant(1, 0, RationalFunction(1), basis)
                               : convert_basis(compute_htilde(lambda), basis);
    if (disk) disk->put(key, serialize_expansion(h));
    result = std::move(h);
  }
  std::lock_guard lock(s.mutex);
  s.htilde.emplace(std::make_pair(lambda, basis), *result);
  return {lambda, basis, *result};
}

RationalFunction hook_term(const Partition& lambda, int g) {
  RationalFunction r(1);
  for (const auto& cell : lambda.cells()) r *= cell_factor(cell.arm, cell.leg, g);
  return r;
}

}  // namespace hlv
