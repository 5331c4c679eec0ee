#include "hlv/oracle/quiver.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "hlv/error.hpp"

namespace hlv {

namespace {

using Elem = SmallField::Elem;

// Element of the endomorphism algebra: one square block per vertex.
using Blocks = std::vector<FieldMatrix>;

bool is_zero(const Blocks& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldMatrix& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](Elem e) { return e == 0; });
  });
}

Blocks square(const SmallField& f, const Blocks& x) {
  Blocks out;
  out.reserve(x.size());
  for (const auto& m : x) out.push_back(mat_mul(f, m, m));
  return out;
}

bool is_identity(const Blocks& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldMatrix& m) { return m == FieldMatrix::identity(m.rows); });
}

double power(int q, long e) {
  double r = 1;
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

CometShape comet_shape(const CometDimensionVector& v) {
  if (v.v0 < 1 || v.g < 0) throw std::invalid_argument("invalid dimension vector");
  CometShape s;
  s.g = v.g;
  s.dims.push_back(v.v0);
  for (int l = 0; l < v.g; ++l) s.arrows.emplace_back(0, 0);
  for (const auto& leg : v.legs) {
    int prev = 0;
    for (int d : leg) {
      if (d < 0) throw std::invalid_argument("invalid dimension vector");
      if (d == 0) break;
      const int vertex = static_cast<int>(s.dims.size());
      s.dims.push_back(d);
      s.arrows.emplace_back(vertex, prev);
      prev = vertex;
    }
  }
  return s;
}

EndoAnalysis endo_algebra_analysis(const QuiverRep& rep, const SmallField& f, long budget) {
  const auto& dims = rep.shape.dims;
  if (rep.maps.size() != rep.shape.arrows.size()) throw std::invalid_argument("representation shape mismatch");
  std::vector<int> offset;
  int unknowns = 0;
  for (int d : dims) {
    offset.push_back(unknowns);
    unknowns += d * d;
  }
  // e_t φ - φ e_s = 0 for every arrow φ: s -> t, entrywise.
  int eqs = 0;
  for (const auto& [s, t] : rep.shape.arrows) eqs += dims[static_cast<std::size_t>(t)] * dims[static_cast<std::size_t>(s)];
  FieldMatrix system(std::max(eqs, 1), unknowns);
  int row = 0;
  for (std::size_t a = 0; a < rep.shape.arrows.size(); ++a) {
    const auto [s, t] = rep.shape.arrows[a];
    const FieldMatrix& phi = rep.maps[a];
    const int ds = dims[static_cast<std::size_t>(s)];
    const int dt = dims[static_cast<std::size_t>(t)];
    if (phi.rows != dt || phi.cols != ds) throw std::invalid_argument("representation shape mismatch");
    for (int i = 0; i < dt; ++i) {
      for (int j = 0; j < ds; ++j, ++row) {
        // (e_t φ)_{ij} = Σ_l e_t[i,l] φ[l,j]
        for (int l = 0; l < dt; ++l) {
          auto& c = system.at(row, offset[static_cast<std::size_t>(t)] + i * dt + l);
          c = f.add(c, phi.at(l, j));
        }
        // (φ e_s)_{ij} = Σ_l φ[i,l] e_s[l,j]
        for (int l = 0; l < ds; ++l) {
          auto& c = system.at(row, offset[static_cast<std::size_t>(s)] + l * ds + j);
          c = f.sub(c, phi.at(i, l));
        }
      }
    }
  }
  const auto basis = null_space(f, system);
  EndoAnalysis out;
  out.dim_end = static_cast<int>(basis.size());
  if (power(f.size(), out.dim_end) > static_cast<double>(budget)) throw BudgetError("instance too large");

  // x^e = 0 for a block-diagonal x iff each block is nilpotent, and a nilpotent
  // block of size d satisfies x^d = 0, so e = max dim suffices.
  const int max_dim = *std::max_element(dims.begin(), dims.end());
  int squarings = 0;
  while ((1 << squarings) < max_dim) ++squarings;

  std::vector<Elem> coeff(basis.size(), 0);
  long nilpotents = 0;
  bool local = true;
  const long total = static_cast<long>(power(f.size(), out.dim_end));
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& e : coeff) {
      e = static_cast<Elem>(c % f.size());
      c /= f.size();
    }
    std::vector<Elem> flat(static_cast<std::size_t>(unknowns), 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (int u = 0; u < unknowns; ++u) {
        flat[static_cast<std::size_t>(u)] =
            f.add(flat[static_cast<std::size_t>(u)], f.mul(coeff[b], basis[b][static_cast<std::size_t>(u)]));
      }
    }
    Blocks x;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      FieldMatrix m(dims[v], dims[v]);
      std::copy_n(flat.begin() + offset[v], dims[v] * dims[v], m.a.begin());
      x.push_back(std::move(m));
    }
    const Blocks x2 = square(f, x);
    if (x2 == x && !is_zero(x) && !is_identity(x)) local = false;
    Blocks p = x;
    for (int i = 0; i < squarings; ++i) p = square(f, p);
    if (is_zero(p)) ++nilpotents;
  }
  out.is_local = local;
  if (local) {
    int rad = 0;
    for (long n = nilpotents; n > 1; n /= f.size()) ++rad;
    out.residue_degree = out.dim_end - rad;
  }
  return out;
}

QuiverCount quiver_abs_indec_count(const CometDimensionVector& v, const SmallField& f, int jobs, long budget) {
  const CometShape shape = comet_shape(v);
  const int q = f.size();
  long entries = 0;
  for (const auto& [s, t] : shape.arrows) {
    entries += static_cast<long>(shape.dims[static_cast<std::size_t>(s)]) * shape.dims[static_cast<std::size_t>(t)];
  }
  Integer group_order = 1;
  for (int d : shape.dims) group_order *= gl_order(d, q);
  const double space_d = power(q, entries);
  if (space_d * group_order.get_d() > static_cast<double>(budget)) throw BudgetError("instance too large");
  const auto space = static_cast<long>(space_d);

  std::vector<std::vector<FieldMatrix>> gl;
  std::vector<std::vector<FieldMatrix>> gl_inv;
  for (int d : shape.dims) {
    gl.push_back(enumerate_gl(f, d));
    std::vector<FieldMatrix> inv;
    for (const auto& m : gl.back()) inv.push_back(*mat_inverse(f, m));
    gl_inv.push_back(std::move(inv));
  }

  auto decode = [&](long code) {
    std::vector<FieldMatrix> maps;
    for (const auto& [s, t] : shape.arrows) {
      FieldMatrix m(shape.dims[static_cast<std::size_t>(t)], shape.dims[static_cast<std::size_t>(s)]);
      for (auto& e : m.a) {
        e = static_cast<Elem>(code % q);
        code /= q;
      }
      maps.push_back(std::move(m));
    }
    return maps;
  };
  auto encode = [&](const std::vector<FieldMatrix>& maps) {
    long code = 0;
    for (auto m = maps.rbegin(); m != maps.rend(); ++m) {
      for (auto e = m->a.rbegin(); e != m->a.rend(); ++e) code = code * q + *e;
    }
    return code;
  };

  QuiverCount out;
  out.representations = Integer(space);
  out.orbit_size_sum = 0;
  std::vector<bool> visited(static_cast<std::size_t>(space), false);
  std::vector<long> reps;
  long steps = 0;
  std::vector<std::size_t> choice(shape.dims.size(), 0);
  for (long code = 0; code < space; ++code) {
    if (visited[static_cast<std::size_t>(code)]) continue;
    reps.push_back(code);
    const auto maps = decode(code);
    long orbit = 0;
    std::fill(choice.begin(), choice.end(), 0);
    // Odometer over Π GL_{dims}; φ: s -> t maps to g_t φ g_s^{-1}.
    while (true) {
      std::vector<FieldMatrix> moved;
      for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(shape.arrows[a].first);
        const auto t = static_cast<std::size_t>(shape.arrows[a].second);
        moved.push_back(mat_mul(f, mat_mul(f, gl[t][choice[t]], maps[a]), gl_inv[s][choice[s]]));
      }
      const long image = encode(moved);
      if (!visited[static_cast<std::size_t>(image)]) {
        visited[static_cast<std::size_t>(image)] = true;
        ++orbit;
      }
      ++steps;
      std::size_t pos = 0;
      while (pos < choice.size() && ++choice[pos] == gl[pos].size()) choice[pos++] = 0;
      if (pos == choice.size()) break;
    }
    out.orbit_size_sum += orbit;
  }
  out.orbits = static_cast<long>(reps.size());

  const int workers = std::max(1, jobs);
  std::vector<char> good(reps.size(), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < reps.size(); i += static_cast<std::size_t>(workers)) {
        const QuiverRep rep{shape, decode(reps[i])};
        good[i] = endo_algebra_analysis(rep, f).absolutely_indecomposable() ? 1 : 0;
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  out.count = static_cast<long>(std::count(good.begin(), good.end(), 1));
  out.budget_steps = steps + out.orbits;
  if (out.orbit_size_sum != out.representations) throw MathError("internal inconsistency");
  return out;
}

}  // namespace hlv
