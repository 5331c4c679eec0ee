#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hlv/symfunc/symfunc.hpp"

namespace hlv {

// Macdonald P_λ(x; q, t) in the monomial basis of one alphabet (truncation
// |λ|), obtained by Gram–Schmidt under <p_ρ, p_ρ> = z_ρ Π (1-q^ρi)/(1-t^ρi),
// processing partitions in increasing lexicographic order.
const SymFunc& macdonald_P(const Partition& lambda);

// J_λ = c_λ P_λ with c_λ = Π_cells (1 - q^a t^(l+1)), monomial basis.
SymFunc integral_J(const Partition& lambda);

struct MacdonaldExpansion {
  Partition lambda;
  Basis basis;
  SymFunc expansion;
};

// H̃_λ(x; q, t) = t^n(λ) J_λ[X/(1-1/t); q, 1/t], in the s or m basis.
// Results are memoised in process and, if a cache directory is configured,
// on disk.
MacdonaldExpansion modified_Htilde(const Partition& lambda, Basis basis = Basis::s);

// Directory for the on-disk Macdonald cache; nullopt disables it.
void set_macdonald_cache_dir(const std::optional<std::filesystem::path>& dir);
std::optional<std::filesystem::path> macdonald_cache_file();

// One-alphabet expansion as "2,1=<canonical> | 1,1,1=<canonical>".
std::string serialize_expansion(const SymFunc& f);
SymFunc parse_expansion(const std::string& text, Basis basis, int truncation);

// 𝓗_λ(z, w) = Π_cells (z^(2a+1) - w^(2l+1))^(2g) / ((z^(2a+2) - w^(2l)) (z^(2a) - w^(2l+2))).
RationalFunction hook_term(const Partition& lambda, int g);

}  // namespace hlv
