#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hlv/partitions/partition.hpp"

namespace hlv {

enum class Basis { m, h, e, p, s };

char basis_name(Basis b);
std::optional<Basis> parse_basis(std::string_view name);

// Position of λ in enumerate_partitions(|λ|).
int partition_index(const Partition& lambda);

// Irreducible character χ^λ at cycle type ρ (Murnaghan–Nakayama rule).
Integer character(const Partition& lambda, const Partition& rho);

// Coefficient of m_λ in p_ρ: the number of ways to distribute the parts of ρ
// into blocks with sums λ_1, λ_2, ...
Integer power_to_monomial(const Partition& rho, const Partition& lambda);

using SparseRow = std::vector<std::pair<int, Rational>>;

// Row i is the expansion of the `from` basis element indexed by
// enumerate_partitions(d)[i] in the `to` basis. Tables are built once per
// (from, to, d) and shared between threads.
const std::vector<SparseRow>& transition(Basis from, Basis to, int d);

}  // namespace hlv
