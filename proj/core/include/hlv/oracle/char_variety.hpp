#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hlv/oracle/finite_field.hpp"
#include "hlv/partitions/multipartition.hpp"

namespace hlv {

// One semisimple conjugacy class of GL_n(F_q): distinct eigenvalues with
// their multiplicities.
struct SemisimpleClass {
  std::vector<std::pair<SmallField::Elem, int>> eigenvalues;
};

struct ClassTuple {
  int n = 0;
  int q = 0;
  std::vector<SemisimpleClass> classes;
};

// Type μ check plus the genericity condition: the product of all eigenvalues
// (with multiplicity) is 1, and no choice of sub-multisets of a common size
// 0 < n' < n, one from each class, has product 1.
bool is_generic_tuple(const ClassTuple& tuple, const SmallField& f);

// First generic tuple of type μ in lexicographic order of the eigenvalue
// codes, or nullopt when none exists over F_q.
std::optional<ClassTuple> generic_class_tuple_search(const MultiPartition& mu, const SmallField& f);

// True iff x lies in the semisimple class c.
bool in_class(const SmallField& f, const FieldMatrix& x, const SemisimpleClass& c);

struct PointCount {
  Integer raw;
  Integer quotient;
  long budget_steps = 0;
};

// Number of solutions of [A_1,B_1]⋯[A_g,B_g] X_1⋯X_k = I with A_j, B_j in
// GL_n(F_q) and X_i in the i-th class; quotient = raw / |PGL_n(F_q)|.
// Throws BudgetError "instance too large" when the estimated step count
// exceeds `budget`, and MathError "genericity violated" when |PGL_n| does not
// divide raw. The commutator loop is split over `jobs` threads by ranges of A.
PointCount char_variety_point_count(int g, const ClassTuple& tuple, const SmallField& f, int jobs = 1,
                                    long budget = 100'000'000);

}  // namespace hlv
