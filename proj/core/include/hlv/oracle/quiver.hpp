#pragma once

#include <vector>

#include "hlv/oracle/finite_field.hpp"
#include "hlv/partitions/comet.hpp"

namespace hlv {

// Vertices of a comet quiver: index 0 is the centre, then each leg's
// vertices [i,1], [i,2], ... moving away from it. Zero dimensions are dropped.
struct CometShape {
  int g = 0;
  std::vector<int> dims;
  // Arrows as (source, target); the g loops come first, then the leg arrows
  // [i,s] -> [i,s-1] oriented toward the centre.
  std::vector<std::pair<int, int>> arrows;
};

CometShape comet_shape(const CometDimensionVector& v);

struct QuiverRep {
  CometShape shape;
  std::vector<FieldMatrix> maps;  // one per arrow, dims[target] x dims[source]
};

struct EndoAnalysis {
  int dim_end = 0;
  bool is_local = false;
  int residue_degree = 0;  // 0 when not local
  [[nodiscard]] bool absolutely_indecomposable() const { return is_local && residue_degree == 1; }
};

// Endomorphism algebra of a representation, by enumerating all q^dim_end
// intertwiners. Throws BudgetError "instance too large" beyond `budget`.
EndoAnalysis endo_algebra_analysis(const QuiverRep& rep, const SmallField& f, long budget = 1'000'000);

struct QuiverCount {
  Integer count;               // orbits of absolutely indecomposable representations
  long orbits = 0;
  Integer representations;     // size of the representation space
  Integer orbit_size_sum;      // equals `representations`
  long budget_steps = 0;
};

// Orbit enumeration over the whole representation space under Π GL_{dims}.
// The endomorphism analysis of orbit representatives is split over `jobs`
// threads. Throws BudgetError "instance too large" when space size times group
// order exceeds `budget`.
QuiverCount quiver_abs_indec_count(const CometDimensionVector& v, const SmallField& f, int jobs = 1,
                                   long budget = 100'000'000);

}  // namespace hlv
