#ifndef DIMDIST_CARPET_HPP
#define DIMDIST_CARPET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dimdist/measure.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

/// Fat Sierpinski carpet S_a: split [0,1]^2 into a_1^2 squares, remove the
/// open central one, recurse with a_2, a_3, ... Each a_n is odd and >= 3.
/// The carpet is Ahlfors 2-regular when sum a_n^{-2} < inf, which constant
/// sequences violate; the default generator a_n = 2n+1 satisfies it.
struct CarpetSpec {
  // When `sequence` is empty the generator a_n = 2n+1 is used; otherwise
  // the explicit prefix applies and the last entry repeats beyond it.
  std::vector<int> sequence;
  int max_depth = 8;

  int a(int level) const;  // level >= 1
  double cell_side(int depth) const;
  double level_mass(int depth) const;  // prod_k (a_k^2 - 1)^{-1}
  // Partial sums of a_n^{-2}, for auditing the convergence condition.
  std::vector<double> convergence_partial_sums(int upto) const;

  void validate() const;

  std::string to_json() const;
  static CarpetSpec from_json(const std::string& text);
};

/// True iff at every level k <= depth the cell containing p is not the
/// removed central cell. Cells are half-open with the top/right boundary
/// assigned to the last cell.
bool carpet_contains(const CarpetSpec& spec, double px, double py, int depth);
bool carpet_contains(const CarpetSpec& spec, const Point& p, int depth);

struct CarpetSample {
  std::vector<Point> points;    // retained cell centers with digit addresses
  DiscreteMeasure measure;      // natural equal-split mass per cell
};

/// All retained depth-`depth` cells; masses sum to 1 exactly.
CarpetSample carpet_enumerate(const CarpetSpec& spec, int depth);

/// Draws `count` retained depth-`depth` cells by choosing uniformly among
/// the a_k^2-1 retained children at each level (counter-based rng, so the
/// i-th draw depends only on (seed, i)). Weights are normalized over the
/// drawn cells. Falls back to exhaustive enumeration when count covers
/// every cell.
CarpetSample carpet_sample(const CarpetSpec& spec, int depth, std::size_t count,
                           std::uint64_t rng_seed);

}  // namespace dimdist

#endif
