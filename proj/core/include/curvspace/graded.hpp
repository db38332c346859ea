#ifndef CURVSPACE_GRADED_HPP
#define CURVSPACE_GRADED_HPP

#include <optional>
#include <vector>

#include "curvspace/lie_algebra.hpp"

namespace curvspace {

/// Lie algebra with an integer degree attached to every basis element and,
/// when available, a grading element H with [H, x] = deg(x) x.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(LieAlgebra algebra, std::vector<int> degrees,
                   std::optional<std::size_t> grading_element_index = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  int degree_of(std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::optional<std::size_t> grading_element() const { return grading_element_; }

  /// Sorted list of degrees that actually occur.
  std::vector<int> occurring_degrees() const;
  std::size_t component_dim(int degree) const;
  std::vector<std::size_t> component_indices(int degree) const;

  /// [g_k, g_l] lands in g_{k+l} for every basis pair.
  bool check_degree_respect() const;

  /// [H, x] = deg(x) x for the declared grading element.
  bool check_grading_element() const;

private:
  LieAlgebra algebra_;
  std::vector<int> degrees_;
  std::optional<std::size_t> grading_element_;
};

/// Killing-form pairing vanishes between components unless the degrees are
/// opposite.
bool killing_grading_check(const GradedLieAlgebra& g);

} // namespace curvspace

#endif // CURVSPACE_GRADED_HPP
