#include "curvspace/graded.hpp"

#include <algorithm>

#include "curvspace/errors.hpp"

namespace curvspace {

GradedLieAlgebra::GradedLieAlgebra(LieAlgebra algebra, std::vector<int> degrees,
                                   std::optional<std::size_t> grading_element_index)
    : algebra_(std::move(algebra)), degrees_(std::move(degrees)),
      grading_element_(grading_element_index) {
  if (degrees_.size() != algebra_.dim())
    throw DimensionError("graded algebra: one degree per basis element expected");
  if (grading_element_ && *grading_element_ >= algebra_.dim())
    throw DimensionError("graded algebra: grading element index out of range");
}

std::vector<int> GradedLieAlgebra::occurring_degrees() const {
  std::vector<int> d = degrees_;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::size_t GradedLieAlgebra::component_dim(int degree) const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), degree));
}

std::vector<std::size_t> GradedLieAlgebra::component_indices(int degree) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == degree) idx.push_back(i);
  return idx;
}

bool GradedLieAlgebra::check_degree_respect() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      int target = degrees_[i] + degrees_[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!algebra_.structure_constant(i, j, k).is_zero() && degrees_[k] != target)
          return false;
    }
  return true;
}

bool GradedLieAlgebra::check_grading_element() const {
  if (!grading_element_) return false;
  const std::size_t h = *grading_element_;
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) {
      Scalar expect = j == k ? Scalar(static_cast<long>(degrees_[j])) : Scalar(0L);
      if (algebra_.structure_constant(h, j, k) != expect.promoted(algebra_.field()))
        return false;
    }
  return true;
}

bool killing_grading_check(const GradedLieAlgebra& g) {
  Matrix b = g.algebra().killing_form();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (g.degree_of(i) + g.degree_of(j) != 0 && !b.at(i, j).is_zero()) return false;
  return true;
}

} // namespace curvspace
