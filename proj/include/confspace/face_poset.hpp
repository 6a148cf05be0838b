#ifndef CONFSPACE_FACE_POSET_HPP
#define CONFSPACE_FACE_POSET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "confspace/cell_label.hpp"

namespace confspace {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// Upper bound on the number of labels of the given kind: n! d^(n-1) for the
/// complement complex, n! (d+1)^(n-1) for the stratification. Saturates at
/// UINT64_MAX.
std::uint64_t label_count_bound(int d, int n, ComplexKind kind);

/// Graded poset of cells. Elements are sorted lexicographically in
/// (sigma, seps); `covers` holds (lower, upper) index pairs where lower has
/// dimension one less than upper, sorted.
///
/// For kind == complement the dimension is the cell dimension and "lower is
/// a face of upper". For kind == stratification the dimension is the stratum
/// dimension and "lower lies in the closure of upper"; the origin stratum is
/// the unique minimal element.
class FacePoset {
public:
  FacePoset(int d, int n, ComplexKind kind, std::vector<CellLabel> elements,
            std::vector<std::pair<std::size_t, std::size_t>> covers);

  int d() const { return d_; }
  int n() const { return n_; }
  ComplexKind kind() const { return kind_; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<CellLabel>& elements() const { return elements_; }
  const CellLabel& element(std::size_t i) const { return elements_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(std::size_t i) const { return dims_[i]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::optional<std::size_t> index_of(const CellLabel& label) const;

  /// Elements covered by element i.
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  /// Elements covering element i.
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }

  int max_dim() const;
  std::vector<std::size_t> elements_of_dim(int dim) const;

private:
  int d_;
  int n_;
  ComplexKind kind_;
  std::vector<CellLabel> elements_;
  std::vector<int> dims_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
};

/// All labels of the given kind in lexicographic (sigma, seps) order.
std::vector<CellLabel> enumerate_labels(int d, int n, ComplexKind kind,
                                        std::uint64_t budget = kDefaultBudget);

/// Labels obtained by raising the separator at 0-based position `p` by one
/// and shuffling the sub-blocks on both sides of it. These are the cells one
/// dimension up (complement) or the strata one dimension down
/// (stratification) that are related to `label` by the face order.
/// `max_separator` is d for the complement complex and d+1 for the
/// stratification; coincident runs come out sorted.
std::vector<CellLabel> raise_separator(const CellLabel& label, int p, int max_separator);

/// Every label covering `label` in the complement order, or every stratum
/// covered by it in the closure order.
std::vector<CellLabel> cover_neighbours(const CellLabel& label, ComplexKind kind);

/// Builds the full poset with covers from `cover_neighbours`.
FacePoset enumerate_cells(int d, int n, ComplexKind kind, std::uint64_t budget = kDefaultBudget);

/// Cell counts by dimension 0..M for the complement complex.
std::vector<std::uint64_t> f_vector(const FacePoset& poset);
std::vector<std::uint64_t> f_vector(int d, int n, std::uint64_t budget = kDefaultBudget);

std::int64_t euler_characteristic(const FacePoset& poset);
std::int64_t euler_characteristic(int d, int n, std::uint64_t budget = kDefaultBudget);

/// Ridges in the boundary of a facet, generated directly: choose the j
/// letters before the d-1 separator, keep both blocks in facet order.
std::vector<CellLabel> facet_boundary(const CellLabel& facet);

/// Pairwise face test over all elements with dimension difference one.
/// Quadratic; meant as an independent check of `covers()`.
std::vector<std::pair<std::size_t, std::size_t>> covers_by_face_test(const FacePoset& poset);

/// True when no element lies strictly between the two ends of any cover.
bool covers_have_no_intermediate(const FacePoset& poset);

/// Every interval of length two has exactly two middle elements.
bool has_diamond_property(const FacePoset& poset);

}  // namespace confspace

#endif  // CONFSPACE_FACE_POSET_HPP
