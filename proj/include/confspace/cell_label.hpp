#ifndef CONFSPACE_CELL_LABEL_HPP
#define CONFSPACE_CELL_LABEL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace confspace {

/// Which family of labels a string belongs to.
///
/// Stratification labels name strata of the Fox-Neuwirth stratification of
/// W_n^{(+)d}; separators range over 1..d+1, where d+1 means "coincident".
/// Complement labels name cells of the complement complex and only use
/// separators 1..d.
enum class ComplexKind { stratification, complement };

const char* to_string(ComplexKind kind);
ComplexKind parse_kind(std::string_view text);

class InvalidLabel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Relative position of two letters inside a label.
enum class Order { before, after };

struct SeparatorMin {
  Order order;
  int index;
  friend bool operator==(const SeparatorMin&, const SeparatorMin&) = default;
};

/// A permutation sigma of {1..n} interleaved with n-1 separator indices:
///
///   sigma_1 <_{i_1} sigma_2 <_{i_2} ... <_{i_{n-1}} sigma_n
///
/// Letters are 1-based. Construction validates the stratification
/// invariants (separators in 1..d+1, ascending letters across every run of
/// d+1 separators); complement-only operations check `is_complement()`.
class CellLabel {
public:
  CellLabel() = default;
  CellLabel(int d, std::vector<int> sigma, std::vector<int> seps);

  int d() const { return d_; }
  int n() const { return static_cast<int>(sigma_.size()); }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& seps() const { return seps_; }

  /// All separators lie in 1..d.
  bool is_complement() const;
  bool is_valid(ComplexKind kind) const;
  /// Throws InvalidLabel unless the label is valid for `kind`.
  void require(ComplexKind kind) const;

  /// 0-based position of `letter` in sigma.
  int position(int letter) const;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
  /// Lexicographic in (sigma, seps); d is compared first so mixed-d sorts are
  /// still total.
  friend std::strong_ordering operator<=>(const CellLabel& a, const CellLabel& b);

private:
  int d_ = 0;
  std::vector<int> sigma_;
  std::vector<int> seps_;
};

/// Dimension of the stratum C(sigma, seps) in W_n^{(+)d}:
/// (d+1)(n-1) - sum(seps).
int stratum_dimension(const CellLabel& label);

/// Dimension of the complement cell: sum(seps) - (n-1).
int cell_dimension(const CellLabel& label);

/// Top dimension M = (d-1)(n-1) of the complement complex.
constexpr int top_dimension(int d, int n) { return (d - 1) * (n - 1); }

/// Whether `a` precedes `b` and the smallest separator strictly between them.
/// That minimum is the first coordinate in which the two points differ.
SeparatorMin separator_min(const CellLabel& label, int a, int b);

/// Pairwise relation table used by the face tests: entry (a-1, b-1) is +k if
/// a precedes b with governing index k, -k if b precedes a, 0 on the
/// diagonal. Row-major n x n.
std::vector<int> relation_table(const CellLabel& label);

/// C(fine) lies in the closure of C(coarse).
bool is_face_stratification(const CellLabel& coarse, const CellLabel& fine);

/// The complement cell of `lower` is a face of the closed cell of `upper`.
bool is_face_complement(const CellLabel& lower, const CellLabel& upper);

/// Face test on precomputed relation tables. Both tables must come from
/// labels with the same n.
bool closure_contains(const std::vector<int>& coarse, const std::vector<int>& fine, int n);

/// The Sigma_n action pi . (sigma, seps) = (pi o sigma, seps). `pi` is given
/// in one-line notation, pi[k-1] = image of k.
CellLabel group_action(const std::vector<int>& pi, const CellLabel& label);

/// Position (1..n-1) of the single d-1 separator in a ridge label.
int ridge_orbit_index(const CellLabel& ridge);

/// "1<2 3<1 2" style. Letters separated by "<k" tokens.
std::string format_label(const CellLabel& label);

/// Bar shorthand for d=2 complement labels: "<1" becomes '|', "<2" is
/// dropped, so (1 <2 3 <1 2) is "13|2". Requires n <= 9.
std::string format_bar_label(const CellLabel& label);

/// Parses either syntax. The bar form needs `d` to be 2 and n <= 9.
CellLabel parse_label(std::string_view text, int d);

}  // namespace confspace

#endif  // CONFSPACE_CELL_LABEL_HPP
