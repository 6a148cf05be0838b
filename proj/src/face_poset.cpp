#include "confspace/face_poset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace confspace {

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : std::runtime_error("enumeration needs up to " +
                         (needed == std::numeric_limits<std::uint64_t>::max() ? std::string("2^64")
                                                                              : std::to_string(needed)) +
                         " labels, budget is " + std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

int dimension_of(const CellLabel& label, ComplexKind kind) {
  return kind == ComplexKind::complement ? cell_dimension(label) : stratum_dimension(label);
}

void check_shape(int d, int n) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  if (n < 2) throw std::invalid_argument("need n >= 2");
}

// x <= y in the poset order of `kind`, on relation tables.
bool poset_leq(const std::vector<int>& x, const std::vector<int>& y, int n, ComplexKind kind) {
  return kind == ComplexKind::complement ? closure_contains(x, y, n) : closure_contains(y, x, n);
}

}  // namespace

std::uint64_t label_count_bound(int d, int n, ComplexKind kind) {
  check_shape(d, n);
  const std::uint64_t base = kind == ComplexKind::complement ? d : d + 1;
  std::uint64_t count = 1;
  for (int k = 2; k <= n; ++k) count = saturating_mul(count, k);
  for (int k = 1; k < n; ++k) count = saturating_mul(count, base);
  return count;
}

FacePoset::FacePoset(int d, int n, ComplexKind kind, std::vector<CellLabel> elements,
                     std::vector<std::pair<std::size_t, std::size_t>> covers)
    : d_(d), n_(n), kind_(kind), elements_(std::move(elements)), covers_(std::move(covers)) {
  dims_.reserve(elements_.size());
  for (const auto& e : elements_) dims_.push_back(dimension_of(e, kind_));
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  down_.resize(elements_.size());
  up_.resize(elements_.size());
  for (auto [lo, hi] : covers_) {
    if (lo >= elements_.size() || hi >= elements_.size())
      throw std::out_of_range("cover index out of range");
    if (dims_[hi] != dims_[lo] + 1) throw std::logic_error("cover relation is not graded");
    down_[hi].push_back(lo);
    up_[lo].push_back(hi);
  }
}

std::optional<std::size_t> FacePoset::index_of(const CellLabel& label) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

int FacePoset::max_dim() const {
  return dims_.empty() ? -1 : *std::max_element(dims_.begin(), dims_.end());
}

std::vector<std::size_t> FacePoset::elements_of_dim(int dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i] == dim) out.push_back(i);
  return out;
}

std::vector<CellLabel> enumerate_labels(int d, int n, ComplexKind kind, std::uint64_t budget) {
  const std::uint64_t bound = label_count_bound(d, n, kind);
  if (bound > budget) throw BudgetExceeded(bound, budget);

  const int max_sep = kind == ComplexKind::complement ? d : d + 1;
  std::vector<CellLabel> out;
  out.reserve(bound);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    std::vector<int> seps(n - 1, 1);
    for (;;) {
      bool ok = true;
      for (int j = 0; j + 1 < n && ok; ++j)
        ok = seps[j] != d + 1 || sigma[j] < sigma[j + 1];
      if (ok) out.emplace_back(d, sigma, seps);
      // odometer, last separator fastest so the output stays lexicographic
      int j = n - 2;
      while (j >= 0 && seps[j] == max_sep) seps[j--] = 1;
      if (j < 0) break;
      ++seps[j];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

struct Segment {
  std::vector<int> letters;
  std::vector<int> seps;  // letters.size() - 1 inner separators
};

// Splits positions [lo, hi] of the label into maximal runs whose inner
// separators differ from `cut`.
std::vector<Segment> split_block(const CellLabel& label, int lo, int hi, int cut) {
  std::vector<Segment> out(1);
  for (int q = lo; q <= hi; ++q) {
    out.back().letters.push_back(label.sigma()[q]);
    if (q == hi) break;
    const int s = label.seps()[q];
    if (s == cut)
      out.emplace_back();
    else
      out.back().seps.push_back(s);
  }
  return out;
}

void shuffle_segments(const std::vector<Segment>& left, const std::vector<Segment>& right,
                      std::size_t li, std::size_t ri, int joint, Segment& acc,
                      std::vector<Segment>& out) {
  if (li == left.size() && ri == right.size()) {
    out.push_back(acc);
    return;
  }
  auto take = [&](const Segment& seg, std::size_t nli, std::size_t nri) {
    const auto letters = acc.letters.size();
    const auto seps = acc.seps.size();
    if (!acc.letters.empty()) acc.seps.push_back(joint);
    acc.letters.insert(acc.letters.end(), seg.letters.begin(), seg.letters.end());
    acc.seps.insert(acc.seps.end(), seg.seps.begin(), seg.seps.end());
    shuffle_segments(left, right, nli, nri, joint, acc, out);
    acc.letters.resize(letters);
    acc.seps.resize(seps);
  };
  if (li < left.size()) take(left[li], li + 1, ri);
  if (ri < right.size()) take(right[ri], li, ri + 1);
}

}  // namespace

std::vector<CellLabel> raise_separator(const CellLabel& label, int p, int max_separator) {
  const int n = label.n();
  const int d = label.d();
  if (p < 0 || p >= n - 1) throw std::out_of_range("separator position out of range");
  const auto& seps = label.seps();
  const int level = seps[p];
  const int raised = level + 1;
  if (raised > max_separator) return {};

  int lo = p;
  while (lo > 0 && seps[lo - 1] > level) --lo;
  int hi = p + 1;
  while (hi < n - 1 && seps[hi] > level) ++hi;

  std::vector<Segment> merged;
  if (raised == d + 1) {
    // all points of both blocks coincide; the tie-break sorts them
    Segment seg;
    seg.letters.assign(label.sigma().begin() + lo, label.sigma().begin() + hi + 1);
    std::sort(seg.letters.begin(), seg.letters.end());
    seg.seps.assign(seg.letters.size() - 1, d + 1);
    merged.push_back(std::move(seg));
  } else {
    const auto left = split_block(label, lo, p, raised);
    const auto right = split_block(label, p + 1, hi, raised);
    Segment acc;
    shuffle_segments(left, right, 0, 0, raised, acc, merged);
  }

  std::vector<CellLabel> out;
  out.reserve(merged.size());
  for (const auto& seg : merged) {
    std::vector<int> sigma(label.sigma().begin(), label.sigma().begin() + lo);
    std::vector<int> new_seps(seps.begin(), seps.begin() + lo);
    sigma.insert(sigma.end(), seg.letters.begin(), seg.letters.end());
    new_seps.insert(new_seps.end(), seg.seps.begin(), seg.seps.end());
    sigma.insert(sigma.end(), label.sigma().begin() + hi + 1, label.sigma().end());
    new_seps.insert(new_seps.end(), seps.begin() + hi, seps.end());
    out.emplace_back(d, std::move(sigma), std::move(new_seps));
  }
  return out;
}

std::vector<CellLabel> cover_neighbours(const CellLabel& label, ComplexKind kind) {
  label.require(kind);
  const int max_sep = kind == ComplexKind::complement ? label.d() : label.d() + 1;
  std::vector<CellLabel> out;
  for (int p = 0; p + 1 < label.n(); ++p) {
    auto raised = raise_separator(label, p, max_sep);
    out.insert(out.end(), std::make_move_iterator(raised.begin()),
               std::make_move_iterator(raised.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FacePoset enumerate_cells(int d, int n, ComplexKind kind, std::uint64_t budget) {
  auto elements = enumerate_labels(d, n, kind, budget);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  auto find = [&elements](const CellLabel& label) {
    auto it = std::lower_bound(elements.begin(), elements.end(), label);
    if (it == elements.end() || *it != label) throw std::logic_error("generated label not enumerated");
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& other : cover_neighbours(elements[i], kind)) {
      const std::size_t j = find(other);
      // raising a separator goes up in the complement, down in the closure order
      if (kind == ComplexKind::complement)
        covers.emplace_back(i, j);
      else
        covers.emplace_back(j, i);
    }
  }
  return FacePoset(d, n, kind, std::move(elements), std::move(covers));
}

std::vector<std::uint64_t> f_vector(const FacePoset& poset) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(std::max(poset.max_dim(), 0)) + 1, 0);
  for (int dim : poset.dims()) ++f[dim];
  return f;
}

std::vector<std::uint64_t> f_vector(int d, int n, std::uint64_t budget) {
  // counting only needs the labels, not the cover relation
  const auto labels = enumerate_labels(d, n, ComplexKind::complement, budget);
  std::vector<std::uint64_t> f(top_dimension(d, n) + 1, 0);
  for (const auto& label : labels) ++f[cell_dimension(label)];
  return f;
}

namespace {

std::int64_t alternating_sum(const std::vector<std::uint64_t>& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
  return chi;
}

}  // namespace

std::int64_t euler_characteristic(const FacePoset& poset) { return alternating_sum(f_vector(poset)); }

std::int64_t euler_characteristic(int d, int n, std::uint64_t budget) {
  return alternating_sum(f_vector(d, n, budget));
}

std::vector<CellLabel> facet_boundary(const CellLabel& facet) {
  facet.require(ComplexKind::complement);
  const int d = facet.d();
  const int n = facet.n();
  if (d < 2) throw InvalidLabel("facets of a 0-dimensional complex have no boundary");
  for (int s : facet.seps())
    if (s != d) throw InvalidLabel("label is not a facet: " + format_label(facet));

  std::vector<CellLabel> out;
  const auto& sigma = facet.sigma();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> word;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) word.push_back(sigma[p]);
    const int j = static_cast<int>(word.size());
    for (int p = 0; p < n; ++p)
      if (!(mask & (1u << p))) word.push_back(sigma[p]);
    std::vector<int> seps(n - 1, d);
    seps[j - 1] = d - 1;
    out.emplace_back(d, std::move(word), std::move(seps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> covers_by_face_test(const FacePoset& poset) {
  const int n = poset.n();
  std::vector<std::vector<int>> tables;
  tables.reserve(poset.size());
  for (const auto& e : poset.elements()) tables.push_back(relation_table(e));

  std::map<int, std::vector<std::size_t>> by_dim;
  for (std::size_t i = 0; i < poset.size(); ++i) by_dim[poset.dim(i)].push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [dim, lows] : by_dim) {
    auto it = by_dim.find(dim + 1);
    if (it == by_dim.end()) continue;
    for (std::size_t lo : lows)
      for (std::size_t hi : it->second)
        if (poset_leq(tables[lo], tables[hi], n, poset.kind())) out.emplace_back(lo, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers_have_no_intermediate(const FacePoset& poset) {
  const int n = poset.n();
  std::vector<std::vector<int>> tables;
  tables.reserve(poset.size());
  for (const auto& e : poset.elements()) tables.push_back(relation_table(e));
  for (auto [lo, hi] : poset.covers()) {
    if (!poset_leq(tables[lo], tables[hi], n, poset.kind())) return false;
    for (std::size_t c = 0; c < poset.size(); ++c) {
      if (c == lo || c == hi) continue;
      if (poset_leq(tables[lo], tables[c], n, poset.kind()) &&
          poset_leq(tables[c], tables[hi], n, poset.kind()))
        return false;
    }
  }
  return true;
}

bool has_diamond_property(const FacePoset& poset) {
  for (std::size_t x = 0; x < poset.size(); ++x) {
    std::map<std::size_t, int> middles;
    for (std::size_t y : poset.upper_covers(x))
      for (std::size_t z : poset.upper_covers(y)) ++middles[z];
    for (const auto& [z, count] : middles)
      if (count != 2) return false;
  }
  return true;
}

}  // namespace confspace
