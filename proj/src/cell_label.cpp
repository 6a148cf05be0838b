#include "confspace/cell_label.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace confspace {

const char* to_string(ComplexKind kind) {
  return kind == ComplexKind::stratification ? "stratification" : "complement";
}

ComplexKind parse_kind(std::string_view text) {
  if (text == "stratification") return ComplexKind::stratification;
  if (text == "complement") return ComplexKind::complement;
  throw std::invalid_argument("unknown complex kind: " + std::string(text));
}

CellLabel::CellLabel(int d, std::vector<int> sigma, std::vector<int> seps)
    : d_(d), sigma_(std::move(sigma)), seps_(std::move(seps)) {
  const int n = static_cast<int>(sigma_.size());
  if (d_ < 1) throw InvalidLabel("label needs d >= 1");
  if (n < 1) throw InvalidLabel("label needs at least one letter");
  if (static_cast<int>(seps_.size()) != n - 1)
    throw InvalidLabel("label needs exactly n-1 separators");

  std::vector<char> seen(n + 1, 0);
  for (int letter : sigma_) {
    if (letter < 1 || letter > n || seen[letter])
      throw InvalidLabel("sigma is not a permutation of 1..n");
    seen[letter] = 1;
  }
  for (std::size_t j = 0; j < seps_.size(); ++j) {
    if (seps_[j] < 1 || seps_[j] > d_ + 1)
      throw InvalidLabel("separator out of range 1..d+1");
    // coincident points are listed in ascending order
    if (seps_[j] == d_ + 1 && sigma_[j] > sigma_[j + 1])
      throw InvalidLabel("letters joined by <_{d+1} must be increasing");
  }
}

bool CellLabel::is_complement() const {
  return std::all_of(seps_.begin(), seps_.end(), [this](int s) { return s <= d_; });
}

bool CellLabel::is_valid(ComplexKind kind) const {
  if (sigma_.empty()) return false;
  return kind == ComplexKind::stratification || is_complement();
}

void CellLabel::require(ComplexKind kind) const {
  if (!is_valid(kind))
    throw InvalidLabel(std::string("not a valid ") + to_string(kind) + " label: " +
                       (sigma_.empty() ? std::string("<empty>") : format_label(*this)));
}

int CellLabel::position(int letter) const {
  auto it = std::find(sigma_.begin(), sigma_.end(), letter);
  if (it == sigma_.end()) throw std::out_of_range("letter not in label");
  return static_cast<int>(it - sigma_.begin());
}

std::strong_ordering operator<=>(const CellLabel& a, const CellLabel& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  if (auto c = a.sigma_ <=> b.sigma_; c != 0) return c;
  return a.seps_ <=> b.seps_;
}

int stratum_dimension(const CellLabel& label) {
  label.require(ComplexKind::stratification);
  const int sum = std::accumulate(label.seps().begin(), label.seps().end(), 0);
  return (label.d() + 1) * (label.n() - 1) - sum;
}

int cell_dimension(const CellLabel& label) {
  label.require(ComplexKind::complement);
  const int sum = std::accumulate(label.seps().begin(), label.seps().end(), 0);
  return sum - (label.n() - 1);
}

SeparatorMin separator_min(const CellLabel& label, int a, int b) {
  if (a == b) throw std::invalid_argument("separator_min needs distinct letters");
  int pa = label.position(a);
  int pb = label.position(b);
  const Order order = pa < pb ? Order::before : Order::after;
  if (pa > pb) std::swap(pa, pb);
  const auto first = label.seps().begin() + pa;
  const int index = *std::min_element(first, label.seps().begin() + pb);
  return {order, index};
}

std::vector<int> relation_table(const CellLabel& label) {
  const int n = label.n();
  const auto& sigma = label.sigma();
  const auto& seps = label.seps();
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) {
    int running = label.d() + 2;
    for (int q = p + 1; q < n; ++q) {
      running = std::min(running, seps[q - 1]);
      const int a = sigma[p] - 1;
      const int b = sigma[q] - 1;
      table[a * n + b] = running;
      table[b * n + a] = -running;
    }
  }
  return table;
}

bool closure_contains(const std::vector<int>& coarse, const std::vector<int>& fine, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int jf = fine[a * n + b];
      if (jf <= 0) continue;  // only pairs with a before b in fine
      const int jc = coarse[a * n + b];
      if (jc > 0 ? jc > jf : -jc >= jf) return false;
    }
  }
  return true;
}

namespace {

void require_compatible(const CellLabel& x, const CellLabel& y) {
  if (x.d() != y.d() || x.n() != y.n())
    throw std::invalid_argument("face test on labels with different d or n");
}

}  // namespace

bool is_face_stratification(const CellLabel& coarse, const CellLabel& fine) {
  require_compatible(coarse, fine);
  coarse.require(ComplexKind::stratification);
  fine.require(ComplexKind::stratification);
  return closure_contains(relation_table(coarse), relation_table(fine), coarse.n());
}

bool is_face_complement(const CellLabel& lower, const CellLabel& upper) {
  require_compatible(lower, upper);
  lower.require(ComplexKind::complement);
  upper.require(ComplexKind::complement);
  // the complement order is the stratification order reversed
  return closure_contains(relation_table(lower), relation_table(upper), lower.n());
}

CellLabel group_action(const std::vector<int>& pi, const CellLabel& label) {
  label.require(ComplexKind::complement);
  const int n = label.n();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("permutation has the wrong length");
  std::vector<char> seen(n + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("pi is not a permutation of 1..n");
    seen[v] = 1;
  }
  std::vector<int> sigma(n);
  std::transform(label.sigma().begin(), label.sigma().end(), sigma.begin(),
                 [&pi](int letter) { return pi[letter - 1]; });
  return CellLabel(label.d(), std::move(sigma), label.seps());
}

int ridge_orbit_index(const CellLabel& ridge) {
  ridge.require(ComplexKind::complement);
  const int d = ridge.d();
  int found = 0;
  for (std::size_t j = 0; j < ridge.seps().size(); ++j) {
    const int s = ridge.seps()[j];
    if (s == d) continue;
    if (s != d - 1 || found != 0) throw InvalidLabel("label is not a ridge: " + format_label(ridge));
    found = static_cast<int>(j) + 1;
  }
  if (found == 0) throw InvalidLabel("label is not a ridge: " + format_label(ridge));
  return found;
}

std::string format_label(const CellLabel& label) {
  std::string out;
  for (int p = 0; p < label.n(); ++p) {
    if (p > 0) {
      out += '<';
      out += std::to_string(label.seps()[p - 1]);
      out += ' ';
    }
    out += std::to_string(label.sigma()[p]);
  }
  return out;
}

std::string format_bar_label(const CellLabel& label) {
  if (label.d() != 2 || !label.is_complement())
    throw InvalidLabel("bar shorthand needs a d=2 complement label");
  if (label.n() > 9) throw InvalidLabel("bar shorthand needs single-digit letters");
  std::string out;
  for (int p = 0; p < label.n(); ++p) {
    if (p > 0 && label.seps()[p - 1] == 1) out += '|';
    out += static_cast<char>('0' + label.sigma()[p]);
  }
  return out;
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + pos)
    throw InvalidLabel("expected an integer in label: " + std::string(text));
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

CellLabel parse_label(std::string_view text, int d) {
  std::vector<int> sigma;
  std::vector<int> seps;
  std::size_t pos = 0;
  skip_space(text, pos);

  if (text.find('<') == std::string_view::npos) {
    if (d != 2) throw InvalidLabel("bar shorthand is only defined for d=2");
    bool pending_bar = false;
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '|') {
        if (sigma.empty() || pending_bar) throw InvalidLabel("misplaced bar in label");
        pending_bar = true;
        continue;
      }
      if (c < '1' || c > '9') throw InvalidLabel("unexpected character in label: " + std::string(text));
      if (!sigma.empty()) seps.push_back(pending_bar ? 1 : 2);
      pending_bar = false;
      sigma.push_back(c - '0');
    }
    if (pending_bar) throw InvalidLabel("label ends with a bar");
    return CellLabel(d, std::move(sigma), std::move(seps));
  }

  sigma.push_back(parse_int(text, pos));
  for (;;) {
    skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '<') throw InvalidLabel("expected '<' in label: " + std::string(text));
    ++pos;
    seps.push_back(parse_int(text, pos));
    skip_space(text, pos);
    sigma.push_back(parse_int(text, pos));
  }
  return CellLabel(d, std::move(sigma), std::move(seps));
}

}  // namespace confspace
