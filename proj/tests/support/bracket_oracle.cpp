#include "support/bracket_oracle.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein_tests {

using skein::Arc;
using skein::Crossing;
using skein::LinkDiagram;

APoly APoly::constant(long long c) { return monomial(0, c); }

APoly APoly::monomial(int exp, long long c) {
  APoly p;
  if (c != 0) {
    p.min_exp_ = exp;
    p.coeffs_ = {c};
  }
  return p;
}

bool APoly::is_zero() const { return coeffs_.empty(); }

void APoly::normalize() {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0) min_exp_ += static_cast<int>(lo);
  coeffs_ = std::vector<long long>(coeffs_.begin() + lo, coeffs_.begin() + hi);
}

APoly APoly::operator+(const APoly& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  int lo = std::min(min_exp_, rhs.min_exp_);
  int hi = std::max(min_exp_ + static_cast<int>(coeffs_.size()),
                    rhs.min_exp_ + static_cast<int>(rhs.coeffs_.size()));
  APoly out;
  out.min_exp_ = lo;
  out.coeffs_.assign(hi - lo, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[min_exp_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
    out.coeffs_[rhs.min_exp_ - lo + i] += rhs.coeffs_[i];
  out.normalize();
  return out;
}

APoly APoly::operator*(const APoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  APoly out;
  out.min_exp_ = min_exp_ + rhs.min_exp_;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  out.normalize();
  return out;
}

APoly APoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("APoly::pow: negative exponent");
  APoly out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool APoly::operator==(const APoly& rhs) const {
  return min_exp_ == rhs.min_exp_ && coeffs_ == rhs.coeffs_;
}

std::string APoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i] << "*A^" << (min_exp_ + static_cast<int>(i));
    first = false;
  }
  return os.str();
}

namespace {

struct ArcUnion {
  std::vector<int> parent;
  explicit ArcUnion(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

APoly kauffman_bracket(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c > 20) throw std::invalid_argument("bracket oracle: too many crossings");

  int max_arc = 0;
  for (const Crossing& x : d.crossings())
    for (Arc a : x.arcs) max_arc = std::max(max_arc, a);

  APoly delta = APoly::monomial(2, -1) + APoly::monomial(-2, -1);
  APoly total;
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    ArcUnion uf(max_arc + 1);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& t = d.crossings()[i].arcs;
      // A-smoothing joins slots (0,3) and (1,2); B joins (0,1) and (2,3).
      if (state & (1u << i)) {
        ++a_count;
        uf.unite(t[0], t[3]);
        uf.unite(t[1], t[2]);
      } else {
        uf.unite(t[0], t[1]);
        uf.unite(t[2], t[3]);
      }
    }
    int loops = d.unknot_components();
    std::vector<bool> seen(max_arc + 1, false);
    for (const auto& comp : d.components())
      for (Arc a : comp) {
        int rep = uf.find(a);
        if (!seen[rep]) {
          seen[rep] = true;
          ++loops;
        }
      }
    total = total + APoly::monomial(a_count - (c - a_count)) * delta.pow(loops - 1);
  }
  return total;
}

APoly jones_from_bracket(const LinkDiagram& d) {
  int w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  APoly writhe_fix = APoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  APoly z_image = APoly::monomial(-2, 1) + APoly::monomial(2, -1);
  return writhe_fix * kauffman_bracket(d) * z_image.pow(d.component_count() - 1);
}

APoly jones_from_homfly(const skein::LaurentPoly2& p, int link_components) {
  APoly z_image = APoly::monomial(-2, 1) + APoly::monomial(2, -1);
  APoly out;
  for (const auto& [e, coeff] : p.terms()) {
    int z_power = e.z + link_components - 1;
    if (z_power < 0)
      throw std::invalid_argument("jones_from_homfly: z-degree below -(#L-1)");
    if (!coeff.fits_slong_p())
      throw std::invalid_argument("jones_from_homfly: coefficient too large");
    out = out + APoly::monomial(-4 * e.v, coeff.get_si()) * z_image.pow(z_power);
  }
  return out;
}

}  // namespace skein_tests
