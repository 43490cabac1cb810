#include "loday/exterior.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace loday {

const std::vector<IndexSet>& subsets(int n, int k) {
  static std::map<std::pair<int, int>, std::vector<IndexSet>> cache;
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<IndexSet> out;
  if (k >= 0 && k <= n) {
    IndexSet cur(k);
    // lexicographic enumeration
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[i] == n - k + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out = {IndexSet{}};
  }
  return cache.emplace(key, std::move(out)).first->second;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int subsetPosition(int n, const IndexSet& s) {
  const auto& all = subsets(n, static_cast<int>(s.size()));
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s)
    throw std::invalid_argument("subsetPosition: not a valid sorted subset");
  return static_cast<int>(it - all.begin());
}

MultiSection::MultiSection(int rank, int degree, Ring ring)
    : rank_(rank), degree_(degree), ring_(std::move(ring)) {
  if (degree < 0 || degree > rank)
    throw std::invalid_argument("MultiSection: degree out of range 0..rank");
}

MultiSection MultiSection::basis(int rank, const Ring& ring, const IndexSet& idx) {
  MultiSection a(rank, static_cast<int>(idx.size()), ring);
  a.setCoeff(idx, Poly::constant(ring, Rational(1)));
  return a;
}

MultiSection MultiSection::basisVector(int rank, const Ring& ring, int i) {
  return basis(rank, ring, IndexSet{i});
}

MultiSection MultiSection::scalar(int rank, const Ring& ring, const Poly& f) {
  MultiSection a(rank, 0, ring);
  a.setCoeff({}, f);
  return a;
}

Poly MultiSection::coeff(const IndexSet& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Poly(ring_) : it->second;
}

void MultiSection::setCoeff(const IndexSet& idx, const Poly& p) {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("MultiSection::setCoeff: index tuple length != degree");
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end() ||
      (!idx.empty() && (idx.front() < 0 || idx.back() >= rank_)))
    throw std::invalid_argument("MultiSection::setCoeff: index tuple not strictly increasing in range");
  if (p.isZero())
    coeffs_.erase(idx);
  else
    coeffs_[idx] = p;
}

void MultiSection::addCoeff(const IndexSet& idx, const Poly& p) {
  setCoeff(idx, coeff(idx) + p);
}

int MultiSection::maxCoeffDegree() const {
  int d = -1;
  for (const auto& [idx, p] : coeffs_) d = std::max(d, p.totalDegree());
  return d;
}

void MultiSection::requireCompatible(const MultiSection& o) const {
  if (rank_ != o.rank_ || degree_ != o.degree_ || ring_ != o.ring_)
    throw std::invalid_argument("MultiSection: rank/degree/ring mismatch");
}

MultiSection MultiSection::operator-() const {
  MultiSection r(rank_, degree_, ring_);
  for (const auto& [idx, p] : coeffs_) r.coeffs_.emplace(idx, -p);
  return r;
}

MultiSection& MultiSection::operator+=(const MultiSection& o) {
  requireCompatible(o);
  for (const auto& [idx, p] : o.coeffs_) addCoeff(idx, p);
  return *this;
}

MultiSection& MultiSection::operator-=(const MultiSection& o) {
  requireCompatible(o);
  for (const auto& [idx, p] : o.coeffs_) addCoeff(idx, -p);
  return *this;
}

MultiSection operator*(const Poly& f, const MultiSection& a) {
  MultiSection r(a.rank_, a.degree_, a.ring_);
  for (const auto& [idx, p] : a.coeffs_) r.addCoeff(idx, f * p);
  return r;
}

MultiSection operator*(const Rational& c, const MultiSection& a) {
  MultiSection r(a.rank_, a.degree_, a.ring_);
  for (const auto& [idx, p] : a.coeffs_) r.addCoeff(idx, c * p);
  return r;
}

bool operator==(const MultiSection& a, const MultiSection& b) {
  return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.ring_ == b.ring_ &&
         a.coeffs_ == b.coeffs_;
}

std::string MultiSection::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, p] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    std::string label;
    for (int i : idx) {
      if (!label.empty()) label += "^";
      label += "e" + std::to_string(i + 1);
    }
    if (idx.empty())
      os << "(" << p.str() << ")";
    else
      os << "(" << p.str() << ")*" << label;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiSection& a) { return os << a.str(); }

namespace {

// Merge two disjoint sorted index sets; returns false on overlap,
// otherwise the sorted union and the sign of the sorting permutation.
bool mergeSigned(const IndexSet& a, const IndexSet& b, IndexSet& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  sign = 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] hops over the remaining a-elements
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return true;
}

}  // namespace

MultiSection wedge(const MultiSection& a, const MultiSection& b) {
  if (a.rank() != b.rank() || a.ring() != b.ring())
    throw std::invalid_argument("wedge: rank/ring mismatch");
  const int deg = a.degree() + b.degree();
  if (deg > a.rank()) return MultiSection::zero(a.rank(), 0, a.ring());
  MultiSection r(a.rank(), deg, a.ring());
  IndexSet merged;
  int sign;
  for (const auto& [ia, pa] : a.coeffs())
    for (const auto& [ib, pb] : b.coeffs()) {
      if (!mergeSigned(ia, ib, merged, sign)) continue;
      Poly term = pa * pb;
      r.addCoeff(merged, sign < 0 ? -term : term);
    }
  return r;
}

MultiSection dualContract(int i, const MultiSection& a) {
  if (a.degree() == 0) return MultiSection::zero(a.rank(), 0, a.ring());
  MultiSection r(a.rank(), a.degree() - 1, a.ring());
  for (const auto& [idx, p] : a.coeffs()) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) continue;
    const int pos = static_cast<int>(it - idx.begin());
    IndexSet rest;
    rest.reserve(idx.size() - 1);
    for (int v : idx)
      if (v != i) rest.push_back(v);
    r.addCoeff(rest, (pos % 2 == 0) ? p : -p);
  }
  return r;
}

Metric::Metric(QMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw std::invalid_argument("Metric: square matrix required");
  for (Eigen::Index i = 0; i < g_.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (g_(i, j) != g_(j, i)) throw std::invalid_argument("Metric: matrix not symmetric");
  gInv_ = inverse(g_);  // throws on singular (degenerate) input
}

Rational Metric::minorDet(const IndexSet& rowsI, const IndexSet& colsJ) const {
  const int k = static_cast<int>(rowsI.size());
  if (static_cast<int>(colsJ.size()) != k)
    throw std::invalid_argument("minorDet: index sets of unequal size");
  QMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = g_(rowsI[i], colsJ[j]);
  return determinant(std::move(sub));
}

Rational Metric::minorDetInv(const IndexSet& rowsI, const IndexSet& colsJ) const {
  const int k = static_cast<int>(rowsI.size());
  QMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = gInv_(rowsI[i], colsJ[j]);
  return determinant(std::move(sub));
}

Poly Metric::pair(const MultiSection& a, const MultiSection& b) const {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Metric::pair: degree mismatch");
  if (a.rank() != rank() || b.rank() != rank())
    throw std::invalid_argument("Metric::pair: rank mismatch");
  Poly out(a.ring());
  for (const auto& [ia, pa] : a.coeffs())
    for (const auto& [ib, pb] : b.coeffs()) {
      const Rational d = minorDet(ia, ib);
      if (d.isZero()) continue;
      out += d * (pa * pb);
    }
  return out;
}

MultiSection Metric::xi(const MultiSection& a) const {
  MultiSection r(a.rank(), a.degree(), a.ring());
  for (const auto& j : subsets(a.rank(), a.degree())) {
    Poly c(a.ring());
    for (const auto& [i, p] : a.coeffs()) {
      const Rational d = minorDet(i, j);
      if (!d.isZero()) c += d * p;
    }
    if (!c.isZero()) r.setCoeff(j, c);
  }
  return r;
}

MultiSection Metric::xiInv(const MultiSection& a) const {
  MultiSection r(a.rank(), a.degree(), a.ring());
  for (const auto& j : subsets(a.rank(), a.degree())) {
    Poly c(a.ring());
    for (const auto& [i, p] : a.coeffs()) {
      const Rational d = minorDetInv(i, j);
      if (!d.isZero()) c += d * p;
    }
    if (!c.isZero()) r.setCoeff(j, c);
  }
  return r;
}

MultiSection Metric::breveContract(const Section& e, const MultiSection& a) const {
  if (e.degree() != 1) throw std::invalid_argument("breveContract: degree-1 section required");
  if (a.degree() == 0) throw std::invalid_argument("breveContract: cannot contract a scalar");
  MultiSection r(a.rank(), a.degree() - 1, a.ring());
  for (const auto& [ei, ep] : e.coeffs()) {
    const int j = ei[0];
    // sum_i g(j,i) * (contraction against the canonical dual of e_i)
    for (int i = 0; i < rank(); ++i) {
      const Rational gji = g_(j, i);
      if (gji.isZero()) continue;
      MultiSection c = dualContract(i, a);
      if (c.isZero()) continue;
      r += (gji * ep) * c;
    }
  }
  return r;
}

MultiSection gradedPoisson(const MultiSection& a, const MultiSection& b, const Metric& m) {
  if (!a.ring().isPoint())
    throw std::invalid_argument("gradedPoisson: only supported over a point base");
  if (a.rank() != b.rank() || a.ring() != b.ring())
    throw std::invalid_argument("gradedPoisson: rank/ring mismatch");
  const int deg = a.degree() + b.degree() - 2;
  if (deg < 0 || deg > a.rank()) return MultiSection::zero(a.rank(), 0, a.ring());
  MultiSection r(a.rank(), deg, a.ring());
  // {a,b} = (-1)^{|a|-1} sum_{ij} g_ij (d_i a)^(d_j b), d_i the left
  // partial with respect to the degree-1 generator e_i.
  const int sign = (a.degree() % 2 == 1) ? 1 : -1;
  for (int i = 0; i < a.rank(); ++i) {
    MultiSection da = dualContract(i, a);
    if (da.isZero()) continue;
    for (int j = 0; j < a.rank(); ++j) {
      const Rational gij = m.g()(i, j);
      if (gij.isZero()) continue;
      MultiSection db = dualContract(j, b);
      if (db.isZero()) continue;
      MultiSection w = wedge(da, db);
      r += (sign > 0 ? gij : -gij) * w;
    }
  }
  return r;
}

}  // namespace loday
