#include "loday/constructions.hpp"

#include "loday/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loday {

namespace {

using Structure = std::vector<std::vector<std::vector<Rational>>>;

Structure zeroStructure(int n) {
  return Structure(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

// Point-base algebroid from rational structure constants and metric.
Algebroid pointAlgebroid(int n, const Structure& c, QMatrix g, std::string name) {
  const Ring ring = Ring::point();
  std::vector<std::vector<std::vector<Poly>>> dorf(
      n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(ring))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) dorf[i][j][k] = Poly::constant(ring, c[i][j][k]);
  std::vector<Derivation> anchor(n, Derivation::zero(ring));
  return Algebroid(n, ring, Metric(std::move(g)), std::move(anchor), std::move(dorf),
                   std::nullopt, std::move(name));
}

Structure sl2Structure() {
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  Structure c = zeroStructure(3);
  c[0][1][1] = Rational(2);
  c[1][0][1] = Rational(-2);
  c[0][2][2] = Rational(-2);
  c[2][0][2] = Rational(2);
  c[1][2][0] = Rational(1);
  c[2][1][0] = Rational(-1);
  return c;
}

struct ParsedName {
  std::string head;
  std::vector<std::string> args;
};

ParsedName parseName(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos) return {name, {}};
  if (name.back() != ')')
    throw std::invalid_argument("catalog: malformed name '" + name + "'");
  ParsedName out;
  out.head = name.substr(0, open);
  const std::string inner = name.substr(open + 1, name.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.args.push_back(cur);
  for (auto& a : out.args) {
    while (!a.empty() && a.front() == ' ') a.erase(a.begin());
    while (!a.empty() && a.back() == ' ') a.pop_back();
  }
  return out;
}

}  // namespace

Algebroid catalog(const std::string& name) {
  const ParsedName p = parseName(name);
  if (p.head == "abelian") {
    if (p.args.size() != 1)
      throw std::invalid_argument("catalog: abelian(n) takes one argument");
    const int n = std::stoi(p.args[0]);
    if (n <= 0) throw std::invalid_argument("catalog: abelian rank must be positive");
    return pointAlgebroid(n, zeroStructure(n), QMatrix::Identity(n, n), name);
  }
  if (p.head == "sl2_split") {
    QMatrix g = QMatrix::Constant(3, 3, Rational(0));
    g(0, 0) = Rational(2);
    g(1, 2) = g(2, 1) = Rational(1);
    return pointAlgebroid(3, sl2Structure(), std::move(g), name);
  }
  if (p.head == "aff1_loday") {
    Structure c = zeroStructure(2);
    c[0][1][1] = Rational(1);
    c[1][0][1] = Rational(-1);
    return pointAlgebroid(2, c, QMatrix::Identity(2, 2), name);
  }
  if (p.head == "direct_sum") {
    if (p.args.size() != 2)
      throw std::invalid_argument("catalog: direct_sum(a,b) takes two arguments");
    return directSum(catalog(p.args[0]), catalog(p.args[1]));
  }
  if (p.head == "random_quadratic") {
    if (p.args.size() != 1)
      throw std::invalid_argument("catalog: random_quadratic(seed) takes one argument");
    return randomQuadratic(std::stoull(p.args[0]));
  }
  throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

Algebroid directSum(const Algebroid& a, const Algebroid& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("directSum: summands over different rings");
  const int n = a.rank() + b.rank();
  const Ring& ring = a.ring();
  QMatrix g = QMatrix::Constant(n, n, Rational(0));
  g.topLeftCorner(a.rank(), a.rank()) = a.metric().g();
  g.bottomRightCorner(b.rank(), b.rank()) = b.metric().g();
  std::vector<std::vector<std::vector<Poly>>> dorf(
      n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(ring))));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j)
      for (int k = 0; k < a.rank(); ++k) dorf[i][j][k] = a.dorfmanBasis(i, j).coeff({k});
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j)
      for (int k = 0; k < b.rank(); ++k)
        dorf[a.rank() + i][a.rank() + j][a.rank() + k] = b.dorfmanBasis(i, j).coeff({k});
  std::vector<Derivation> anchor;
  for (int i = 0; i < a.rank(); ++i) anchor.push_back(a.anchorBasis(i));
  for (int i = 0; i < b.rank(); ++i) anchor.push_back(b.anchorBasis(i));
  return Algebroid(n, ring, Metric(std::move(g)), std::move(anchor), std::move(dorf),
                   std::nullopt, "direct_sum(" + a.name() + "," + b.name() + ")");
}

Algebroid randomQuadratic(std::uint64_t seed) {
  Rng rng(seed);
  Algebroid base = catalog("sl2_split");
  const int extra = rng.intIn(0, 2);
  if (extra > 0) base = directSum(base, catalog("abelian(" + std::to_string(extra) + ")"));
  const int n = base.rank();
  const QMatrix& g = base.metric().g();

  // Rational isometry via the Cayley transform of K = g^{-1} W, W skew.
  QMatrix q;
  while (true) {
    QMatrix w = QMatrix::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        w(i, j) = Rational(rng.intIn(-2, 2));
        w(j, i) = -w(i, j);
      }
    const QMatrix k = base.metric().gInv() * w;
    const QMatrix ipk = QMatrix::Identity(n, n) + k;
    if (determinant(ipk).isZero()) continue;
    q = (QMatrix::Identity(n, n) - k) * inverse(ipk);
    break;
  }

  // Conjugated structure constants: e'_i = Q e_i.
  const QMatrix qInv = inverse(q);
  Structure c = zeroStructure(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVector bracket = QVector::Constant(n, Rational(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Rational f = q(a, i) * q(b, j);
          if (f.isZero()) continue;
          for (int k = 0; k < n; ++k) {
            const Poly& s = base.dorfmanBasis(a, b).coeff({k});
            if (!s.isZero()) bracket(k) += f * s.constantTerm();
          }
        }
      const QVector coords = qInv * bracket;
      for (int k = 0; k < n; ++k) c[i][j][k] = coords(k);
    }
  return pointAlgebroid(n, c, g, "random_quadratic(" + std::to_string(seed) + ")");
}

LieBialgebraData LieBialgebraData::abelianPair(int n) {
  LieBialgebraData b;
  b.n = n;
  b.gamma_g = zeroStructure(n);
  b.gamma_dual = zeroStructure(n);
  return b;
}

namespace {

void requireLie(const Structure& c, int n, const std::string& which) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k])
          throw std::invalid_argument("LieBialgebraData: " + which +
                                      " bracket not antisymmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rational jac(0);
          for (int l = 0; l < n; ++l)
            jac += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
          if (!jac.isZero())
            throw std::invalid_argument("LieBialgebraData: " + which +
                                        " bracket fails Jacobi at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
        }
}

}  // namespace

void LieBialgebraData::validate() const {
  if (static_cast<int>(gamma_g.size()) != n || static_cast<int>(gamma_dual.size()) != n)
    throw std::invalid_argument("LieBialgebraData: structure tables must be n x n x n");
  requireLie(gamma_g, n, "g");
  requireLie(gamma_dual, n, "g*");
  // Mixed compatibility: the cobracket delta(e_k) = sum_{a<b} gamma^k_{ab} e_a^e_b
  // is a 1-cocycle for the adjoint action.
  auto delta = [&](int k) {
    std::map<std::pair<int, int>, Rational> out;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const Rational v = gamma_dual[a][b][k];
        if (!v.isZero()) out[{a, b}] = v;
      }
    return out;
  };
  auto addWedge = [&](std::map<std::pair<int, int>, Rational>& acc, int a, int b,
                      const Rational& v) {
    if (a == b || v.isZero()) return;
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    acc[key] += (a < b) ? v : -v;
    if (acc[key].isZero()) acc.erase(key);
  };
  auto adOnWedge = [&](int x, const std::map<std::pair<int, int>, Rational>& w) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [ab, v] : w) {
      for (int k = 0; k < n; ++k) {
        addWedge(out, k, ab.second, v * gamma_g[x][ab.first][k]);
        addWedge(out, ab.first, k, v * gamma_g[x][ab.second][k]);
      }
    }
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // delta([e_i,e_j]) - ad_i delta(e_j) + ad_j delta(e_i) = 0
      std::map<std::pair<int, int>, Rational> acc;
      for (int k = 0; k < n; ++k)
        for (const auto& [ab, v] : delta(k))
          addWedge(acc, ab.first, ab.second, gamma_g[i][j][k] * v);
      for (const auto& [ab, v] : adOnWedge(i, delta(j))) addWedge(acc, ab.first, ab.second, -v);
      for (const auto& [ab, v] : adOnWedge(j, delta(i))) addWedge(acc, ab.first, ab.second, v);
      if (!acc.empty())
        throw std::invalid_argument(
            "LieBialgebraData: cocycle compatibility fails on basis pair (" +
            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

Algebroid drinfeldDouble(const LieBialgebraData& b) {
  b.validate();
  const int n = b.n;
  const int N = 2 * n;
  Structure c = zeroStructure(N);
  // g block and g* block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c[i][j][k] = b.gamma_g[i][j][k];
        c[n + i][n + j][n + k] = b.gamma_dual[i][j][k];
      }
  // mixed: [e_i, eps^j] = ad*_{e_i} eps^j - ad*_{eps^j} e_i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) c[i][n + j][n + k] = -b.gamma_g[i][k][j];
      for (int k = 0; k < n; ++k) c[i][n + j][k] = b.gamma_dual[j][k][i];
      for (int k = 0; k < N; ++k) c[n + j][i][k] = -c[i][n + j][k];
    }
  QMatrix g = QMatrix::Constant(N, N, Rational(0));
  for (int i = 0; i < n; ++i) g(i, n + i) = g(n + i, i) = Rational(1);
  return pointAlgebroid(N, c, std::move(g), "drinfeld_double");
}

ThreeFormData ThreeFormData::zero(const Ring& ring) {
  ThreeFormData f;
  f.m = ring.numVars();
  f.ring = ring;
  return f;
}

ThreeFormData ThreeFormData::constantVolume(const Ring& ring) {
  if (ring.numVars() != 3)
    throw std::invalid_argument("ThreeFormData::constantVolume: three variables required");
  ThreeFormData f = zero(ring);
  f.components[{0, 1, 2}] = Poly::constant(ring, Rational(1));
  return f;
}

Poly ThreeFormData::component(const IndexSet& idx) const {
  auto it = components.find(idx);
  return it == components.end() ? Poly(ring) : it->second;
}

Poly ThreeFormData::evaluate(int a, int b, int c) const {
  int v[3] = {a, b, c};
  int sign = 1;
  // sort three indices, tracking the permutation sign
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  if (v[0] == v[1] || v[1] == v[2]) return Poly(ring);
  const Poly p = component({v[0], v[1], v[2]});
  return sign > 0 ? p : -p;
}

void ThreeFormData::requireClosed() const {
  for (const auto& idx : subsets(m, 4)) {
    Poly d(ring);
    for (int pos = 0; pos < 4; ++pos) {
      IndexSet rest;
      for (int t = 0; t < 4; ++t)
        if (t != pos) rest.push_back(idx[t]);
      Poly term = component(rest).partial(idx[pos]);
      if (pos % 2 == 1) term = -term;
      d += term;
    }
    if (!d.isZero())
      throw std::invalid_argument("ThreeFormData: dphi != 0, component (dphi)_{" +
                                  std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1) +
                                  std::to_string(idx[2] + 1) + std::to_string(idx[3] + 1) +
                                  "} = " + d.str());
  }
}

Algebroid exactCourant(int m, const ThreeFormData& phi) {
  if (m <= 0) throw std::invalid_argument("exactCourant: positive dimension required");
  if (phi.m != m)
    throw std::invalid_argument("exactCourant: three-form dimension mismatch");
  phi.requireClosed();
  const Ring& ring = phi.ring;
  const int N = 2 * m;
  std::vector<std::vector<std::vector<Poly>>> dorf(
      N, std::vector<std::vector<Poly>>(N, std::vector<Poly>(N, Poly(ring))));
  // Only vector-vector brackets are nonzero on the coordinate frame:
  // d_i o d_j = phi(d_i, d_j, d_k) dx_k.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) dorf[i][j][m + k] = phi.evaluate(i, j, k);
  std::vector<Derivation> anchor;
  for (int i = 0; i < m; ++i) anchor.push_back(Derivation::coordinate(ring, i));
  for (int i = 0; i < m; ++i) anchor.push_back(Derivation::zero(ring));
  QMatrix g = QMatrix::Constant(N, N, Rational(0));
  for (int i = 0; i < m; ++i) g(i, m + i) = g(m + i, i) = Rational(1);
  std::vector<Section> frame;
  for (int i = 0; i < m; ++i) frame.push_back(Section::basisVector(N, ring, m + i));
  return Algebroid(N, ring, Metric(std::move(g)), std::move(anchor), std::move(dorf),
                   std::move(frame), "exact_courant(" + std::to_string(m) + ")");
}

Ring affineRing(int m) {
  if (m <= 0) throw std::invalid_argument("affineRing: positive dimension required");
  static const std::vector<std::string> letters = {"x", "y", "z"};
  std::vector<std::string> vars;
  for (int i = 0; i < m; ++i)
    vars.push_back(m <= 3 ? letters[i] : "x" + std::to_string(i + 1));
  return Ring(vars);
}

LieBialgebraData bialgebraPreset(const std::string& name) {
  const ParsedName p = parseName(name);
  if (p.head == "abelian") {
    if (p.args.size() != 1)
      throw std::invalid_argument("bialgebraPreset: abelian(n) takes one argument");
    return LieBialgebraData::abelianPair(std::stoi(p.args[0]));
  }
  if (p.head == "aff1_abelian") {
    // [e1, e2] = e2 on g, abelian dual
    LieBialgebraData b = LieBialgebraData::abelianPair(2);
    b.gamma_g[0][1][1] = Rational(1);
    b.gamma_g[1][0][1] = Rational(-1);
    return b;
  }
  if (p.head == "abelian_aff1") {
    // abelian g, [eps^1, eps^2] = eps^2 on the dual
    LieBialgebraData b = LieBialgebraData::abelianPair(2);
    b.gamma_dual[0][1][1] = Rational(1);
    b.gamma_dual[1][0][1] = Rational(-1);
    return b;
  }
  throw std::invalid_argument("bialgebraPreset: unknown preset '" + name + "'");
}

Algebroid namedFixture(const std::string& name) {
  const ParsedName p = parseName(name);
  if (p.head == "exact_courant") {
    if (p.args.empty() || p.args.size() > 2)
      throw std::invalid_argument("namedFixture: exact_courant(m[,twist]) takes 1 or 2 arguments");
    const int m = std::stoi(p.args[0]);
    const Ring ring = affineRing(m);
    const std::string twist = p.args.size() == 2 ? p.args[1] : "zero";
    ThreeFormData phi = ThreeFormData::zero(ring);
    if (twist == "volume") {
      phi = ThreeFormData::constantVolume(ring);
    } else if (twist == "linear") {
      if (m != 3)
        throw std::invalid_argument("namedFixture: the linear twist needs m = 3");
      phi.components[{0, 1, 2}] = Poly::variable(ring, 0);
    } else if (twist != "zero") {
      throw std::invalid_argument("namedFixture: unknown twist '" + twist + "'");
    }
    return exactCourant(m, phi);
  }
  if (p.head == "double") {
    if (p.args.size() != 1)
      throw std::invalid_argument("namedFixture: double(preset) takes one argument");
    return drinfeldDouble(bialgebraPreset(p.args[0]));
  }
  return catalog(name);
}

}  // namespace loday
