#include "todaslice/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/Dense>

#include "todaslice/errors.hpp"

namespace todaslice {

namespace {

using Vec = std::vector<int>;

// Unit vector combinations in the epsilon basis of R^r.
Vec eps(int r, int i, int si, int j = -1, int sj = 0) {
  Vec v(r, 0);
  v[i] += si;
  if (j >= 0) v[j] += sj;
  return v;
}

struct EpsilonData {
  std::vector<Vec> positive;
  std::vector<Vec> simple;
  int ambient = 0;
};

EpsilonData epsilon_data(CartanType type, int r) {
  EpsilonData d;
  if (type == CartanType::A) {
    // sl_{r+1}: e_i - e_j in R^{r+1}.
    const int n = r + 1;
    d.ambient = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.positive.push_back(eps(n, i, 1, j, -1));
    for (int k = 0; k < r; ++k) d.simple.push_back(eps(n, k, 1, k + 1, -1));
    return d;
  }
  d.ambient = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      d.positive.push_back(eps(r, i, 1, j, -1));
      d.positive.push_back(eps(r, i, 1, j, 1));
    }
  }
  for (int k = 0; k + 1 < r; ++k) d.simple.push_back(eps(r, k, 1, k + 1, -1));
  switch (type) {
    case CartanType::B:
      for (int i = 0; i < r; ++i) d.positive.push_back(eps(r, i, 1));
      d.simple.push_back(eps(r, r - 1, 1));
      break;
    case CartanType::C:
      for (int i = 0; i < r; ++i) d.positive.push_back(eps(r, i, 2));
      d.simple.push_back(eps(r, r - 1, 2));
      break;
    case CartanType::D:
      d.simple.push_back(eps(r, r - 2, 1, r - 1, 1));
      break;
    case CartanType::A:
      break;
  }
  return d;
}

}  // namespace

CartanType parse_cartan_type(std::string_view label) {
  if (label == "A" || label == "a") return CartanType::A;
  if (label == "B" || label == "b") return CartanType::B;
  if (label == "C" || label == "c") return CartanType::C;
  if (label == "D" || label == "d") return CartanType::D;
  throw ConfigurationError("unknown Cartan type '" + std::string(label) + "'");
}

std::string to_string(CartanType type) {
  switch (type) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
  }
  return "?";
}

RootSystem RootSystem::build(CartanType type, int rank) {
  if (rank < 1) throw ConfigurationError("rank must be at least 1");
  if (type == CartanType::D && rank < 3)
    throw ConfigurationError("type D requires rank >= 3");

  const EpsilonData d = epsilon_data(type, rank);
  const int m = d.ambient;
  Eigen::MatrixXd simple(m, rank);
  for (int k = 0; k < rank; ++k)
    for (int i = 0; i < m; ++i) simple(i, k) = d.simple[k][i];
  const auto qr = simple.colPivHouseholderQr();

  std::vector<Vec> positive;
  for (const Vec& root : d.positive) {
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) rhs(i) = root[i];
    const Eigen::VectorXd sol = qr.solve(rhs);
    Vec c(rank);
    for (int k = 0; k < rank; ++k) {
      c[k] = static_cast<int>(std::lround(sol(k)));
      if (std::abs(sol(k) - c[k]) > 1e-9 || c[k] < 0)
        throw InternalError("root is not a nonnegative integer combination");
    }
    positive.push_back(std::move(c));
  }

  auto height_of = [](const Vec& c) {
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::stable_sort(positive.begin(), positive.end(),
                   [&](const Vec& a, const Vec& b) {
                     const int ha = height_of(a), hb = height_of(b);
                     if (ha != hb) return ha < hb;
                     // Simple roots in Dynkin order: larger coordinate on an
                     // earlier index first.
                     return a > b;
                   });

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  for (const Vec& c : positive) rs.coords_.push_back(c);
  for (const Vec& c : positive) {
    Vec neg(c);
    for (int& x : neg) x = -x;
    rs.coords_.push_back(std::move(neg));
  }
  for (int id = 0; id < rs.num_roots(); ++id) {
    rs.heights_.push_back(height_of(rs.coords_[id]));
    rs.index_[rs.coords_[id]] = id;
    rs.max_height_ = std::max(rs.max_height_, rs.heights_.back());
  }
  for (int k = 0; k < rank; ++k) {
    Vec unit(rank, 0);
    unit[k] = 1;
    if (rs.coords_[k] != unit) throw InternalError("simple roots misordered");
  }
  return rs;
}

int RootSystem::negative(int root) const {
  const int p = num_positive();
  return root < p ? root + p : root - p;
}

int RootSystem::find(const std::vector<int>& coords) const {
  const auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

std::map<int, std::vector<int>> RootSystem::height_spaces() const {
  std::map<int, std::vector<int>> out;
  for (int id = 0; id < num_roots(); ++id) out[heights_[id]].push_back(id);
  return out;
}

std::string RootSystem::label() const {
  return to_string(type_) + std::to_string(rank_);
}

}  // namespace todaslice
