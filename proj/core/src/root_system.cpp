#include "gaudinlab/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gaudinlab {

namespace {

struct DynkinData {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based
  std::vector<long> d;                                     // half squared lengths
};

// Bourbaki numbering throughout. Short roots get d = 1.
DynkinData dynkin_data(char type, std::size_t r) {
  auto chain = [](std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
  };
  DynkinData dd;
  switch (type) {
    case 'A':
      if (r < 1) throw std::invalid_argument("type A requires rank >= 1");
      dd.edges = chain(r);
      dd.d.assign(r, 1);
      return dd;
    case 'B':  // alpha_r short
      if (r < 2) throw std::invalid_argument("type B requires rank >= 2");
      dd.edges = chain(r);
      dd.d.assign(r, 2);
      dd.d[r - 1] = 1;
      return dd;
    case 'C':  // alpha_r long
      if (r < 2) throw std::invalid_argument("type C requires rank >= 2");
      dd.edges = chain(r);
      dd.d.assign(r, 1);
      dd.d[r - 1] = 2;
      return dd;
    case 'D':
      if (r < 4) throw std::invalid_argument("type D requires rank >= 4");
      dd.edges = chain(r - 1);
      dd.edges.emplace_back(r - 3, r - 1);
      dd.d.assign(r, 1);
      return dd;
    case 'E':
      if (r < 6 || r > 8) throw std::invalid_argument("type E requires rank 6, 7, or 8");
      // chain 1-3-4-5-...-r with node 2 attached to node 4 (1-based labels)
      dd.edges = {{0, 2}, {1, 3}};
      for (std::size_t i = 2; i + 1 < r; ++i) dd.edges.emplace_back(i, i + 1);
      dd.d.assign(r, 1);
      return dd;
    case 'F':
      if (r != 4) throw std::invalid_argument("type F requires rank 4");
      dd.edges = chain(4);
      dd.d = {2, 2, 1, 1};
      return dd;
    case 'G':  // alpha_1 short, alpha_2 long; highest root 3a1 + 2a2
      if (r != 2) throw std::invalid_argument("type G requires rank 2");
      dd.edges = chain(2);
      dd.d = {1, 3};
      return dd;
    default:
      throw std::invalid_argument(std::string("unknown type letter '") + type + "'");
  }
}

std::size_t expected_positive_count(char type, std::size_t r) {
  switch (type) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace

RootSystem::Lookup RootSystem::lookup(const RootVec& v) const {
  auto it = index_.find(v);
  if (it != index_.end()) return {static_cast<long>(it->second), 1};
  RootVec neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  it = index_.find(neg);
  if (it != index_.end()) return {static_cast<long>(it->second), -1};
  return {};
}

long RootSystem::height(const RootVec& v) const {
  return std::accumulate(v.begin(), v.end(), 0L);
}

Rat RootSystem::bilinear(const RootVec& a, const RootVec& b) const {
  // (alpha_i, alpha_j) = cartan[i][j] * d_j
  Rat s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(b[j]) * Rat(cartan_[i][j] * d_[j]);
    }
  }
  return s;
}

long RootSystem::pairing(const RootVec& beta, std::size_t i) const {
  long s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s += beta[j] * cartan_[j][i];
  return s;
}

long RootSystem::string_down(const RootVec& beta, const RootVec& alpha) const {
  long k = 0;
  RootVec cur = beta;
  for (;;) {
    for (std::size_t i = 0; i < rank_; ++i) cur[i] -= alpha[i];
    bool zero = std::all_of(cur.begin(), cur.end(), [](long x) { return x == 0; });
    if (zero || !is_root(cur)) break;
    ++k;
  }
  return k;
}

std::string RootSystem::name() const {
  return std::string(1, type_) + std::to_string(rank_);
}

RootSystem build_root_system(char type_letter, std::size_t rank) {
  DynkinData dd = dynkin_data(type_letter, rank);

  RootSystem rs;
  rs.type_ = type_letter;
  rs.rank_ = rank;
  rs.d_ = dd.d;
  rs.cartan_.assign(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
  for (auto [i, j] : dd.edges) {
    long s = -std::max(dd.d[i], dd.d[j]);  // (alpha_i, alpha_j)
    rs.cartan_[i][j] = s / dd.d[j];
    rs.cartan_[j][i] = s / dd.d[i];
  }

  // Closure of the simple roots under root strings, by increasing height.
  std::set<RootVec> found;
  std::vector<RootVec> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    RootVec a(rank, 0);
    a[i] = 1;
    found.insert(a);
    frontier.push_back(a);
  }
  auto is_known = [&](const RootVec& v) {
    if (found.count(v)) return true;
    RootVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return found.count(neg) > 0;
  };
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : frontier) {
      for (std::size_t i = 0; i < rank; ++i) {
        // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
        // p = largest k with beta - k*alpha_i a root.
        long pair = 0;
        for (std::size_t j = 0; j < rank; ++j) pair += beta[j] * rs.cartan_[j][i];
        long p = 0;
        {
          RootVec cur = beta;
          for (;;) {
            cur[i] -= 1;
            bool zero = std::all_of(cur.begin(), cur.end(), [](long x) { return x == 0; });
            if (zero || !is_known(cur)) break;
            ++p;
          }
        }
        if (p - pair <= 0) continue;
        RootVec gamma = beta;
        gamma[i] += 1;
        if (found.insert(gamma).second) next.push_back(gamma);
      }
    }
    frontier = std::move(next);
  }

  rs.positive_.assign(found.begin(), found.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [&](const RootVec& a, const RootVec& b) {
    long ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a > b;  // puts alpha_1 before alpha_2 within a height class
  });
  for (std::size_t i = 0; i < rs.positive_.size(); ++i) rs.index_[rs.positive_[i]] = i;

  if (rs.positive_.size() != expected_positive_count(type_letter, rank))
    throw std::logic_error("root closure produced an unexpected count for " + rs.name());
  return rs;
}

}  // namespace gaudinlab
