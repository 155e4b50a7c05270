#include "gaudinlab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudinlab {

Poly poly_trim(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

bool poly_is_zero(const Poly& p) {
  for (const Rat& c : p)
    if (sgn(c) != 0) return false;
  return true;
}

int poly_degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Rat& c, const Poly& a) {
  if (sgn(c) == 0) return {};
  Poly r = a;
  for (Rat& x : r) x *= c;
  return poly_trim(std::move(r));
}

Poly poly_derivative(const Poly& a) {
  if (a.size() < 2) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * a[i];
  return poly_trim(std::move(r));
}

Poly poly_monic(const Poly& a) {
  int d = poly_degree(a);
  if (d < 0) return {};
  return poly_scale(Rat(1) / a[d], a);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  int db = poly_degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  Poly rem = poly_trim(a);
  int dr = poly_degree(rem);
  if (dr < db) return {{}, rem};
  Poly quot(dr - db + 1);
  const Rat& lead = b[db];
  while ((dr = poly_degree(rem)) >= db) {
    Rat c = rem[dr] / lead;
    quot[dr - db] = c;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

QMatrix poly_eval_matrix(const Poly& p, const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("poly_eval_matrix needs a square matrix");
  QMatrix r(m.rows(), m.rows());
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * m;
    if (sgn(p[i]) != 0) {
      for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) += p[i];
    }
  }
  return r;
}

std::vector<std::pair<Poly, int>> squarefree_split(const Poly& p) {
  Poly q = poly_monic(p);
  if (q.empty()) throw std::invalid_argument("squarefree_split of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (poly_degree(q) == 0) return out;
  Poly g = poly_gcd(q, poly_derivative(q));
  Poly w = poly_divmod(q, g).first;
  int i = 1;
  while (poly_degree(w) > 0) {
    Poly y = poly_gcd(w, g);
    Poly z = poly_divmod(w, y).first;
    if (poly_degree(z) > 0) out.emplace_back(poly_monic(z), i);
    w = std::move(y);
    g = poly_divmod(g, w).first;
    ++i;
  }
  return out;
}

std::string poly_str(const Poly& p) {
  int d = poly_degree(p);
  if (d < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = d; i >= 0; --i) {
    if (sgn(p[i]) == 0) continue;
    Rat c = p[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (i == 0 || c != 1) os << rat_str(c);
    if (i > 0) {
      if (c != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace gaudinlab
