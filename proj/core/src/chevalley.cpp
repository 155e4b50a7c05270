#include "gaudinlab/chevalley.hpp"

#include <stdexcept>

namespace gaudinlab {

FormNormalization parse_form(const std::string& s) {
  if (s == "killing") return FormNormalization::kKilling;
  if (s == "normalized") return FormNormalization::kNormalized;
  throw std::invalid_argument("unknown form normalization: " + s);
}

std::string form_name(FormNormalization f) {
  return f == FormNormalization::kKilling ? "killing" : "normalized";
}

namespace {
RootVec vec_add(const RootVec& a, const RootVec& b) {
  RootVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}
RootVec vec_neg(const RootVec& a) {
  RootVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return s;
}
bool vec_is_zero(const RootVec& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}
}  // namespace

long ChevalleyAlgebra::npos(std::size_t a, std::size_t b) const {
  return npos_[a * rs_.num_positive() + b];
}

Rat ChevalleyAlgebra::n_constant(const RootVec& alpha, const RootVec& beta) const {
  RootVec sum = vec_add(alpha, beta);
  if (vec_is_zero(sum) || !rs_.is_root(sum)) return Rat(0);
  auto la = rs_.lookup(alpha), lb = rs_.lookup(beta);
  if (la.index < 0 || lb.index < 0)
    throw std::invalid_argument("n_constant: arguments must be roots");
  if (la.sign > 0 && lb.sign > 0) {
    if (la.index > lb.index) return -n_constant(beta, alpha);
    return Rat(npos(static_cast<std::size_t>(la.index), static_cast<std::size_t>(lb.index)));
  }
  if (la.sign < 0 && lb.sign < 0) return -n_constant(vec_neg(alpha), vec_neg(beta));
  if (la.sign < 0) return -n_constant(beta, alpha);
  // alpha positive, beta negative, sum a root
  auto ls = rs_.lookup(sum);
  if (ls.sign > 0) {
    // from N_{x,y}/(z,z) = N_{y,z}/(x,x) on the triple (alpha, beta, -sum)
    return -(rs_.bilinear(sum, sum) / rs_.bilinear(alpha, alpha)) *
           n_constant(vec_neg(beta), sum);
  }
  return -n_constant(vec_neg(alpha), vec_neg(beta));
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const std::size_t P = rs_.num_positive();
  const std::size_t r = rs_.rank();
  dim_ = 2 * P + r;
  npos_.assign(P * P, 0);
  defining_.assign(P, {0, 0});

  // Structure-constant signs: extraspecial pairs positive, the rest forced
  // by the standard bilinear identities on root quadruples.
  for (std::size_t c = r; c < P; ++c) {
    const RootVec& gamma = rs_.positive_roots()[c];
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = a + 1; b < c; ++b)
        if (vec_add(rs_.positive_roots()[a], rs_.positive_roots()[b]) == gamma)
          special.emplace_back(a, b);
    if (special.empty())
      throw std::logic_error("positive root with no special pair");
    defining_[c] = special.front();  // minimal first member: extraspecial
    auto [xi_i, eta_i] = defining_[c];
    const RootVec& xi = rs_.positive_roots()[xi_i];
    const RootVec& eta = rs_.positive_roots()[eta_i];
    npos_[xi_i * P + eta_i] = rs_.string_down(eta, xi) + 1;

    for (std::size_t k = 1; k < special.size(); ++k) {
      auto [a_i, b_i] = special[k];
      const RootVec& alpha = rs_.positive_roots()[a_i];
      const RootVec& beta = rs_.positive_roots()[b_i];
      Rat acc;
      RootVec xma = vec_add(xi, vec_neg(alpha));  // xi - alpha
      if (rs_.is_root(xma))
        acc += n_constant(xi, vec_neg(alpha)) * n_constant(eta, vec_neg(beta)) /
               rs_.bilinear(xma, xma);
      RootVec ema = vec_add(eta, vec_neg(alpha));  // eta - alpha
      if (rs_.is_root(ema))
        acc += n_constant(vec_neg(alpha), eta) * n_constant(xi, vec_neg(beta)) /
               rs_.bilinear(ema, ema);
      Rat val = -rs_.bilinear(gamma, gamma) / Rat(npos(xi_i, eta_i)) * acc;
      if (val.get_den() != 1)
        throw std::logic_error("non-integral structure constant");
      npos_[a_i * P + b_i] = val.get_num().get_si();
    }
  }

  // Coroots: alpha^vee = sum_i m_i d_i / d_alpha * alpha_i^vee.
  coroots_.resize(P);
  for (std::size_t a = 0; a < P; ++a) {
    const RootVec& alpha = rs_.positive_roots()[a];
    Rat dal = rs_.bilinear(alpha, alpha) / 2;
    coroots_[a].resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      Rat c = Rat(alpha[i]) * Rat(rs_.d(i)) / dal;
      if (c.get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
      coroots_[a][i] = c.get_num().get_si();
    }
  }

  // Full bracket table over the basis (e_a, f_a, h_i).
  auto root_of = [&](std::size_t idx) -> RootVec {
    if (idx < P) return rs_.positive_roots()[idx];
    return vec_neg(rs_.positive_roots()[idx - P]);
  };
  table_.assign(dim_ * dim_, QVector());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      QVector out(dim_);
      bool i_root = i < 2 * P, j_root = j < 2 * P;
      if (i_root && j_root) {
        RootVec ri = root_of(i), rj = root_of(j);
        RootVec sum = vec_add(ri, rj);
        if (vec_is_zero(sum)) {
          auto li = rs_.lookup(ri);
          const auto& co = coroots_[static_cast<std::size_t>(li.index)];
          for (std::size_t k = 0; k < r; ++k) out[h_index(k)] = Rat(li.sign * co[k]);
        } else if (rs_.is_root(sum)) {
          Rat c = n_constant(ri, rj);
          auto ls = rs_.lookup(sum);
          std::size_t tgt = ls.sign > 0 ? e_index(static_cast<std::size_t>(ls.index))
                                        : f_index(static_cast<std::size_t>(ls.index));
          out[tgt] = c;
        }
      } else if (!i_root && j_root) {
        std::size_t hi = i - 2 * P;
        RootVec rj = root_of(j);
        out[j] = Rat(rs_.pairing(rj, hi));
      } else if (i_root && !j_root) {
        std::size_t hj = j - 2 * P;
        RootVec ri = root_of(i);
        out[i] = Rat(-rs_.pairing(ri, hj));
      }
      table_[i * dim_ + j] = std::move(out);
    }

  ad_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const QVector& col = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    ad_[i] = std::move(m);
  }

  killing_ = QMatrix(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Rat t;
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) {
          const Rat& a = ad_[i](k, l);
          if (sgn(a) == 0) continue;
          const Rat& b = ad_[j](l, k);
          if (sgn(b) == 0) continue;
          t += a * b;
        }
      killing_(i, j) = t;
      killing_(j, i) = t;
    }
}

std::string ChevalleyAlgebra::basis_label(std::size_t idx) const {
  const std::size_t P = rs_.num_positive();
  if (idx < P) return "e_" + std::to_string(idx + 1);
  if (idx < 2 * P) return "f_" + std::to_string(idx - P + 1);
  return "h_" + std::to_string(idx - 2 * P + 1);
}

std::size_t ChevalleyAlgebra::index_of_label(const std::string& label) const {
  if (label.size() < 3 || label[1] != '_')
    throw std::invalid_argument("bad basis label: " + label);
  std::size_t k = std::stoul(label.substr(2));
  if (k == 0) throw std::invalid_argument("basis labels are 1-based: " + label);
  --k;
  switch (label[0]) {
    case 'e':
      if (k < num_positive()) return e_index(k);
      break;
    case 'f':
      if (k < num_positive()) return f_index(k);
      break;
    case 'h':
      if (k < rs_.rank()) return h_index(k);
      break;
  }
  throw std::invalid_argument("basis label out of range: " + label);
}

QVector ChevalleyAlgebra::bracket(const QVector& x, const QVector& y) const {
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat c = x[i] * y[j];
      const QVector& b = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(b[k]) != 0) out[k] += c * b[k];
    }
  }
  return out;
}

QMatrix ChevalleyAlgebra::form_gram(FormNormalization f) const {
  if (f == FormNormalization::kKilling) return killing_;
  // rescale so the highest root has squared length 2
  const std::size_t r = rs_.rank();
  const RootVec& theta = rs_.positive_roots().back();
  QMatrix kh(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) kh(i, j) = killing_(h_index(i), h_index(j));
  QVector tv(r);
  for (std::size_t i = 0; i < r; ++i) tv[i] = Rat(rs_.pairing(theta, i));
  QVector t = solve(kh, tv);
  Rat theta_sq;
  for (std::size_t i = 0; i < r; ++i) theta_sq += t[i] * tv[i];
  return (theta_sq / 2) * killing_;
}

DualBases dual_bases(const ChevalleyAlgebra& alg, const QMatrix& gram) {
  DualBases db;
  const std::size_t n = alg.dim();
  QMatrix inv = inverse(gram);
  db.primal.resize(n);
  db.dual.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    QVector unit(n);
    unit[b] = 1;
    db.primal[b] = std::move(unit);
    QVector d(n);
    for (std::size_t a = 0; a < n; ++a) d[a] = inv(a, b);
    db.dual[b] = std::move(d);
  }
  return db;
}

CartanInvolutionMap cartan_antiinvolution(const ChevalleyAlgebra& alg) {
  const auto& rs = alg.roots();
  const std::size_t P = rs.num_positive();
  const std::size_t r = rs.rank();
  const std::size_t n = alg.dim();
  std::vector<QVector> image(n);
  auto unit = [&](std::size_t k) {
    QVector v(n);
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < r; ++i) {
    image[alg.e_index(i)] = unit(alg.f_index(i));
    image[alg.f_index(i)] = unit(alg.e_index(i));
    image[alg.h_index(i)] = unit(alg.h_index(i));
  }
  for (std::size_t c = r; c < P; ++c) {
    auto [xi, eta] = alg.defining_pair(c);
    const RootVec& xr = rs.positive_roots()[xi];
    const RootVec& er = rs.positive_roots()[eta];
    // w is an anti-involution: w([x, y]) = [w(y), w(x)]
    Rat ne = alg.n_constant(xr, er);
    QVector ec = alg.bracket(image[alg.e_index(eta)], image[alg.e_index(xi)]);
    for (Rat& v : ec) v /= ne;
    image[alg.e_index(c)] = std::move(ec);
    Rat nf = alg.n_constant(vec_neg(xr), vec_neg(er));
    QVector fc = alg.bracket(image[alg.f_index(eta)], image[alg.f_index(xi)]);
    for (Rat& v : fc) v /= nf;
    image[alg.f_index(c)] = std::move(fc);
  }
  CartanInvolutionMap m;
  m.matrix = QMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.matrix(i, j) = image[j][i];
  return m;
}

}  // namespace gaudinlab
