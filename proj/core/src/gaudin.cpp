#include "gaudinlab/gaudin.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace gaudinlab {

namespace {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (sgn(base) == 0) throw std::invalid_argument("zero raised to a negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat r(1);
  for (long k = 0; k < e; ++k) r *= base;
  return r;
}

Rat binom(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (long i = 0; i < k; ++i) r *= Rat(n - i) / Rat(i + 1);
  return r;
}

Rat form_pairing(const QMatrix& gram, const QVector& a, const QVector& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      s += a[i] * gram(i, j) * b[j];
    }
  }
  return s;
}

}  // namespace

std::string mode_name(BoundaryMode m) {
  switch (m) {
    case BoundaryMode::kPeriodic: return "periodic";
    case BoundaryMode::kRegularQuasiPeriodic: return "regular";
    case BoundaryMode::kGeneral: return "general";
  }
  return "?";
}

BoundaryMode parse_mode(const std::string& s) {
  if (s == "periodic") return BoundaryMode::kPeriodic;
  if (s == "regular") return BoundaryMode::kRegularQuasiPeriodic;
  if (s == "general") return BoundaryMode::kGeneral;
  throw ConfigError("mode", "unknown mode '" + s + "' (periodic|regular|general)");
}

GaudinConfig GaudinConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError("(root)", std::string("JSON parse failure: ") + e.what());
  }
  GaudinConfig cfg;
  try {
    const auto& alg = j.at("algebra");
    std::string t = alg.at("type").get<std::string>();
    if (t.size() != 1) throw ConfigError("algebra.type", "expected a single letter");
    cfg.type = t[0];
    cfg.rank = alg.at("rank").get<std::size_t>();
    if (alg.contains("form")) cfg.form = parse_form(alg.at("form").get<std::string>());
    for (const auto& w : j.at("weights"))
      cfg.weights.push_back(w.get<std::vector<long>>());
    for (const auto& zs : j.at("z")) cfg.z.push_back(parse_rat(zs.get<std::string>()));
    cfg.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("mu")) {
      const auto& mu = j.at("mu");
      if (mu.contains("h"))
        for (const auto& s : mu.at("h")) cfg.mu_h.push_back(parse_rat(s.get<std::string>()));
      if (mu.contains("f"))
        for (const auto& [k, v] : mu.at("f").items()) {
          std::size_t idx = std::stoul(k);
          if (idx == 0) throw ConfigError("mu.f", "positive-root indices are 1-based");
          cfg.mu_f[idx - 1] = parse_rat(v.get<std::string>());
        }
    }
    cfg.include_cartan = cfg.include_cartan_default();
    if (j.contains("checks")) {
      const auto& c = j.at("checks");
      if (c.contains("include_cartan")) cfg.include_cartan = c.at("include_cartan").get<bool>();
      if (c.contains("allow_zero_z")) cfg.allow_zero_z = c.at("allow_zero_z").get<bool>();
    }
    if (j.contains("dim_cap")) cfg.dim_cap = j.at("dim_cap").get<std::size_t>();
    if (j.contains("extra_generators"))
      for (const auto& mono : j.at("extra_generators")) {
        std::vector<std::pair<std::string, long>> m;
        for (const auto& factor : mono)
          m.emplace_back(factor.at(0).get<std::string>(), factor.at(1).get<long>());
        cfg.extra_generators.push_back(std::move(m));
      }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("(root)", std::string("malformed config: ") + e.what());
  }
  return cfg;
}

std::string GaudinConfig::canonical_text() const {
  nlohmann::ordered_json j;
  j["algebra"]["type"] = std::string(1, type);
  j["algebra"]["rank"] = rank;
  j["algebra"]["form"] = form_name(form);
  j["weights"] = weights;
  auto zj = nlohmann::ordered_json::array();
  for (const Rat& q : z) zj.push_back(rat_str(q));
  j["z"] = std::move(zj);
  auto hj = nlohmann::ordered_json::array();
  for (const Rat& q : mu_h) hj.push_back(rat_str(q));
  j["mu"]["h"] = std::move(hj);
  auto fj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : mu_f) fj[std::to_string(k + 1)] = rat_str(v);
  j["mu"]["f"] = std::move(fj);
  j["mode"] = mode_name(mode);
  j["include_cartan"] = include_cartan;
  j["allow_zero_z"] = allow_zero_z;
  j["dim_cap"] = dim_cap;
  j["extra_generators"] = extra_generators;
  return j.dump();
}

QVector GaudinConfig::mu_vector(const ChevalleyAlgebra& alg) const {
  QVector mu(alg.dim());
  for (std::size_t i = 0; i < mu_h.size(); ++i) mu[alg.h_index(i)] = mu_h[i];
  for (const auto& [a, v] : mu_f) mu[alg.f_index(a)] = v;
  return mu;
}

void GaudinConfig::validate(const ChevalleyAlgebra& alg) const {
  if (weights.empty()) throw ConfigError("weights", "at least one site is required");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != rank)
      throw ConfigError("weights[" + std::to_string(i) + "]", "wrong rank");
    for (long x : weights[i])
      if (x < 0)
        throw ConfigError("weights[" + std::to_string(i) + "]",
                          "weight must be dominant integral");
  }
  if (z.size() != weights.size())
    throw ConfigError("z", "need one evaluation point per site");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!allow_zero_z && sgn(z[i]) == 0)
      throw ConfigError("z[" + std::to_string(i) + "]",
                        "evaluation points must be nonzero");
    for (std::size_t k = i + 1; k < z.size(); ++k)
      if (z[i] == z[k])
        throw ConfigError("z", "evaluation points must be pairwise distinct (z[" +
                                   std::to_string(i) + "] = z[" + std::to_string(k) + "])");
  }
  if (!mu_h.empty() && mu_h.size() != rank)
    throw ConfigError("mu.h", "expected " + std::to_string(rank) + " coordinates");
  for (const auto& [a, v] : mu_f) {
    (void)v;
    if (a >= alg.num_positive())
      throw ConfigError("mu.f", "positive-root index out of range: " + std::to_string(a + 1));
  }
  bool h_zero = true;
  for (const Rat& q : mu_h)
    if (sgn(q) != 0) h_zero = false;
  switch (mode) {
    case BoundaryMode::kPeriodic:
      if (!h_zero || !mu_f.empty())
        throw ConfigError("mu", "periodic mode requires mu = 0");
      break;
    case BoundaryMode::kRegularQuasiPeriodic: {
      if (!mu_f.empty())
        throw ConfigError("mu.f", "regular mode requires mu supported on h");
      auto verdict = check_mu_regular(alg, mu_vector(alg));
      if (!verdict.regular) {
        std::string witness = verdict.vanishing.empty()
                                  ? std::string("h part missing")
                                  : "alpha_" + std::to_string(verdict.vanishing.front() + 1) +
                                        "(mu) = 0";
        throw ConfigError("mu.h", "mu is not regular: " + witness);
      }
      break;
    }
    case BoundaryMode::kGeneral:
      break;  // any mu in b_- = n_- + h
  }
}

TensorModule::TensorModule(
    std::vector<std::shared_ptr<const HighestWeightModule>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("TensorModule needs factors");
  stride_.assign(factors_.size(), 1);
  for (std::size_t a = factors_.size(); a-- > 1;)
    stride_[a - 1] = stride_[a] * factors_[a]->dim();
  dim_ = stride_[0] * factors_[0]->dim();

  gram_ = QMatrix(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Rat v(1);
      for (std::size_t a = 0; a < factors_.size(); ++a) {
        std::size_t ia = (i / stride_[a]) % factors_[a]->dim();
        std::size_t ja = (j / stride_[a]) % factors_[a]->dim();
        const Rat& g = factors_[a]->shapovalov()(ia, ja);
        if (sgn(g) == 0) {
          v = 0;
          break;
        }
        v *= g;
      }
      gram_(i, j) = v;
    }
}

QMatrix TensorModule::site_action(std::size_t a, const QMatrix& x) const {
  const std::size_t na = factors_[a]->dim();
  if (x.rows() != na || x.cols() != na)
    throw std::invalid_argument("site_action: factor dimension mismatch");
  QMatrix out(dim_, dim_);
  const std::size_t sa = stride_[a];
  for (std::size_t j = 0; j < dim_; ++j) {
    std::size_t ja = (j / sa) % na;
    for (std::size_t ia = 0; ia < na; ++ia) {
      const Rat& v = x(ia, ja);
      if (sgn(v) == 0) continue;
      std::size_t i = j + (ia - ja) * sa;  // wraps correctly in unsigned arith
      out(i, j) = v;
    }
  }
  return out;
}

QMatrix TensorModule::pair_action(std::size_t a, const QMatrix& x, std::size_t b,
                                  const QMatrix& y) const {
  if (a == b) throw std::invalid_argument("pair_action needs distinct sites");
  const std::size_t na = factors_[a]->dim(), nb = factors_[b]->dim();
  const std::size_t sa = stride_[a], sb = stride_[b];
  QMatrix out(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::size_t ja = (j / sa) % na, jb = (j / sb) % nb;
    for (std::size_t ia = 0; ia < na; ++ia) {
      const Rat& xv = x(ia, ja);
      if (sgn(xv) == 0) continue;
      for (std::size_t ib = 0; ib < nb; ++ib) {
        const Rat& yv = y(ib, jb);
        if (sgn(yv) == 0) continue;
        std::size_t i = j + (ia - ja) * sa + (ib - jb) * sb;
        out(i, j) += xv * yv;
      }
    }
  }
  return out;
}

QMatrix TensorModule::diagonal_action(std::size_t basis_idx) const {
  QMatrix out(dim_, dim_);
  for (std::size_t a = 0; a < factors_.size(); ++a)
    out = out + site_action(a, factors_[a]->action(basis_idx));
  return out;
}

QMatrix TensorModule::diagonal_action_of(const QVector& x) const {
  QMatrix out(dim_, dim_);
  for (std::size_t a = 0; a < factors_.size(); ++a)
    out = out + site_action(a, factors_[a]->action_of(x));
  return out;
}

QMatrix evaluation_action(const HighestWeightModule& mod, const Rat& z,
                          std::size_t basis_idx, long s) {
  if (s < 0 && sgn(z) == 0)
    throw std::invalid_argument("evaluation at z = 0 with negative mode");
  return rat_pow(z, s) * mod.action(basis_idx);
}

QMatrix combined_map(const TensorModule& tensor, const std::vector<Rat>& z,
                     const QVector& mu, const QMatrix& form_gram, const QVector& x,
                     long s) {
  QMatrix out(tensor.dim(), tensor.dim());
  for (std::size_t a = 0; a < tensor.num_sites(); ++a) {
    if (s < 0 && sgn(z[a]) == 0)
      throw std::invalid_argument("evaluation at z = 0 with negative mode");
    out = out + rat_pow(z[a], s) * tensor.site_action(a, tensor.factor(a).action_of(x));
  }
  if (s == -1) {
    Rat muval = form_pairing(form_gram, mu, x);
    if (sgn(muval) != 0)
      for (std::size_t i = 0; i < tensor.dim(); ++i) out(i, i) += muval;
  }
  return out;
}

QMatrix omega_pair(const TensorModule& tensor, const DualBases& duals, std::size_t a,
                   std::size_t b) {
  const ChevalleyAlgebra& alg = tensor.algebra();
  if (a == b) {
    QMatrix c(tensor.factor(a).dim(), tensor.factor(a).dim());
    for (std::size_t k = 0; k < alg.dim(); ++k)
      c = c + tensor.factor(a).action(k) * tensor.factor(a).action_of(duals.dual[k]);
    return tensor.site_action(a, c);
  }
  QMatrix out(tensor.dim(), tensor.dim());
  for (std::size_t k = 0; k < alg.dim(); ++k)
    out = out + tensor.pair_action(a, tensor.factor(a).action(k), b,
                                   tensor.factor(b).action_of(duals.dual[k]));
  return out;
}

QMatrix RationalOperatorFunction::evaluate(const Rat& u) const {
  for (const auto& [key, m] : coeffs) {
    (void)m;
    if (u == poles[key.first])
      throw std::invalid_argument("evaluation at a pole");
  }
  QMatrix out = constant;
  for (const auto& [key, m] : coeffs) {
    Rat denom = rat_pow(u - poles[key.first], key.second);
    out = out + (Rat(1) / denom) * m;
  }
  return out;
}

QMatrix RationalOperatorFunction::coeff_or_zero(std::size_t pole, int order) const {
  auto it = coeffs.find({pole, order});
  if (it != coeffs.end()) return it->second;
  return QMatrix(constant.rows(), constant.cols());
}

RationalOperatorFunction RationalOperatorFunction::derivative() const {
  RationalOperatorFunction d;
  d.poles = poles;
  d.constant = QMatrix(constant.rows(), constant.cols());
  for (const auto& [key, m] : coeffs)
    d.coeffs[{key.first, key.second + 1}] = Rat(-key.second) * m;
  return d;
}

void RationalOperatorFunction::add_inplace(const RationalOperatorFunction& other) {
  constant = constant + other.constant;
  for (const auto& [key, m] : other.coeffs) {
    auto it = coeffs.find(key);
    if (it == coeffs.end())
      coeffs.emplace(key, m);
    else
      it->second = it->second + m;
  }
}

void RationalOperatorFunction::scale_inplace(const Rat& c) {
  constant = c * constant;
  for (auto& [key, m] : coeffs) m = c * m;
}

RationalOperatorFunction RationalOperatorFunction::product(
    const RationalOperatorFunction& f, const RationalOperatorFunction& g) {
  if (f.poles != g.poles)
    throw std::invalid_argument("operator-function product: pole mismatch");
  RationalOperatorFunction r;
  r.poles = f.poles;
  const std::size_t n = f.constant.rows();
  r.constant = QMatrix(n, n);

  auto add = [&](std::size_t pole, int order, QMatrix m) {
    if (m.is_zero()) return;
    auto key = std::make_pair(pole, order);
    auto it = r.coeffs.find(key);
    if (it == r.coeffs.end())
      r.coeffs.emplace(key, std::move(m));
    else
      it->second = it->second + m;
  };

  const bool fc = !f.constant.is_zero();
  const bool gc = !g.constant.is_zero();
  if (fc && gc) r.constant = f.constant * g.constant;
  if (fc)
    for (const auto& [key, m] : g.coeffs) add(key.first, key.second, f.constant * m);
  if (gc)
    for (const auto& [key, m] : f.coeffs) add(key.first, key.second, m * g.constant);

  for (const auto& [ka, pa] : f.coeffs)
    for (const auto& [kb, pb] : g.coeffs) {
      QMatrix prod = pa * pb;
      if (prod.is_zero()) continue;
      const auto [a, i] = ka;
      const auto [b, jj] = kb;
      if (a == b) {
        add(a, i + jj, std::move(prod));
        continue;
      }
      // 1/((u-za)^i (u-zb)^j) re-expanded into simple partial fractions
      Rat dab = f.poles[a] - f.poles[b];
      for (int m = 1; m <= i; ++m) {
        int nn = i - m;
        Rat c = binom(jj + nn - 1, nn) / rat_pow(dab, jj + nn);
        if (nn % 2 != 0) c = -c;
        add(a, m, c * prod);
      }
      for (int m = 1; m <= jj; ++m) {
        int nn = jj - m;
        Rat c = binom(i + nn - 1, nn) / rat_pow(-dab, i + nn);
        if (nn % 2 != 0) c = -c;
        add(b, m, c * prod);
      }
    }
  return r;
}

RationalOperatorFunction realize_current(const TensorModule& tensor,
                                         const std::vector<Rat>& z, const QVector& mu,
                                         const QMatrix& form_gram, const QVector& x) {
  RationalOperatorFunction f;
  f.poles = z;
  const std::size_t n = tensor.dim();
  f.constant = QMatrix(n, n);
  Rat muval = form_pairing(form_gram, mu, x);
  if (sgn(muval) != 0)
    for (std::size_t i = 0; i < n; ++i) f.constant(i, i) = muval;
  for (std::size_t a = 0; a < tensor.num_sites(); ++a) {
    QMatrix m = tensor.site_action(a, tensor.factor(a).action_of(x));
    if (!m.is_zero()) f.coeffs[{a, 1}] = std::move(m);
  }
  return f;
}

RationalOperatorFunction realize_current_monomial(
    const TensorModule& tensor, const std::vector<Rat>& z, const QVector& mu,
    const QMatrix& form_gram, const std::vector<std::pair<QVector, long>>& monomial) {
  if (monomial.empty())
    throw std::invalid_argument("current monomial must be nonempty");
  for (const auto& [x, s] : monomial) {
    (void)x;
    if (s < 0) throw std::invalid_argument("current monomial: negative derivative order");
  }
  RationalOperatorFunction result;
  bool first = true;
  for (const auto& [x, s] : monomial) {
    RationalOperatorFunction cur = realize_current(tensor, z, mu, form_gram, x);
    Rat fact(1);
    for (long k = 0; k < s; ++k) {
      cur = cur.derivative();
      fact *= Rat(k + 1);
    }
    cur.scale_inplace(Rat(1) / fact);
    if (first) {
      result = std::move(cur);
      first = false;
    } else {
      result = RationalOperatorFunction::product(result, cur);
    }
  }
  if (monomial.size() % 2 != 0) result.scale_inplace(Rat(-1));
  return result;
}

RationalOperatorFunction realize_quadratic(const TensorModule& tensor,
                                           const std::vector<Rat>& z, const QVector& mu,
                                           const QMatrix& form_gram,
                                           const DualBases& duals) {
  const ChevalleyAlgebra& alg = tensor.algebra();
  RationalOperatorFunction sum;
  sum.poles = z;
  sum.constant = QMatrix(tensor.dim(), tensor.dim());
  for (std::size_t c = 0; c < alg.dim(); ++c) {
    auto term = realize_current_monomial(
        tensor, z, mu, form_gram, {{duals.primal[c], 0}, {duals.dual[c], 0}});
    sum.add_inplace(term);
  }
  return sum;
}

std::vector<QMatrix> gaudin_hamiltonians(const TensorModule& tensor,
                                         const std::vector<Rat>& z, const QVector& mu,
                                         const DualBases& duals) {
  const std::size_t ell = tensor.num_sites();
  std::vector<QMatrix> hams;
  hams.reserve(ell);
  std::map<std::pair<std::size_t, std::size_t>, QMatrix> omegas;
  for (std::size_t a = 0; a < ell; ++a)
    for (std::size_t b = a + 1; b < ell; ++b)
      omegas.emplace(std::make_pair(a, b), omega_pair(tensor, duals, a, b));
  for (std::size_t a = 0; a < ell; ++a) {
    QMatrix h(tensor.dim(), tensor.dim());
    for (std::size_t b = 0; b < ell; ++b) {
      if (b == a) continue;
      const QMatrix& om = b > a ? omegas.at({a, b}) : omegas.at({b, a});
      h = h + (Rat(1) / (z[a] - z[b])) * om;
    }
    QMatrix mu_site = tensor.factor(a).action_of(mu);
    if (!mu_site.is_zero()) h = h + tensor.site_action(a, mu_site);
    hams.push_back(std::move(h));
  }
  return hams;
}

std::vector<QVector> twist_centralizer_nplus(const ChevalleyAlgebra& alg,
                                             const QVector& mu) {
  const std::size_t n = alg.dim();
  const std::size_t P = alg.num_positive();
  QMatrix ad_mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(mu[i]) == 0) continue;
    ad_mu = ad_mu + mu[i] * alg.ad(i);
  }
  // restrict the domain to n_+ (the e_alpha columns)
  QMatrix restricted(n, P);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < P; ++a) restricted(i, a) = ad_mu(i, alg.e_index(a));
  std::vector<QVector> basis;
  for (const QVector& k : kernel_basis(restricted)) {
    QVector x(n);
    for (std::size_t a = 0; a < P; ++a) x[alg.e_index(a)] = k[a];
    basis.push_back(std::move(x));
  }
  return basis;
}

ChainSpace chain_space(const TensorModule& tensor, BoundaryMode mode, const QVector& mu) {
  const ChevalleyAlgebra& alg = tensor.algebra();
  const std::size_t n = tensor.dim();
  ChainSpace cs;
  std::vector<QMatrix> conditions;
  switch (mode) {
    case BoundaryMode::kPeriodic:
      cs.condition = "singular";
      for (std::size_t i = 0; i < alg.roots().rank(); ++i)
        conditions.push_back(tensor.diagonal_action(alg.e_index(i)));
      break;
    case BoundaryMode::kRegularQuasiPeriodic:
      cs.condition = "full";
      cs.basis = QMatrix::identity(n);
      return cs;
    case BoundaryMode::kGeneral:
      cs.condition = "centralizer";
      for (const QVector& x : twist_centralizer_nplus(alg, mu))
        conditions.push_back(tensor.diagonal_action_of(x));
      break;
  }
  if (conditions.empty()) {
    cs.basis = QMatrix::identity(n);
    return cs;
  }
  QMatrix stacked(conditions.size() * n, n);
  for (std::size_t c = 0; c < conditions.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(c * n + i, j) = conditions[c](i, j);
  auto kern = kernel_basis(stacked);
  cs.basis = QMatrix(n, kern.size());
  for (std::size_t k = 0; k < kern.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) cs.basis(i, k) = kern[k][i];
  return cs;
}

RegularityVerdict check_mu_regular(const ChevalleyAlgebra& alg, const QVector& mu) {
  for (std::size_t a = 0; a < alg.num_positive(); ++a)
    if (sgn(mu[alg.e_index(a)]) != 0 || sgn(mu[alg.f_index(a)]) != 0)
      throw std::invalid_argument("regularity check requires mu supported on h");
  RegularityVerdict v;
  const auto& rs = alg.roots();
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    Rat val;
    for (std::size_t i = 0; i < rs.rank(); ++i)
      val += mu[alg.h_index(i)] * Rat(rs.pairing(rs.positive_roots()[a], i));
    if (sgn(val) == 0) v.vanishing.push_back(a);
  }
  v.regular = v.vanishing.empty();
  return v;
}

}  // namespace gaudinlab
