#include "gaudinlab/highest_weight.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace gaudinlab {

namespace {

void validate_lambda(const ChevalleyAlgebra& alg, const std::vector<long>& lambda) {
  if (lambda.size() != alg.roots().rank())
    throw std::invalid_argument("highest weight has wrong rank");
  for (long x : lambda)
    if (x < 0) throw std::invalid_argument("highest weight must be dominant integral");
}

Content word_content(std::size_t rank, const Word& w) {
  Content c(rank, 0);
  for (std::uint8_t letter : w) ++c[letter];
  return c;
}

// <lambda - sum c_j alpha_j, alpha_i^vee>
long weight_pairing(const ChevalleyAlgebra& alg, const std::vector<long>& lambda,
                    const Content& c, std::size_t i) {
  long m = lambda[i];
  for (std::size_t j = 0; j < c.size(); ++j) m -= c[j] * alg.roots().cartan(j, i);
  return m;
}

// True iff lambda - sum c_j alpha_j is a weight of V_lambda (its dominant
// Weyl conjugate stays below lambda).
bool is_module_weight(const ChevalleyAlgebra& alg, const std::vector<long>& lambda,
                      Content c) {
  const std::size_t r = c.size();
  std::vector<long> m(r);
  for (std::size_t i = 0; i < r; ++i) m[i] = weight_pairing(alg, lambda, c, i);
  for (;;) {
    std::size_t neg = r;
    for (std::size_t i = 0; i < r; ++i)
      if (m[i] < 0) {
        neg = i;
        break;
      }
    if (neg == r) break;
    long mi = m[neg];
    c[neg] += mi;
    for (std::size_t j = 0; j < r; ++j) m[j] -= mi * alg.roots().cartan(neg, j);
  }
  for (long x : c)
    if (x < 0) return false;
  return true;
}

void enum_words_rec(const Content& remaining, Word& cur, std::vector<Word>& out) {
  bool done = true;
  for (std::size_t i = 0; i < remaining.size(); ++i)
    if (remaining[i] > 0) {
      done = false;
      break;
    }
  if (done) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0) continue;
    Content next = remaining;
    --next[i];
    cur.push_back(static_cast<std::uint8_t>(i));
    enum_words_rec(next, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> enumerate_words(const Content& content) {
  std::vector<Word> out;
  Word cur;
  enum_words_rec(content, cur, out);
  return out;
}

void enum_contents_rec(std::size_t rank, long budget, Content& cur,
                       std::vector<Content>& out) {
  if (cur.size() == rank) {
    out.push_back(cur);
    return;
  }
  for (long k = 0; k <= budget; ++k) {
    cur.push_back(k);
    enum_contents_rec(rank, budget - k, cur, out);
    cur.pop_back();
  }
}

// All content vectors with the given coordinate sum, ascending lex.
std::vector<Content> contents_of_depth(std::size_t rank, long depth) {
  std::vector<Content> all;
  Content cur;
  enum_contents_rec(rank, depth, cur, all);
  std::vector<Content> out;
  for (auto& c : all)
    if (std::accumulate(c.begin(), c.end(), 0L) == depth) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

// Shapovalov pairings on Verma weight spaces via the commutation rewrite
// e_i f_j = f_j e_i + delta_ij h_i, with memoized raising-operator images.
class ShapovalovComputer {
 public:
  ShapovalovComputer(const ChevalleyAlgebra& alg, std::vector<long> lambda)
      : alg_(alg), lambda_(std::move(lambda)) {}

  const std::map<Word, Rat>& apply_e(std::size_t i, const Word& w) {
    auto key = std::make_pair(i, w);
    auto it = ew_memo_.find(key);
    if (it != ew_memo_.end()) return it->second;
    std::map<Word, Rat> res;
    if (!w.empty()) {
      std::uint8_t j = w[0];
      Word rest(w.begin() + 1, w.end());
      for (const auto& [u, c] : apply_e(i, rest)) {
        Word pre;
        pre.reserve(u.size() + 1);
        pre.push_back(j);
        pre.insert(pre.end(), u.begin(), u.end());
        res[pre] += c;
      }
      if (j == i) {
        Content cont = word_content(alg_.roots().rank(), rest);
        long hv = weight_pairing(alg_, lambda_, cont, i);
        if (hv != 0) res[rest] += Rat(hv);
      }
      for (auto it2 = res.begin(); it2 != res.end();)
        it2 = sgn(it2->second) == 0 ? res.erase(it2) : std::next(it2);
    }
    return ew_memo_.emplace(std::move(key), std::move(res)).first->second;
  }

  Rat pairing(const Word& a, const Word& b) {
    if (a.empty()) return b.empty() ? Rat(1) : Rat(0);
    const Word *x = &a, *y = &b;
    if (b < a) std::swap(x, y);
    auto key = std::make_pair(*x, *y);
    auto it = s_memo_.find(key);
    if (it != s_memo_.end()) return it->second;
    std::uint8_t j = x->front();
    Word rest(x->begin() + 1, x->end());
    Rat val;
    for (const auto& [u, c] : apply_e(j, *y)) val += c * pairing(rest, u);
    s_memo_.emplace(std::move(key), val);
    return val;
  }

 private:
  const ChevalleyAlgebra& alg_;
  std::vector<long> lambda_;
  std::map<std::pair<std::size_t, Word>, std::map<Word, Rat>> ew_memo_;
  std::map<std::pair<Word, Word>, Rat> s_memo_;
};

}  // namespace

long irrep_depth(const ChevalleyAlgebra& alg, const std::vector<long>& lambda) {
  validate_lambda(alg, lambda);
  const std::size_t r = alg.roots().rank();
  std::vector<long> m = lambda;
  Content c(r, 0);
  for (;;) {
    std::size_t pos = r;
    for (std::size_t i = 0; i < r; ++i)
      if (m[i] > 0) {
        pos = i;
        break;
      }
    if (pos == r) break;
    long mi = m[pos];
    c[pos] += mi;
    for (std::size_t j = 0; j < r; ++j) m[j] -= mi * alg.roots().cartan(pos, j);
  }
  return std::accumulate(c.begin(), c.end(), 0L);
}

std::vector<VermaBlock> verma_weight_basis(const ChevalleyAlgebra& alg,
                                           const std::vector<long>& lambda,
                                           long depth_cap) {
  validate_lambda(alg, lambda);
  std::vector<VermaBlock> out;
  for (long d = 0; d <= depth_cap; ++d)
    for (const Content& c : contents_of_depth(alg.roots().rank(), d))
      out.push_back({c, enumerate_words(c)});
  return out;
}

QMatrix shapovalov_gram(const ChevalleyAlgebra& alg, const std::vector<long>& lambda,
                        const Content& content) {
  validate_lambda(alg, lambda);
  ShapovalovComputer sc(alg, lambda);
  std::vector<Word> words = enumerate_words(content);
  QMatrix g(words.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      Rat v = sc.pairing(words[i], words[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

HighestWeightModule HighestWeightModule::build(
    std::shared_ptr<const ChevalleyAlgebra> alg, std::vector<long> lambda,
    std::size_t dim_cap) {
  validate_lambda(*alg, lambda);
  const std::size_t r = alg->roots().rank();
  HighestWeightModule mod;
  mod.alg_ = alg;
  mod.lambda_ = lambda;

  const long depth = irrep_depth(*alg, lambda);
  ShapovalovComputer sc(*alg, lambda);

  std::vector<QMatrix> gram_inv;
  std::map<Content, std::size_t> block_of;
  std::size_t dim = 0;
  for (long d = 0; d <= depth; ++d) {
    for (const Content& c : contents_of_depth(r, d)) {
      if (!is_module_weight(*alg, lambda, c)) continue;
      std::vector<Word> words = enumerate_words(c);
      QMatrix g(words.size(), words.size());
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
          Rat v = sc.pairing(words[i], words[j]);
          g(i, j) = v;
          g(j, i) = v;
        }
      RrefResult rr = rref(g);
      if (rr.rank == 0) continue;
      dim += rr.rank;
      if (dim > dim_cap)
        throw ResourceError("irrep dimension exceeds cap (" + std::to_string(dim_cap) +
                            ") for " + alg->roots().name());
      WeightBlock b;
      b.content = c;
      b.words = std::move(words);
      b.pivot = rr.pivots;
      b.gram = QMatrix(rr.rank, rr.rank);
      for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < rr.rank; ++j)
          b.gram(i, j) = g(b.pivot[i], b.pivot[j]);
      gram_inv.push_back(inverse(b.gram));
      block_of[c] = mod.blocks_.size();
      mod.blocks_.push_back(std::move(b));
    }
  }
  mod.dim_ = dim;

  // offsets needed before filling action columns
  std::size_t off = 0;
  for (auto& b : mod.blocks_) {
    b.offset = off;
    off += b.pivot.size();
  }

  // coordinates of a Verma vector (at the block's weight) in the pivot basis
  auto coords_of = [&](std::size_t blk, const std::map<Word, Rat>& vec) {
    const WeightBlock& b = mod.blocks_[blk];
    const std::size_t k = b.pivot.size();
    QVector pair_vals(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Word& pw = b.words[b.pivot[i]];
      Rat acc;
      for (const auto& [u, cf] : vec) acc += cf * sc.pairing(pw, u);
      pair_vals[i] = acc;
    }
    return mat_vec(gram_inv[blk], pair_vals);
  };

  mod.action_.assign(alg->dim(), QMatrix());
  for (std::size_t i = 0; i < r; ++i) {
    QMatrix E(dim, dim), F(dim, dim);
    for (std::size_t blk = 0; blk < mod.blocks_.size(); ++blk) {
      const WeightBlock& b = mod.blocks_[blk];
      for (std::size_t p = 0; p < b.pivot.size(); ++p) {
        const Word& w = b.words[b.pivot[p]];
        const std::size_t col = b.offset + p;
        // f_i w: one deeper
        Content down = b.content;
        ++down[i];
        auto itd = block_of.find(down);
        if (itd != block_of.end()) {
          Word fw;
          fw.reserve(w.size() + 1);
          fw.push_back(static_cast<std::uint8_t>(i));
          fw.insert(fw.end(), w.begin(), w.end());
          QVector coords = coords_of(itd->second, {{fw, Rat(1)}});
          const std::size_t toff = mod.blocks_[itd->second].offset;
          for (std::size_t k = 0; k < coords.size(); ++k) F(toff + k, col) = coords[k];
        }
        // e_i w: one shallower
        if (b.content[i] > 0) {
          Content up = b.content;
          --up[i];
          auto itu = block_of.find(up);
          if (itu != block_of.end()) {
            QVector coords = coords_of(itu->second, sc.apply_e(i, w));
            const std::size_t toff = mod.blocks_[itu->second].offset;
            for (std::size_t k = 0; k < coords.size(); ++k) E(toff + k, col) = coords[k];
          }
        }
      }
    }
    mod.action_[alg->e_index(i)] = std::move(E);
    mod.action_[alg->f_index(i)] = std::move(F);
  }

  mod.finalize_from_blocks();
  return mod;
}

void HighestWeightModule::finalize_from_blocks() {
  const ChevalleyAlgebra& alg = *alg_;
  const std::size_t r = alg.roots().rank();
  const std::size_t P = alg.num_positive();

  std::size_t off = 0;
  for (auto& b : blocks_) {
    b.offset = off;
    off += b.pivot.size();
  }
  dim_ = off;

  gram_ = QMatrix(dim_, dim_);
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.pivot.size(); ++i)
      for (std::size_t j = 0; j < b.pivot.size(); ++j)
        gram_(b.offset + i, b.offset + j) = b.gram(i, j);

  if (action_.size() != alg.dim()) action_.resize(alg.dim());
  for (std::size_t i = 0; i < r; ++i) {
    QMatrix H(dim_, dim_);
    for (const auto& b : blocks_) {
      long hv = weight_pairing(alg, lambda_, b.content, i);
      for (std::size_t k = 0; k < b.pivot.size(); ++k) H(b.offset + k, b.offset + k) = Rat(hv);
    }
    action_[alg.h_index(i)] = std::move(H);
  }
  for (std::size_t c = r; c < P; ++c) {
    auto [xi, eta] = alg.defining_pair(c);
    const RootVec& xr = alg.roots().positive_roots()[xi];
    const RootVec& er = alg.roots().positive_roots()[eta];
    RootVec nxr(xr.size()), ner(er.size());
    for (std::size_t k = 0; k < xr.size(); ++k) {
      nxr[k] = -xr[k];
      ner[k] = -er[k];
    }
    Rat ne = alg.n_constant(xr, er);
    Rat nf = alg.n_constant(nxr, ner);
    action_[alg.e_index(c)] =
        (Rat(1) / ne) * commutator(action_[alg.e_index(xi)], action_[alg.e_index(eta)]);
    action_[alg.f_index(c)] =
        (Rat(1) / nf) * commutator(action_[alg.f_index(xi)], action_[alg.f_index(eta)]);
  }
}

QMatrix HighestWeightModule::action_of(const QVector& x) const {
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    m = m + x[i] * action_[i];
  }
  return m;
}

QMatrix casimir_matrix(const HighestWeightModule& mod, const QMatrix& form_gram) {
  const ChevalleyAlgebra& alg = mod.algebra();
  QMatrix inv = inverse(form_gram);
  QMatrix c(mod.dim(), mod.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    QMatrix dual(mod.dim(), mod.dim());
    bool any = false;
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      if (sgn(inv(b, a)) == 0) continue;
      dual = dual + inv(b, a) * mod.action(b);
      any = true;
    }
    if (any) c = c + mod.action(a) * dual;
  }
  return c;
}

namespace {

nlohmann::ordered_json matrix_json(const QMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(rat_str(m(i, k)));
  j["entries"] = std::move(entries);
  return j;
}

QMatrix matrix_unjson(const nlohmann::json& j) {
  QMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      m(i, k) = parse_rat(j.at("entries")[idx++].get<std::string>());
  return m;
}

}  // namespace

std::string HighestWeightModule::to_json() const {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["algebra"] = alg_->roots().name();
  j["lambda"] = lambda_;
  j["dim"] = dim_;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : blocks_) {
    nlohmann::ordered_json bj;
    bj["content"] = b.content;
    auto words = nlohmann::ordered_json::array();
    for (const Word& w : b.words) words.push_back(std::vector<int>(w.begin(), w.end()));
    bj["words"] = std::move(words);
    bj["pivot"] = b.pivot;
    bj["gram"] = matrix_json(b.gram);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  nlohmann::ordered_json actions;
  for (std::size_t i = 0; i < alg_->roots().rank(); ++i) {
    actions[alg_->basis_label(alg_->e_index(i))] = matrix_json(action_[alg_->e_index(i)]);
    actions[alg_->basis_label(alg_->f_index(i))] = matrix_json(action_[alg_->f_index(i)]);
  }
  j["actions"] = std::move(actions);
  return j.dump(2);
}

HighestWeightModule HighestWeightModule::from_json(
    const std::string& text, std::shared_ptr<const ChevalleyAlgebra> alg) {
  auto j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != kFormatVersion)
    throw std::invalid_argument("cache format version mismatch");
  if (j.at("algebra").get<std::string>() != alg->roots().name())
    throw std::invalid_argument("cache algebra mismatch");
  HighestWeightModule mod;
  mod.alg_ = alg;
  mod.lambda_ = j.at("lambda").get<std::vector<long>>();
  for (const auto& bj : j.at("blocks")) {
    WeightBlock b;
    b.content = bj.at("content").get<Content>();
    for (const auto& wj : bj.at("words")) {
      auto ints = wj.get<std::vector<int>>();
      b.words.emplace_back(ints.begin(), ints.end());
    }
    b.pivot = bj.at("pivot").get<std::vector<std::size_t>>();
    b.gram = matrix_unjson(bj.at("gram"));
    mod.blocks_.push_back(std::move(b));
  }
  mod.action_.assign(alg->dim(), QMatrix());
  for (std::size_t i = 0; i < alg->roots().rank(); ++i) {
    mod.action_[alg->e_index(i)] =
        matrix_unjson(j.at("actions").at(alg->basis_label(alg->e_index(i))));
    mod.action_[alg->f_index(i)] =
        matrix_unjson(j.at("actions").at(alg->basis_label(alg->f_index(i))));
  }
  mod.finalize_from_blocks();
  return mod;
}

}  // namespace gaudinlab
