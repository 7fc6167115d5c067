#include "gospace/invariants.hpp"

#include "gospace/crown.hpp"
#include "gospace/parallel.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gospace {

namespace {

void monomials_rec(std::size_t pos, unsigned left, Exponent &cur, std::vector<Exponent> &out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[pos] = e;
    monomials_rec(pos + 1, left - e, cur, out);
  }
  cur[pos] = 0;
}

std::string coefficient_prefix(const Scalar &c, bool first) {
  std::string out;
  const bool simple = c.is_real();
  const bool negative = simple && sgn(c.re()) < 0;
  if (!first) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  const Scalar mag = negative ? -c : c;
  if (mag.is_one()) return out;
  out += simple ? mag.to_string() : "(" + mag.to_string() + ")";
  out += "*";
  return out;
}

}  // namespace

std::vector<Exponent> monomials(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  monomials_rec(0, d, cur, out);
  return out;
}

std::string to_string(const SymPoly &p, const std::vector<std::string> &m_labels) {
  if (p.coefficients.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[exp, c] : p.coefficients) {
    std::string mono;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      if (exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += m_labels[k];
      if (exp[k] > 1) mono += "^" + std::to_string(exp[k]);
    }
    if (mono.empty()) {
      // constant term: print the coefficient itself
      out += first ? "" : " + ";
      out += c.to_string();
    } else {
      out += coefficient_prefix(c, first) + mono;
    }
    first = false;
  }
  return out;
}

Matrix derivation_matrix(const ReductiveSpace &space, std::size_t j, unsigned d) {
  const std::size_t n = space.dim_m();
  const auto monos = monomials(n, d);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  // action[k] = [h_j, zeta_k]_m in complement coordinates
  std::vector<Vector> action(n);
  for (std::size_t k = 0; k < n; ++k)
    action[k] = space.to_m(space.bracket(space.h_basis(j), space.m_basis(k))).coords;

  Matrix d_mat(monos.size(), monos.size());
  for (std::size_t col = 0; col < monos.size(); ++col) {
    const Exponent &a = monos[col];
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (action[k][l].is_zero()) continue;
        Exponent target = a;
        --target[k];
        ++target[l];
        d_mat(index.at(target), col) += Scalar(static_cast<long>(a[k])) * action[k][l];
      }
    }
  }
  return d_mat;
}

std::vector<SymPoly> invariant_basis(const ReductiveSpace &space, unsigned d) {
  const auto monos = monomials(space.dim_m(), d);
  Matrix stacked(0, monos.size());
  for (std::size_t j = 0; j < space.dim_h(); ++j) stacked = stacked.stack(derivation_matrix(space, j, d));

  std::vector<SymPoly> out;
  for (const auto &v : kernel_basis(stacked)) {
    SymPoly p{d, {}};
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) p.coefficients.emplace(monos[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

InvariantDims check_invariants_realform(const ReductiveSpace &space, unsigned max_degree) {
  const ReductiveSpace crown = complexify(space);
  InvariantDims r;
  r.space = space.name();
  for (unsigned d = 0; d <= max_degree; ++d) {
    r.real_dims.push_back(invariant_basis(space, d).size());
    r.crown_dims.push_back(invariant_basis(crown, d).size());
  }
  r.consistent = r.real_dims == r.crown_dims;
  return r;
}

// ---------------------------------------------------------------------------

void add_scaled(PBWElement &acc, const PBWElement &e, const Scalar &s) {
  if (s.is_zero()) return;
  for (const auto &[w, c] : e) {
    auto [it, inserted] = acc.try_emplace(w, c * s);
    if (!inserted) {
      it->second += c * s;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

PbwAlgebra::PbwAlgebra(const ReductiveSpace &space, RewriteStrategy strategy)
    : dim_m_(space.dim_m()), strategy_(strategy) {
  std::vector<std::size_t> g_of_letter = space.complement();
  g_of_letter.insert(g_of_letter.end(), space.isotropy().begin(), space.isotropy().end());
  const std::size_t n = g_of_letter.size();
  std::vector<std::size_t> letter_of_g(n);
  for (std::size_t p = 0; p < n; ++p) letter_of_g[g_of_letter[p]] = p;

  for (std::size_t p = 0; p < n; ++p) labels_.push_back(space.labels()[g_of_letter[p]]);
  bracket_.assign(n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &c = space.structure(g_of_letter[p], g_of_letter[q], k);
        if (!c.is_zero()) bracket_[p][q].emplace_back(letter_of_g[k], c);
      }
  // emit bracket terms in letter order
  for (auto &row : bracket_)
    for (auto &terms : row) std::sort(terms.begin(), terms.end(), [](const auto &x, const auto &y) {
        return x.first < y.first;
      });
}

PBWElement PbwAlgebra::normalize_word(const Word &w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  std::optional<std::size_t> descent;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      descent = i;
      if (strategy_ == RewriteStrategy::leftmost) break;
    }
  }
  PBWElement result;
  if (!descent) {
    result.emplace(w, Scalar(1));
  } else {
    // L_b L_a = L_a L_b - [L_a, L_b]   (a < b)
    const std::size_t i = *descent;
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    result = normalize_word(swapped);
    for (const auto &[letter, c] : bracket_[w[i + 1]][w[i]]) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(letter);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      add_scaled(result, normalize_word(shorter), -c);
    }
  }
  memo_.emplace(w, result);
  return result;
}

PBWElement PbwAlgebra::normalize(const PBWElement &raw) {
  PBWElement out;
  for (const auto &[w, c] : raw) add_scaled(out, normalize_word(w), c);
  return out;
}

PBWElement PbwAlgebra::multiply(const PBWElement &a, const PBWElement &b) {
  PBWElement out;
  for (const auto &[wa, ca] : a)
    for (const auto &[wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_scaled(out, normalize_word(w), ca * cb);
    }
  return out;
}

PBWElement PbwAlgebra::commutator(const PBWElement &a, const PBWElement &b) {
  PBWElement out = multiply(a, b);
  add_scaled(out, multiply(b, a), Scalar(-1));
  return out;
}

PBWElement PbwAlgebra::symmetrize(const SymPoly &p) {
  PBWElement out;
  for (const auto &[exp, c] : p.coefficients) {
    Word letters;
    for (std::size_t k = 0; k < exp.size(); ++k) letters.insert(letters.end(), exp[k], k);
    // letters is sorted, so next_permutation visits each distinct ordering once
    PBWElement sum;
    long count = 0;
    do {
      add_scaled(sum, normalize_word(letters), Scalar(1));
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    add_scaled(out, sum, c / Scalar(count));
  }
  return out;
}

PBWElement reduce_mod_isotropy(const PBWElement &e, std::size_t dim_m) {
  PBWElement out;
  for (const auto &[w, c] : e)
    if (std::all_of(w.begin(), w.end(), [&](std::size_t l) { return l < dim_m; })) out.emplace(w, c);
  return out;
}

std::string to_string(const PBWElement &e, const std::vector<std::string> &letter_labels) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[w, c] : e) {
    if (w.empty()) {
      out += first ? "" : " + ";
      out += c.to_string();
    } else {
      std::string word;
      for (auto l : w) word += (word.empty() ? "" : "*") + letter_labels[l];
      out += coefficient_prefix(c, first) + word;
    }
    first = false;
  }
  return out;
}

namespace {

struct PairResult {
  std::optional<PBWElement> residue;
};

std::vector<PairResult> all_commutators(const ReductiveSpace &space, const std::vector<InvariantRef> &invs,
                                        const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), pairs.size()));
  std::vector<std::optional<PbwAlgebra>> algebras(workers);
  std::vector<std::optional<PBWElement>> sym(invs.size());
  {
    PbwAlgebra alg(space);
    for (std::size_t i = 0; i < invs.size(); ++i) sym[i] = alg.symmetrize(invs[i].poly);
  }
  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k, std::size_t w) {
    if (!algebras[w]) algebras[w].emplace(space);
    const auto [p, q] = pairs[k];
    PBWElement r = reduce_mod_isotropy(algebras[w]->commutator(*sym[p], *sym[q]), space.dim_m());
    if (!r.empty()) results[k].residue = std::move(r);
  });
  return results;
}

}  // namespace

CommutatorReport commutator_report(const ReductiveSpace &space, unsigned degree_cap, bool with_crown) {
  CommutatorReport report;
  report.space = space.name();
  report.degree_cap = degree_cap;
  for (unsigned d = 0; d <= degree_cap; ++d) {
    auto basis = invariant_basis(space, d);
    report.dims.push_back(basis.size());
    if (d == 0) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) report.invariants.push_back({d, i, std::move(basis[i])});
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < report.invariants.size(); ++p)
    for (std::size_t q = p; q < report.invariants.size(); ++q) pairs.emplace_back(p, q);
  report.pairs_tested = pairs.size();

  const PbwAlgebra labels_only(space);
  const auto results = all_commutators(space, report.invariants, pairs);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!results[k].residue) continue;
    const PBWElement &r = *results[k].residue;
    PBWElement lead{*r.begin()};
    report.refutations.push_back({pairs[k].first, pairs[k].second, to_string(lead, labels_only.labels()), r});
  }

  if (with_crown && space.field() == Field::rational) {
    const ReductiveSpace crown = complexify(space);
    report.crown_checked = true;
    std::vector<InvariantRef> crown_invs;
    std::vector<std::size_t> crown_dims;
    for (unsigned d = 0; d <= degree_cap; ++d) {
      auto basis = invariant_basis(crown, d);
      crown_dims.push_back(basis.size());
      if (d == 0) continue;
      for (std::size_t i = 0; i < basis.size(); ++i) crown_invs.push_back({d, i, std::move(basis[i])});
    }
    bool same = crown_dims == report.dims;
    if (same) {
      const auto crown_results = all_commutators(crown, crown_invs, pairs);
      std::size_t next = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!crown_results[k].residue) continue;
        ++report.crown_refutations;
        // the refuted pair and its residue must coincide with the real side
        if (next >= report.refutations.size() || report.refutations[next].p != pairs[k].first ||
            report.refutations[next].q != pairs[k].second ||
            report.refutations[next].residue != *crown_results[k].residue)
          same = false;
        ++next;
      }
      same = same && next == report.refutations.size();
    }
    report.crown_consistent = same;
  }
  return report;
}

}  // namespace gospace
