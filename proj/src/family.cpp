#include "gospace/family.hpp"

#include "gospace/invariants.hpp"
#include "gospace/space_io.hpp"

#include <set>
#include <sstream>

namespace gospace {

ReductiveSpace complexify(const ReductiveSpace &space) {
  if (space.field() != Field::rational) throw std::invalid_argument("complexify: space is already gaussian");
  Tags tags;
  for (const char *name : Tags::names) tags.by_name(name).source = "crown of " + space.name();
  return space.with_field(Field::gaussian).with_name("crown(" + space.name() + ")").with_tags(std::move(tags));
}

namespace {

Vector apply_sigma(const Conjugation &sigma, const Vector &v) {
  Vector conj_v = v;
  for (auto &s : conj_v) s = s.conj();
  return sigma.matrix * conj_v;
}

Matrix real_part(const Matrix &m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(m(r, c).re());
  return out;
}

Matrix imag_part(const Matrix &m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(m(r, c).im());
  return out;
}

// Rational basis of the fixed set of v -> S conj(v) on one block, preferring
// pure real vectors, then pure imaginary ones, then general a + i b.
std::vector<Vector> fixed_basis(const Matrix &s) {
  const std::size_t k = s.rows();
  const Matrix p = real_part(s);
  const Matrix r = imag_part(s);
  const Matrix id = Matrix::identity(k);
  Matrix neg_p_minus_i = Matrix(k, k) - p - id;

  std::vector<Vector> out;
  for (auto &a : kernel_basis((p - id).stack(r))) out.push_back(a);
  for (auto &b : kernel_basis(r.stack(neg_p_minus_i))) out.push_back(Scalar::imaginary_unit() * b);
  if (out.size() == k) return out;

  out.clear();
  const Matrix doubled = (p - id).augment(r).stack(r.augment(neg_p_minus_i));
  for (const auto &ab : kernel_basis(doubled)) {
    Vector f(k);
    for (std::size_t i = 0; i < k; ++i) f[i] = ab[i] + Scalar::imaginary_unit() * ab[k + i];
    out.push_back(std::move(f));
  }
  if (out.size() != k) throw std::invalid_argument("fixed set of the conjugation is not of full real dimension");
  return out;
}

Matrix submatrix(const Matrix &m, const std::vector<std::size_t> &idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

Matrix inverse(const Matrix &m) {
  const std::size_t n = m.rows();
  const Echelon e = rref(m.augment(Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::invalid_argument("singular basis change");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::string basis_label(const Vector &f, const std::vector<std::string> &labels, std::size_t slot) {
  std::optional<std::size_t> support;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (support) return "f" + std::to_string(slot);
    support = i;
  }
  if (!support) return "f" + std::to_string(slot);
  const Scalar &c = f[*support];
  if (c.is_one()) return labels[*support];
  if (c == Scalar::imaginary_unit()) return "i" + labels[*support];
  return "f" + std::to_string(slot);
}

std::string join(const std::vector<std::string> &xs) {
  std::string out;
  for (const auto &x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

ConjugationReport validate_conjugation(const ReductiveSpace &crown, const Conjugation &sigma) {
  ConjugationReport report;
  const std::size_t n = crown.dim();
  const Matrix &s = sigma.matrix;
  if (s.rows() != n || s.cols() != n) {
    report.failures.push_back({"shape", {s.rows(), s.cols()}, "conjugation must be dim g x dim g"});
    return report;
  }

  const Matrix square = s * s.conj();
  for (std::size_t r = 0; r < n && report.ok(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (square(r, c) != (r == c ? Scalar(1) : Scalar())) {
        report.failures.push_back({"involutive", {r, c}, "sigma^2 != id"});
        break;
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector lhs = apply_sigma(sigma, crown.bracket_basis(a, b));
      const Vector rhs = crown.bracket(s.col(a), s.col(b));
      if (lhs != rhs) report.failures.push_back({"automorphism", {a, b}, "sigma[x,y] != [sigma x, sigma y]"});
    }

  std::vector<bool> in_h(n, false);
  for (auto i : crown.isotropy()) in_h[i] = true;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (in_h[r] != in_h[c] && !s(r, c).is_zero())
        report.failures.push_back(
            {in_h[c] ? "preserves_isotropy" : "preserves_complement", {r, c}, "off-block entry"});

  const auto &m = crown.complement();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b) {
      const MVector sa = crown.to_m(s.col(m[a]));
      const MVector sb = crown.to_m(s.col(m[b]));
      if (crown.metric_eval(sa, sb) != crown.metric()(a, b).conj())
        report.failures.push_back({"isometric", {m[a], m[b]}, "<sigma x, sigma y> != conj <x, y>"});
    }
  return report;
}

RealForm extract_real_form(const ReductiveSpace &crown, const Conjugation &sigma, const std::string &name) {
  const ConjugationReport check = validate_conjugation(crown, sigma);
  if (!check.ok()) {
    const auto &f = check.failures.front();
    throw std::invalid_argument("invalid conjugation: " + f.check + " (" + f.detail + ")");
  }
  const std::size_t n = crown.dim();
  Matrix basis(n, n);
  std::vector<std::string> labels(n);
  for (const auto *block : {&crown.complement(), &crown.isotropy()}) {
    const auto fixed = fixed_basis(submatrix(sigma.matrix, *block));
    for (std::size_t t = 0; t < block->size(); ++t) {
      const std::size_t slot = (*block)[t];
      Vector f(n);
      for (std::size_t i = 0; i < block->size(); ++i) f[(*block)[i]] = fixed[t][i];
      for (std::size_t r = 0; r < n; ++r) basis(r, slot) = f[r];
      labels[slot] = basis_label(f, crown.labels(), slot);
    }
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    for (std::size_t i = 0; i < n; ++i) labels[i] = "f" + std::to_string(i);

  // Structure constants in the fixed basis: F^{-1} [F e_p, F e_q], all real.
  const Matrix inv = inverse(basis);
  std::vector<Scalar> tensor(n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector coeffs = inv * crown.bracket(basis.col(p), basis.col(q));
      for (std::size_t r = 0; r < n; ++r) {
        if (!coeffs[r].is_real()) throw std::invalid_argument("real form has non-real structure constants");
        tensor[(p * n + q) * n + r] = coeffs[r];
      }
    }

  const auto &m = crown.complement();
  Matrix metric(m.size(), m.size());
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) {
      metric(a, b) = crown.metric_eval(crown.to_m(basis.col(m[a])), crown.to_m(basis.col(m[b])));
      if (!metric(a, b).is_real()) throw std::invalid_argument("real form has a non-real metric entry");
    }

  Tags tags;
  for (const char *tag : Tags::names) tags.by_name(tag).source = "real form of " + crown.name();
  ReductiveSpace member = ReductiveSpace::from_tensor(name, Field::rational, std::move(labels), std::move(tensor),
                                                      crown.isotropy(), std::move(metric), std::move(tags));
  const ValidationReport v = validate(member);
  if (!v.ok()) throw std::invalid_argument("extracted real form fails validation: " + v.failures.front().check);
  return {std::move(member), std::move(basis)};
}

ReductiveSpace real_form(const ReductiveSpace &crown, const Conjugation &sigma, const std::string &name) {
  return extract_real_form(crown, sigma, name).space;
}

Family load_family(const std::filesystem::path &path) {
  const Json doc = read_json_file(path);
  try {
    if (!doc.is_object()) throw InputError("family: expected an object");
    for (const auto &[key, _] : doc.items())
      if (key != "name" && key != "crown" && key != "members") throw InputError("family: unknown field '" + key + "'");
    if (!doc.contains("name") || !doc.contains("crown") || !doc.contains("members"))
      throw InputError("family: name, crown and members are required");

    Family fam{doc.at("name").get<std::string>(), {}, {}};
    const Json &crown = doc.at("crown");
    ReductiveSpace base = crown.is_string() ? load_space(path.parent_path() / crown.get<std::string>())
                                            : space_from_json(crown);
    const ValidationReport v = validate(base);
    if (!v.ok()) throw InputError("family crown fails validation: " + v.failures.front().check);
    fam.crown = base.field() == Field::rational ? complexify(base) : std::move(base);

    std::set<std::string> names;
    for (const auto &m : doc.at("members")) {
      if (!m.is_object()) throw InputError("family member must be an object");
      for (const auto &[key, _] : m.items())
        if (key != "name" && key != "conjugation" && key != "space")
          throw InputError("family member: unknown field '" + key + "'");
      FamilyMember member;
      member.name = m.at("name").get<std::string>();
      if (!names.insert(member.name).second) throw InputError("duplicate member name '" + member.name + "'");
      const bool has_sigma = m.contains("conjugation");
      if (has_sigma == m.contains("space"))
        throw InputError("member '" + member.name + "' needs exactly one of conjugation, space");
      if (has_sigma) {
        member.conjugation = Conjugation{matrix_from_json(m.at("conjugation"))};
      } else {
        const Json &sp = m.at("space");
        member.space = sp.is_string() ? load_space(path.parent_path() / sp.get<std::string>()) : space_from_json(sp);
      }
      fam.members.push_back(std::move(member));
    }
    return fam;
  } catch (const Json::exception &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

FamilyEntry analyze_entry(std::string name, bool is_crown, const ReductiveSpace &space, const FamilyOptions &o) {
  FamilyEntry e;
  e.name = std::move(name);
  e.is_crown = is_crown;
  e.space = space;
  e.signature = signature(space);
  e.go = go_side_status(space, o.go);
  e.natred = is_naturally_reductive(space);
  const CommutatorReport comm = commutator_report(space, o.degree_cap, false);
  e.dims = comm.dims;
  e.commutator_refutations = comm.refutations.size();
  return e;
}

bool same_structure(const ReductiveSpace &a, const ReductiveSpace &b) {
  if (a.dim() != b.dim() || a.isotropy() != b.isotropy() || a.metric() != b.metric()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.structure(i, j, k) != b.structure(i, j, k)) return false;
  return true;
}

}  // namespace

FamilyReport family_verify(const Family &family, const FamilyOptions &options) {
  FamilyReport report;
  report.family = family.name;
  report.entries.push_back(analyze_entry(family.crown.name(), true, family.crown, options));

  for (const auto &m : family.members) {
    try {
      ReductiveSpace member = m.conjugation ? real_form(family.crown, *m.conjugation, m.name) : *m.space;
      if (!m.conjugation) {
        const ValidationReport v = validate(member);
        if (!v.ok()) throw std::invalid_argument("member fails validation: " + v.failures.front().check);
        if (member.field() != Field::rational || !same_structure(complexify(member), family.crown))
          throw std::invalid_argument("member does not complexify to the crown");
      }
      report.entries.push_back(analyze_entry(m.name, false, member, options));
    } catch (const std::exception &e) {
      FamilyEntry bad;
      bad.name = m.name;
      bad.ok = false;
      bad.error = e.what();
      report.entries.push_back(std::move(bad));
      report.violations.push_back("member " + m.name + ": " + e.what());
    }
  }

  std::vector<std::string> certified, refuted, natred_yes, natred_no, comm_yes, comm_no;
  std::set<std::vector<std::size_t>> dims;
  for (const auto &e : report.entries) {
    if (!e.ok) continue;
    if (e.go.certified) certified.push_back(e.name);
    if (e.go.refuted) refuted.push_back(e.name);
    (e.natred.natred ? natred_yes : natred_no).push_back(e.name);
    (e.commutator_refutations == 0 ? comm_yes : comm_no).push_back(e.name);
    dims.insert(e.dims);
  }
  if (!certified.empty() && !refuted.empty())
    report.violations.push_back("THEOREM VIOLATION (GO): certified on [" + join(certified) + "] but refuted on [" +
                                join(refuted) + "]");
  if (!natred_yes.empty() && !natred_no.empty())
    report.violations.push_back("THEOREM VIOLATION (natred): true on [" + join(natred_yes) + "], false on [" +
                                join(natred_no) + "]");
  if (!comm_yes.empty() && !comm_no.empty())
    report.violations.push_back("THEOREM VIOLATION (commutative): no refutation on [" + join(comm_yes) +
                                "], refuted on [" + join(comm_no) + "]");
  if (dims.size() > 1) report.violations.push_back("THEOREM VIOLATION (invariants): per-degree dimensions differ");
  return report;
}

AuditReport inclusion_audit(const ReductiveSpace &space, const FamilyOptions &options) {
  AuditReport r;
  r.space = space.name();
  const bool certified = certify_go_linear(space).has_value();
  const bool refuted = refute_go(space, options.go).has_value();
  r.go_status = certified ? "certified_linear" : refuted ? "refuted" : "not_refuted";
  r.natred = is_naturally_reductive(space).natred;
  r.symmetric_pair = is_symmetric_pair(space).symmetric;

  const Tags &t = space.tags();
  auto error = [&](const std::string &msg) { r.catalog_errors.push_back("CATALOG ERROR: " + msg); };
  if (t.weakly_symmetric.value == TagValue::yes && refuted)
    error("tagged weakly_symmetric but GO is refuted (weakly symmetric spaces are GO)");
  if (t.naturally_reductive.value == TagValue::yes && !r.natred)
    error("tagged naturally_reductive but the trilinear identity fails");
  if (t.naturally_reductive.value == TagValue::no && r.natred)
    error("tagged not naturally_reductive but the trilinear identity holds");
  if (r.natred && !certified) error("naturally reductive but no GO certificate was found");
  if (t.symmetric.value == TagValue::yes && !r.symmetric_pair) error("tagged symmetric but [m, m] is not in h");
  if (t.geodesic_orbit.value == TagValue::yes && refuted) error("tagged geodesic_orbit but GO is refuted");
  if (t.geodesic_orbit.value == TagValue::no && certified) error("tagged not geodesic_orbit but GO is certified");
  if (t.datri.value == TagValue::no && certified) error("tagged not D'Atri but GO is certified (GO spaces are D'Atri)");
  if (t.commutative.value == TagValue::yes &&
      !commutator_report(space, options.degree_cap, false).refutations.empty())
    error("tagged commutative but a commutator of invariants is nonzero");
  return r;
}

}  // namespace gospace
