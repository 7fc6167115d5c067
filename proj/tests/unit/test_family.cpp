#include "gospace/crown.hpp"
#include "gospace/family.hpp"
#include "gospace/space_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace gospace;
using testsupport::load;

namespace {

Matrix diag(std::initializer_list<long> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    m(i, i) = Scalar(v);
    ++i;
  }
  return m;
}

bool has_failure(const ConjugationReport &r, const std::string &check) {
  for (const auto &f : r.failures)
    if (f.check == check) return true;
  return false;
}

// [F e_p, F e_q] in the crown equals F [e_p, e_q] in the member.
void check_basis_change(const ReductiveSpace &crown, const RealForm &rf) {
  const std::size_t n = crown.dim();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      CHECK(crown.bracket(rf.basis.col(p), rf.basis.col(q)) == rf.basis * rf.space.bracket_basis(p, q));
}

std::filesystem::path write_temp(const std::string &name, const Json &doc) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << doc.dump(2);
  return path;
}

}  // namespace

TEST_CASE("complexify examples") {
  const ReductiveSpace sphere = load("sphere2");
  const ReductiveSpace crown = complexify(sphere);
  CHECK(crown.field() == Field::gaussian);
  CHECK(crown.name() == "crown(sphere2)");
  CHECK(signature(crown) == Signature{2, 2});
  CHECK(crown.tags().symmetric.value == TagValue::unknown);
  CHECK_THROWS_AS(complexify(crown), std::invalid_argument);

  CHECK(validate(complexify(load("abelian-flat"))).ok());
  const ReductiveSpace heis = load("heisenberg-wsym");
  const ReductiveSpace heis_c = complexify(heis);
  CHECK(to_json(heis_c)["brackets"] == to_json(heis)["brackets"]);
  CHECK(heis_c.metric() == heis.metric());
}

TEST_CASE("validate_conjugation examples") {
  const ReductiveSpace crown = complexify(load("sphere2"));
  CHECK(validate_conjugation(crown, {Matrix::identity(3)}).ok());
  CHECK(validate_conjugation(crown, {diag({1, -1, -1})}).ok());
  CHECK(validate_conjugation(crown, {diag({-1, -1, 1})}).ok());
  CHECK(has_failure(validate_conjugation(crown, {diag({2, 1, 1})}), "involutive"));
  // swaps an m-vector into h
  const Matrix mix = Matrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(has_failure(validate_conjugation(crown, {mix}), "preserves_isotropy"));
  CHECK(has_failure(validate_conjugation(crown, {diag({1, 1, -1})}), "automorphism"));
  CHECK(has_failure(validate_conjugation(crown, {Matrix::identity(2)}), "shape"));
  for (const char *name : {"su2-123", "heisenberg-wsym", "abelian-flat"})
    CHECK(validate_conjugation(complexify(load(name)), {Matrix::identity(load(name).dim())}).ok());
}

TEST_CASE("real_form examples") {
  const ReductiveSpace crown = complexify(load("sphere2"));

  const RealForm s2 = extract_real_form(crown, {Matrix::identity(3)}, "S2");
  CHECK(s2.space.metric() == Matrix::identity(2));
  CHECK(signature(s2.space) == Signature{2, 0});
  check_basis_change(crown, s2);

  const RealForm ds2 = extract_real_form(crown, {diag({1, -1, -1})}, "dS2");
  CHECK(ds2.space.labels() == std::vector<std::string>{"e0", "ie1", "ie2"});
  CHECK(ds2.space.bracket_basis(0, 1) == testsupport::ints({0, 0, 1}));
  CHECK(ds2.space.bracket_basis(1, 2) == testsupport::ints({-1, 0, 0}));
  CHECK(ds2.space.isotropy() == std::vector<std::size_t>{2});
  CHECK(ds2.space.metric() == diag({1, -1}));
  CHECK(signature(ds2.space) == Signature{1, 1});
  check_basis_change(crown, ds2);

  const RealForm h2 = extract_real_form(crown, {diag({-1, -1, 1})}, "H2");
  CHECK(h2.space.metric() == diag({-1, -1}));
  CHECK(signature(h2.space) == Signature{0, 2});
  CHECK(validate(h2.space).ok());
  check_basis_change(crown, h2);

  CHECK_THROWS_AS(real_form(crown, {diag({2, 1, 1})}, "bad"), std::invalid_argument);
}

TEST_CASE("a conjugation mixing coordinates uses the doubled kernel") {
  // sigma swaps e0 and e1 on the abelian crown: fixed set spanned by e0 + e1 and i(e0 - e1)
  const ReductiveSpace flat("flat", Field::rational, {"a", "b"}, {}, {}, Matrix::from_rows({{0, 1}, {1, 0}}));
  const ReductiveSpace crown = complexify(flat);
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  REQUIRE(validate_conjugation(crown, {swap}).ok());
  const RealForm rf = extract_real_form(crown, {swap}, "swapped");
  CHECK(validate(rf.space).ok());
  CHECK(rf.space.metric().is_real());
  for (std::size_t c = 0; c < 2; ++c) {
    const Vector col = rf.basis.col(c);
    Vector conj_col = col;
    for (auto &s : conj_col) s = s.conj();
    CHECK(swap * conj_col == col);
  }
  check_basis_change(crown, rf);
}

TEST_CASE("real form round trip with plain conjugation") {
  for (const char *name :
       {"abelian-flat", "su2-round", "su2-123", "su2-berger", "sphere2", "heisenberg-bare", "heisenberg-wsym"}) {
    CAPTURE(name);
    const ReductiveSpace s = load(name);
    const ReductiveSpace back = real_form(complexify(s), {Matrix::identity(s.dim())}, s.name());
    CHECK(back.labels() == s.labels());
    CHECK(back.metric() == s.metric());
    CHECK(back.isotropy() == s.isotropy());
    CHECK(to_json(back)["brackets"] == to_json(s)["brackets"]);
  }
}

TEST_CASE("sphere family verification") {
  const Family fam = load_family(testsupport::catalog("sphere-family"));
  CHECK(fam.crown.field() == Field::gaussian);
  REQUIRE(fam.members.size() == 3);
  const FamilyReport r = family_verify(fam);
  CHECK(r.ok());
  REQUIRE(r.entries.size() == 4);
  CHECK(r.entries[0].is_crown);
  const Signature expected[] = {{2, 2}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(r.entries[i].name);
    CHECK(r.entries[i].ok);
    CHECK(r.entries[i].go.certified);
    CHECK_FALSE(r.entries[i].go.refuted);
    CHECK(r.entries[i].natred.natred);
    CHECK(r.entries[i].signature == expected[i]);
    CHECK(r.entries[i].dims == std::vector<std::size_t>{1, 0, 1, 0, 1});
    CHECK(r.entries[i].commutator_refutations == 0);
  }
}

TEST_CASE("singleton and heisenberg families") {
  const Family su2{"su2-123-family", complexify(load("su2-123")), {{"su2-123", Conjugation{Matrix::identity(3)}, {}}}};
  const FamilyReport r = family_verify(su2, FamilyOptions{{200, 0, 10}, 2});
  CHECK(r.ok());
  CHECK(r.entries[0].go.refuted);
  CHECK(r.entries[1].go.refuted);
  CHECK_FALSE(r.entries[1].natred.natred);

  const ReductiveSpace heis = load("heisenberg-wsym");
  const Family hf{"heisenberg-family", complexify(heis), {{"N.SO(2)/SO(2)", {}, heis}}};
  const FamilyReport h = family_verify(hf, FamilyOptions{{200, 0, 10}, 2});
  CHECK(h.ok());
  for (const auto &e : h.entries) {
    CHECK(e.go.certified);
    CHECK_FALSE(e.natred.natred);
  }
}

TEST_CASE("family violations are reported") {
  // a direct member that is not a real form of the crown
  const Family wrong{"wrong", complexify(load("sphere2")), {{"su2", {}, load("su2-round")}}};
  const FamilyReport r = family_verify(wrong, FamilyOptions{{50, 0, 10}, 2});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.entries[1].ok);

  // an invalid conjugation
  const Family bad{"bad", complexify(load("sphere2")), {{"x", Conjugation{diag({2, 1, 1})}, {}}}};
  CHECK_FALSE(family_verify(bad, FamilyOptions{{50, 0, 10}, 2}).ok());
}

TEST_CASE("family file loading") {
  Json doc = read_json_file(testsupport::catalog("sphere-family"));
  doc["crown"] = to_json(load("sphere2"));
  const Family inline_crown = load_family(write_temp("gospace-inline-family.json", doc));
  CHECK(inline_crown.members.size() == 3);

  Json extra = doc;
  extra["members"][0]["colour"] = "red";
  CHECK_THROWS_AS(load_family(write_temp("gospace-bad-family.json", extra)), InputError);

  Json both = doc;
  both["members"][0]["space"] = to_json(load("sphere2"));
  CHECK_THROWS_AS(load_family(write_temp("gospace-both-family.json", both)), InputError);
}

TEST_CASE("inclusion audit") {
  for (const char *name :
       {"abelian-flat", "su2-round", "su2-123", "su2-berger", "sphere2", "heisenberg-bare", "heisenberg-wsym"}) {
    CAPTURE(name);
    const AuditReport a = inclusion_audit(load(name));
    CHECK(a.catalog_errors.empty());
  }
  CHECK(inclusion_audit(load("heisenberg-wsym")).go_status == "certified_linear");
  CHECK(inclusion_audit(load("sphere2")).symmetric_pair);

  const AuditReport bad = inclusion_audit(load_space(testsupport::fixture("su2-123-wsym-bad")));
  CHECK(bad.go_status == "refuted");
  CHECK(bad.catalog_errors.size() == 1);
}
