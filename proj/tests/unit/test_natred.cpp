#include "gospace/crown.hpp"
#include "gospace/natred.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gospace;
using testsupport::load;
using testsupport::mvec;

namespace {

MVector e(std::size_t n, std::size_t k) { return {unit_vector(n, k)}; }

MVector random_m(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-5, 5);
  MVector v{Vector(n)};
  for (auto &x : v.coords) x = Scalar(d(rng));
  return v;
}

using Array3 = std::array<std::size_t, 3>;

}  // namespace

TEST_CASE("psi examples") {
  const ReductiveSpace sphere = load("sphere2");
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) CHECK(psi(sphere, {random_m(rng, 2), random_m(rng, 2), random_m(rng, 2)}).is_zero());

  CHECK(psi(load("su2-round"), {e(3, 0), e(3, 1), e(3, 2)}).is_zero());
  CHECK(psi(load("su2-123"), {e(3, 0), e(3, 1), e(3, 2)}) == Scalar(1));
}

TEST_CASE("psi agrees with the hand model") {
  const auto model = testsupport::su2_model({1, 2, 3});
  const ReductiveSpace s = load("su2-123");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        std::vector<mpq_class> x(3), y(3), z(3);
        x[i] = y[j] = z[k] = 1;
        const mpq_class expected = model.inner_m(model.bracket(x, y), z) + model.inner_m(y, model.bracket(x, z));
        CHECK(psi(s, {e(3, i), e(3, j), e(3, k)}) == Scalar(expected));
      }
}

TEST_CASE("psi is trilinear and satisfies the slot-swap identity") {
  std::mt19937_64 rng(42);
  for (const char *name : {"su2-123", "heisenberg-wsym", "su2-berger", "heisenberg-bare"}) {
    const ReductiveSpace s = load(name);
    const std::size_t n = s.dim_m();
    for (int k = 0; k < 30; ++k) {
      const MVector a = random_m(rng, n), b = random_m(rng, n), c = random_m(rng, n), d = random_m(rng, n);
      const Scalar t = Scalar::rational(5, 3);
      const MVector ad{a.coords + t * d.coords};
      CHECK(psi(s, {ad, b, c}) == psi(s, {a, b, c}) + t * psi(s, {d, b, c}));
      CHECK(psi(s, {a, MVector{b.coords + d.coords}, c}) == psi(s, {a, b, c}) + psi(s, {a, d, c}));
      CHECK(psi(s, {a, b, MVector{c.coords + d.coords}}) == psi(s, {a, b, c}) + psi(s, {a, b, d}));

      // psi(x,y,z) + psi(x,z,y) = 2(<[x,y]_m, z> + <[x,z]_m, y>), both sides evaluated separately
      const MVector xy = s.to_m(s.bracket(s.embed(a), s.embed(b)));
      const MVector xz = s.to_m(s.bracket(s.embed(a), s.embed(c)));
      CHECK(psi(s, {a, b, c}) + psi(s, {a, c, b}) == Scalar(2) * (s.metric_eval(xy, c) + s.metric_eval(xz, b)));
    }
  }
}

TEST_CASE("is_naturally_reductive examples") {
  CHECK(is_naturally_reductive(load("sphere2")).natred);
  CHECK(is_naturally_reductive(load("su2-round")).natred);
  const NatredResult su2 = is_naturally_reductive(load("su2-123"));
  CHECK_FALSE(su2.natred);
  CHECK(*su2.witness == Array3{0, 1, 2});
  CHECK(su2.value == Scalar(1));
  CHECK_FALSE(is_naturally_reductive(load("su2-berger")).natred);
}

TEST_CASE("natred decision matches brute force over all basis triples") {
  for (const char *name :
       {"abelian-flat", "su2-round", "su2-123", "su2-berger", "sphere2", "heisenberg-bare", "heisenberg-wsym"}) {
    CAPTURE(name);
    const ReductiveSpace s = load(name);
    const std::size_t n = s.dim_m();
    std::optional<Array3> first;
    for (std::size_t i = 0; i < n && !first; ++i)
      for (std::size_t j = 0; j < n && !first; ++j)
        for (std::size_t k = 0; k < n && !first; ++k)
          if (!psi(s, {e(n, i), e(n, j), e(n, k)}).is_zero()) first = Array3{i, j, k};
    const NatredResult r = is_naturally_reductive(s);
    CHECK(r.natred == !first.has_value());
    CHECK(r.witness == first);
  }
}

TEST_CASE("crown natred examples") {
  const CrownNatredReport sphere = check_crown_natred(load("sphere2"));
  CHECK(sphere.real.natred);
  CHECK(sphere.crown.natred);
  CHECK(sphere.consistent);

  const CrownNatredReport su2 = check_crown_natred(load("su2-123"));
  CHECK_FALSE(su2.real.natred);
  CHECK_FALSE(su2.crown.natred);
  CHECK(su2.real.witness == su2.crown.witness);

  const CrownNatredReport heis = check_crown_natred(load("heisenberg-wsym"));
  CHECK_FALSE(heis.real.natred);
  CHECK(*heis.real.witness == Array3{0, 1, 2});
  CHECK(heis.real.value == Scalar(1));
  CHECK(heis.consistent);
}

TEST_CASE("natred implies a zero GO certificate") {
  for (const char *name : {"sphere2", "su2-round", "abelian-flat"}) {
    const NatredGoAudit a = natred_implies_go_audit(load(name));
    CHECK(a.natred);
    CHECK(a.certificate_found);
    CHECK(a.graph_map_zero);
    CHECK(a.passed);
  }
  const NatredGoAudit su2 = natred_implies_go_audit(load("su2-123"));
  CHECK_FALSE(su2.natred);
  CHECK(su2.passed);
}
