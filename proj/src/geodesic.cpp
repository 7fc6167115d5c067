#include "gospace/geodesic.hpp"

#include "gospace/crown.hpp"
#include "gospace/parallel.hpp"

#include <stdexcept>

namespace gospace {

ModuliPoint ModuliPoint::make(const ReductiveSpace &space, MVector xi, HVector alpha, Scalar c) {
  if (xi.coords.size() != space.dim_m()) throw DimensionMismatch("moduli point: xi length != dim m");
  if (alpha.coords.size() != space.dim_h()) throw DimensionMismatch("moduli point: alpha length != dim h");
  if (!c.is_zero() && !space.metric_eval(xi, xi).is_zero())
    throw std::invalid_argument("moduli point: c must vanish when <xi, xi> != 0");
  return ModuliPoint(std::move(xi), std::move(alpha), std::move(c));
}

std::string to_string(GoVerdict::Mode mode) {
  switch (mode) {
    case GoVerdict::Mode::refuted: return "refuted";
    case GoVerdict::Mode::sampled_consistent: return "sampled_consistent";
    case GoVerdict::Mode::certified_linear: return "certified_linear";
    case GoVerdict::Mode::inconclusive: break;
  }
  return "inconclusive";
}

Scalar phi(const ReductiveSpace &space, const ModuliPoint &point, const MVector &zeta) {
  const Vector x = space.embed(point.xi()) + space.embed(point.alpha());
  const MVector br = space.to_m(space.bracket(x, space.embed(zeta)));
  Scalar v = space.metric_eval(br, point.xi());
  if (!point.c().is_zero()) v -= point.c() * space.metric_eval(point.xi(), zeta);
  return v;
}

bool omega_member(const ReductiveSpace &space, const ModuliPoint &point) {
  for (std::size_t j = 0; j < space.dim_m(); ++j)
    if (!phi(space, point, MVector{unit_vector(space.dim_m(), j)}).is_zero()) return false;
  return true;
}

GeodesicSystem geodesic_system(const ReductiveSpace &space, const MVector &xi) {
  if (xi.coords.size() != space.dim_m()) throw DimensionMismatch("geodesic_system: xi length != dim m");
  if (is_zero(xi.coords)) throw std::invalid_argument("geodesic_system: xi must be nonzero");

  const std::size_t nh = space.dim_h();
  const bool has_c = space.metric_eval(xi, xi).is_zero();
  GeodesicSystem sys{Matrix(space.dim_m(), nh + (has_c ? 1 : 0)), Vector(space.dim_m()), has_c};
  const Vector x = space.embed(xi);
  for (std::size_t j = 0; j < space.dim_m(); ++j) {
    const Vector zeta = space.m_basis(j);
    for (std::size_t r = 0; r < nh; ++r)
      sys.a(j, r) = space.metric_eval(space.to_m(space.bracket(space.h_basis(r), zeta)), xi);
    if (has_c) sys.a(j, nh) = -space.metric_eval(xi, MVector{unit_vector(space.dim_m(), j)});
    sys.b[j] = -space.metric_eval(space.to_m(space.bracket(x, zeta)), xi);
  }
  return sys;
}

std::optional<ModuliPoint> solve_geodesic_vector(const ReductiveSpace &space, const MVector &xi) {
  const GeodesicSystem sys = geodesic_system(space, xi);
  auto sol = solve_linear(sys.a, sys.b);
  if (!sol) return std::nullopt;
  HVector alpha{Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(space.dim_h()))};
  Scalar c = sys.has_c ? sol->back() : Scalar();
  return ModuliPoint::make(space, xi, std::move(alpha), std::move(c));
}

std::vector<MVector> enumeration_prefix(std::size_t dim_m) {
  std::vector<MVector> out;
  for (std::size_t a = 0; a < dim_m; ++a) out.push_back({unit_vector(dim_m, a)});
  for (std::size_t a = 0; a < dim_m; ++a)
    for (std::size_t b = a + 1; b < dim_m; ++b) {
      out.push_back({unit_vector(dim_m, a) + unit_vector(dim_m, b)});
      out.push_back({unit_vector(dim_m, a) - unit_vector(dim_m, b)});
    }
  return out;
}

namespace {

enum Stream : std::uint64_t { refute_stream = 1, sample_stream = 2, realform_stream = 3, certificate_stream = 4 };

// Nonzero vector with coordinates in [-B, B] (Gaussian integers if requested).
MVector random_mvector(std::mt19937_64 &rng, std::size_t n, long bound, bool gaussian) {
  for (;;) {
    MVector v{Vector(n)};
    for (auto &s : v.coords) {
      const long re = draw_int(rng, bound);
      const long im = gaussian ? draw_int(rng, bound) : 0;
      s = Scalar(mpq_class(re), mpq_class(im));
    }
    if (!is_zero(v.coords)) return v;
  }
}

// Ranks of the geodesic system when it is inconsistent.
std::optional<RankData> inconsistency(const ReductiveSpace &space, const MVector &xi) {
  const GeodesicSystem sys = geodesic_system(space, xi);
  const std::size_t ra = rank(sys.a);
  const std::size_t rab = rank(sys.a.augment(Matrix::column(sys.b)));
  if (ra == rab) return std::nullopt;
  return RankData{ra, rab};
}

GoVerdict refuted_verdict(const ReductiveSpace &space, MVector witness, RankData ranks, SampleStats stats) {
  GoVerdict v;
  v.space = space.name();
  v.mode = GoVerdict::Mode::refuted;
  v.witness = std::move(witness);
  v.ranks = ranks;
  v.samples = stats;
  return v;
}

struct BatchOutcome {
  std::size_t failed = 0;
  std::optional<std::size_t> first;
  std::optional<RankData> first_ranks;
};

BatchOutcome run_batch(const ReductiveSpace &space, const std::vector<MVector> &xs) {
  std::vector<std::optional<RankData>> results(xs.size());
  parallel_for(xs.size(), [&](std::size_t i, std::size_t) { results[i] = inconsistency(space, xs[i]); });
  BatchOutcome out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!results[i]) continue;
    ++out.failed;
    if (!out.first) {
      out.first = i;
      out.first_ranks = results[i];
    }
  }
  return out;
}

// Prefix scan; returns a refuted verdict on the first inconsistent xi.
std::optional<GoVerdict> scan_prefix(const ReductiveSpace &space, SampleStats &stats) {
  const auto prefix = enumeration_prefix(space.dim_m());
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    ++stats.enumerated;
    if (auto r = inconsistency(space, prefix[k])) {
      stats.failed = 1;
      return refuted_verdict(space, prefix[k], *r, stats);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GoVerdict> refute_go(const ReductiveSpace &space, const GoOptions &options) {
  SampleStats stats;
  stats.seed = options.seed;
  if (space.dim_m() == 0) return std::nullopt;
  if (auto v = scan_prefix(space, stats)) return v;

  std::vector<MVector> xs;
  for (std::size_t k = 0; k < options.samples; ++k) {
    auto rng = sample_rng(options.seed, refute_stream, k);
    xs.push_back(random_mvector(rng, space.dim_m(), options.bound, false));
  }
  const BatchOutcome batch = run_batch(space, xs);
  stats.tested = xs.size();
  stats.failed = batch.failed;
  if (!batch.first) return std::nullopt;
  return refuted_verdict(space, xs[*batch.first], *batch.first_ranks, stats);
}

std::optional<GoVerdict> certify_go_linear(const ReductiveSpace &space) {
  const std::size_t nm = space.dim_m();
  const std::size_t nh = space.dim_h();
  const auto &m = space.complement();
  const auto &h = space.isotropy();

  // t[j][a][b] = <[zeta_a, zeta_j]_m, zeta_b>,  s[j][r][b] = <[h_r, zeta_j]_m, zeta_b>
  auto pair_form = [&](std::size_t i, std::size_t j, std::size_t b) {
    return space.metric_eval(space.to_m(space.bracket_basis(i, j)), MVector{unit_vector(nm, b)});
  };

  // One row per (j, a <= b): the coefficient of x_a x_b in phi(x, Lx, zeta_j).
  const std::size_t unknowns = nh * nm;
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t j = 0; j < nm; ++j)
    for (std::size_t a = 0; a < nm; ++a)
      for (std::size_t b = a; b < nm; ++b) {
        Vector row(unknowns);
        Scalar constant = pair_form(m[a], m[j], b);
        if (a != b) constant += pair_form(m[b], m[j], a);
        for (std::size_t r = 0; r < nh; ++r) {
          row[r * nm + a] += pair_form(h[r], m[j], b);
          if (a != b) row[r * nm + b] += pair_form(h[r], m[j], a);
        }
        rows.push_back(std::move(row));
        rhs.push_back(-constant);
      }

  Matrix graph(nh, nm);
  if (unknowns > 0) {
    auto sol = solve_linear(Matrix::from_rows(rows), rhs);
    if (!sol) return std::nullopt;
    for (std::size_t r = 0; r < nh; ++r)
      for (std::size_t a = 0; a < nm; ++a) graph(r, a) = (*sol)[r * nm + a];
  } else if (!is_zero(rhs)) {
    return std::nullopt;
  }

  GoVerdict v;
  v.space = space.name();
  v.mode = GoVerdict::Mode::certified_linear;
  v.graph_map = std::move(graph);
  v.notes.push_back(
      "linear graph map with c = 0 for every xi; valid for the crown as well, since the identity holds "
      "coefficient-wise");
  v.notes.push_back(
      "null xi may also admit c != 0 solutions; the certificate does not use them, so a failed "
      "certification would have been inconclusive");
  return v;
}

GoVerdict sample_go(const ReductiveSpace &space, const GoOptions &options) {
  SampleStats stats;
  stats.seed = options.seed;
  GoVerdict consistent;
  consistent.space = space.name();
  consistent.mode = GoVerdict::Mode::sampled_consistent;
  if (space.dim_m() == 0) {
    consistent.samples = stats;
    return consistent;
  }
  if (auto v = scan_prefix(space, stats)) return *v;

  const bool gaussian = space.field() == Field::gaussian;
  std::vector<MVector> xs;
  if (gaussian) {
    // v + i w null for the complex bilinear metric, v, w from the prefix.
    const auto prefix = enumeration_prefix(space.dim_m());
    const std::size_t quota = std::max<std::size_t>(1, options.samples / 4);
    const Scalar unit_i = Scalar::imaginary_unit();
    for (std::size_t p = 0; p < prefix.size() && xs.size() < quota; ++p)
      for (std::size_t q = p + 1; q < prefix.size() && xs.size() < quota; ++q) {
        MVector z{prefix[p].coords + unit_i * prefix[q].coords};
        if (space.metric_eval(z, z).is_zero()) xs.push_back(std::move(z));
      }
    xs.resize(std::min(xs.size(), options.samples));
    stats.null_samples = xs.size();
    stats.null_skipped = xs.empty();
  }
  for (std::size_t k = xs.size(); k < options.samples; ++k) {
    auto rng = sample_rng(options.seed, sample_stream, k);
    xs.push_back(random_mvector(rng, space.dim_m(), options.bound, gaussian));
  }

  const BatchOutcome batch = run_batch(space, xs);
  stats.tested = xs.size();
  stats.failed = batch.failed;
  if (batch.first) return refuted_verdict(space, xs[*batch.first], *batch.first_ranks, stats);
  consistent.samples = stats;
  return consistent;
}

GoVerdict go_auto(const ReductiveSpace &space, const GoOptions &options) {
  if (auto v = certify_go_linear(space)) return *v;
  if (auto v = refute_go(space, options)) return *v;
  return sample_go(space, options);
}

std::size_t certificate_violations(const ReductiveSpace &space, const Matrix &graph_map, std::size_t count,
                                   std::uint64_t seed, long bound) {
  if (space.dim_m() == 0) return 0;
  std::vector<char> bad(count, 0);
  const bool gaussian = space.field() == Field::gaussian;
  parallel_for(count, [&](std::size_t k, std::size_t) {
    auto rng = sample_rng(seed, certificate_stream, k);
    MVector xi = random_mvector(rng, space.dim_m(), bound, gaussian);
    HVector alpha{graph_map * xi.coords};
    bad[k] = omega_member(space, ModuliPoint::make(space, std::move(xi), std::move(alpha))) ? 0 : 1;
  });
  return static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
}

OmegaRealformReport check_omega_realform(const ReductiveSpace &space, const GoOptions &options) {
  if (space.field() != Field::rational) throw std::invalid_argument("check_omega_realform: rational space required");
  const ReductiveSpace crown = complexify(space);
  OmegaRealformReport report;
  report.space = space.name();
  report.samples = options.samples;
  report.seed = options.seed;
  if (space.dim_m() == 0) return report;

  std::vector<char> member(options.samples, 0), discrepant(options.samples, 0);
  parallel_for(options.samples, [&](std::size_t k, std::size_t) {
    auto rng = sample_rng(options.seed, realform_stream, k);
    MVector xi = random_mvector(rng, space.dim_m(), options.bound, false);
    std::optional<ModuliPoint> pt;
    if (k % 2 == 0) pt = solve_geodesic_vector(space, xi);
    if (!pt) {
      HVector alpha{Vector(space.dim_h())};
      for (auto &s : alpha.coords) s = draw_int(rng, options.bound);
      Scalar c = space.metric_eval(xi, xi).is_zero() ? Scalar(draw_int(rng, options.bound)) : Scalar();
      pt = ModuliPoint::make(space, xi, std::move(alpha), std::move(c));
    }
    const bool real_member = omega_member(space, *pt);
    const ModuliPoint lifted = ModuliPoint::make(crown, pt->xi(), pt->alpha(), pt->c());
    member[k] = real_member;
    discrepant[k] = real_member != omega_member(crown, lifted);
  });
  report.members = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
  report.discrepancies = static_cast<std::size_t>(std::count(discrepant.begin(), discrepant.end(), 1));
  return report;
}

GoSideStatus go_side_status(const ReductiveSpace &space, const GoOptions &options) {
  GoSideStatus s;
  auto cert = certify_go_linear(space);
  auto ref = refute_go(space, options);
  GoVerdict sampled = sample_go(space, options);
  s.certified = cert.has_value();
  s.refuted = ref.has_value() || sampled.mode == GoVerdict::Mode::refuted;
  s.verdict = cert ? *cert : ref ? *ref : sampled;
  return s;
}

CrownGoReport check_crown_go_consistency(const ReductiveSpace &space, const GoOptions &options) {
  CrownGoReport r;
  r.space = space.name();
  r.real = go_side_status(space, options);
  r.crown = go_side_status(complexify(space), options);
  r.violation = (r.real.certified && r.crown.refuted) || (r.crown.certified && r.real.refuted) ||
                (r.real.certified && r.real.refuted) || (r.crown.certified && r.crown.refuted);
  r.sampling_escape = !r.violation && r.real.refuted != r.crown.refuted;
  return r;
}

}  // namespace gospace
