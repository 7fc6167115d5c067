#ifndef GOSPACE_TEST_SUPPORT_HPP
#define GOSPACE_TEST_SUPPORT_HPP

#include "gospace/space_io.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace testsupport {

inline std::string catalog(const std::string &name) { return std::string(GOSPACE_CATALOG_DIR) + "/" + name + ".json"; }
inline std::string fixture(const std::string &name) { return std::string(GOSPACE_FIXTURE_DIR) + "/" + name + ".json"; }

inline gospace::ReductiveSpace load(const std::string &name) { return gospace::load_space(catalog(name)); }

inline gospace::Vector ints(std::initializer_list<long> v) { return gospace::Vector(v.begin(), v.end()); }
inline gospace::MVector mvec(std::initializer_list<long> v) { return {ints(v)}; }
inline gospace::HVector hvec(std::initializer_list<long> v) { return {ints(v)}; }

// Hand-written rational model of a space, evaluated with plain mpq_class.
// Only used to cross-check the library.
struct RawModel {
  std::size_t n = 0;
  std::vector<std::size_t> m;  // complement g-indices
  std::vector<std::size_t> h;
  std::vector<mpq_class> c;    // c[(i*n+j)*n+k]
  std::vector<std::vector<mpq_class>> q;

  void set(std::size_t i, std::size_t j, std::size_t k, long v) {
    c[(i * n + j) * n + k] = v;
    c[(j * n + i) * n + k] = -v;
  }

  std::vector<mpq_class> bracket(const std::vector<mpq_class> &x, const std::vector<mpq_class> &y) const {
    std::vector<mpq_class> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[(i * n + j) * n + k];
    return out;
  }

  mpq_class inner_m(const std::vector<mpq_class> &x, const std::vector<mpq_class> &y) const {
    mpq_class s = 0;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) s += x[m[a]] * q[a][b] * y[m[b]];
    return s;
  }

  std::vector<mpq_class> g_from(const std::vector<long> &xi_m, const std::vector<long> &alpha_h) const {
    std::vector<mpq_class> v(n);
    for (std::size_t a = 0; a < m.size(); ++a) v[m[a]] = xi_m[a];
    for (std::size_t r = 0; r < h.size(); ++r) v[h[r]] = alpha_h[r];
    return v;
  }

  // <[xi + alpha, zeta_j]_m, xi> with c = 0
  mpq_class phi(const std::vector<long> &xi_m, const std::vector<long> &alpha_h, std::size_t j) const {
    auto x = g_from(xi_m, alpha_h);
    std::vector<mpq_class> zeta(n);
    zeta[m[j]] = 1;
    auto xi = g_from(xi_m, std::vector<long>(h.size(), 0));
    return inner_m(bracket(x, zeta), xi);
  }
};

inline RawModel su2_model(std::vector<long> diag) {
  RawModel r;
  r.n = 3;
  r.m = {0, 1, 2};
  r.c.assign(27, 0);
  r.set(0, 1, 2, 1);
  r.set(1, 2, 0, 1);
  r.set(2, 0, 1, 1);
  r.q.assign(3, std::vector<mpq_class>(3, 0));
  for (std::size_t a = 0; a < 3; ++a) r.q[a][a] = diag[a];
  return r;
}

inline RawModel sphere_model() {
  RawModel r = su2_model({1, 1, 1});
  r.m = {0, 1};
  r.h = {2};
  r.q = {{1, 0}, {0, 1}};
  return r;
}

// x, y, z, t with [x,y] = z, [t,x] = y, [t,y] = -x
inline RawModel heisenberg_wsym_model() {
  RawModel r;
  r.n = 4;
  r.m = {0, 1, 2};
  r.h = {3};
  r.c.assign(64, 0);
  r.set(0, 1, 2, 1);
  r.set(3, 0, 1, 1);
  r.set(3, 1, 0, -1);
  r.q = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return r;
}

}  // namespace testsupport

#endif
