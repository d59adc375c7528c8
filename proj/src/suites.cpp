#include "nregular/suites.hpp"

#include "nregular/diff_ops.hpp"
#include "nregular/kernel_pairing.hpp"
#include "nregular/lie_actions.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace nregular {

namespace {

using nlohmann::ordered_json;

// ------------------------------------------------------------ utilities

std::string hstr(HalfInt h) { return h.str(); }

CheckResult ok() { return {true, {}}; }
CheckResult fail(const std::string& w) { return {false, w}; }

GaussianRational gr_int(long v) { return GaussianRational(v); }

std::vector<int> clamp_n(const std::vector<int>& ns, int hi) {
    std::vector<int> out;
    for (int n : ns)
        if (n >= 1 && n <= hi) out.push_back(n);
    return out;
}

// Random small Gaussian-rational scalar, nonzero.
GaussianRational rand_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    int re = 0, im = 0;
    while (re == 0 && im == 0) {
        re = d(rng);
        im = d(rng);
    }
    return GaussianRational(mpq_class(re), mpq_class(im));
}

// Random element of the regular Laurent class: a combination of basis
// family members with l <= 1 for the given rank.
TensorFn random_regular(int n, Side side, std::mt19937& rng) {
    Family plus = side == Side::Column ? Family::F : Family::G;
    Family minus = side == Side::Column ? Family::Fp : Family::Gp;
    TensorFn out(side, n);
    for (int lt = 0; lt <= 2; ++lt) {
        auto ip = enumerate_indices(plus, n, HalfInt(lt));
        auto im = enumerate_indices(minus, n, HalfInt(lt));
        std::uniform_int_distribution<size_t> pick_p(0, ip.size() - 1);
        std::uniform_int_distribution<size_t> pick_m(0, im.size() - 1);
        out += rand_coeff(rng) * basis_fn(ip[pick_p(rng)]);
        out += rand_coeff(rng) * basis_fn(im[pick_m(rng)]);
    }
    return out;
}

// Determinant over the Gaussian rationals by elimination.
GaussianRational exact_det(std::vector<std::vector<GaussianRational>> m) {
    size_t n = m.size();
    GaussianRational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return GaussianRational();
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        GaussianRational inv = m[c][c].inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussianRational f = m[r][c] * inv;
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Matrix of unit-variable coordinates as Laurent entries.
Mat2L z_mat() { return Mat2L::z_matrix(); }

Mat2L zplus_mat() {
    return {LaurentFn::coordinate(2, 2), -LaurentFn::coordinate(1, 2),
            -LaurentFn::coordinate(2, 1), LaurentFn::coordinate(1, 1)};
}

// Spanning set of rank-1 column functions from Laurent monomials with
// homogeneity |d| <= 4: polynomial monomials and N^{-k}-weighted ones.
std::vector<TensorFn> monomial_span_rank1() {
    std::vector<TensorFn> out;
    auto add = [&out](const LaurentFn& m) {
        for (int c = 0; c < 2; ++c) {
            TensorFn f(Side::Column, 1);
            f.components[static_cast<size_t>(c)] = m;
            out.push_back(f);
        }
    };
    for (int k = 0; k <= 2; ++k)
        for (int a = 0; a + 2 * k <= 4; ++a)
            for (int b = 0; a + b + 2 * k <= 4; ++b)
                for (int c = 0; a + b + c + 2 * k <= 4; ++c)
                    for (int d = 0; a + b + c + d + 2 * k <= 4; ++d)
                        add(LaurentFn::term({a, b, c, d}, GaussianRational(1), k));
    return out;
}

// Block product of 4x4 quaternionic block matrices.
GlElement block_mul(const GlElement& x, const GlElement& y) {
    GlElement out;
    out.A = x.A * y.A + x.B * y.C;
    out.B = x.A * y.B + x.B * y.D;
    out.C = x.C * y.A + x.D * y.C;
    out.D = x.C * y.B + x.D * y.D;
    return out;
}

GlElement block_sub(const GlElement& x, const GlElement& y) {
    return {x.A - y.A, x.B - y.B, x.C - y.C, x.D - y.D};
}

// W-degree-m Taylor data of a Laurent function in the difference
// variable: map from W-exponent to the Z-dependent coefficient.
std::map<Expo, LaurentFn> taylor_w(const LaurentFn& k, int m) {
    std::map<Expo, LaurentFn> out;
    for (int a0 = 0; a0 <= m; ++a0)
        for (int a1 = 0; a0 + a1 <= m; ++a1)
            for (int a2 = 0; a0 + a1 + a2 <= m; ++a2) {
                int a3 = m - a0 - a1 - a2;
                Expo alpha{a0, a1, a2, a3};
                LaurentFn d = k;
                for (int t = 0; t < a0; ++t) d = d.partial(1, 1);
                for (int t = 0; t < a1; ++t) d = d.partial(1, 2);
                for (int t = 0; t < a2; ++t) d = d.partial(2, 1);
                for (int t = 0; t < a3; ++t) d = d.partial(2, 2);
                if (d.is_zero()) continue;
                long f = 1;
                for (int x : alpha)
                    for (int j = 2; j <= x; ++j) f *= j;
                out[alpha] = GaussianRational((m % 2) ? -1 : 1, f) * d;
                if (out[alpha].is_zero()) out.erase(alpha);
            }
    return out;
}

const std::vector<Family> kAllFamilies = {Family::F, Family::G, Family::Fp, Family::Gp};

// ------------------------------------------------------------ suites

void add_algebra_checks(std::vector<Check>& cs, const SuiteConfig&) {
    cs.push_back({"algebra", "algebra.units",
                  "e-basis multiplication: e_i e_j = -e_j e_i (i != j >= 1), e1 e2 e3 = -e0, "
                  "(e_i)^2 = -e0, e0 neutral",
                  [] {
                      Biquaternion e0 = Biquaternion::one();
                      for (int i = 1; i <= 3; ++i) {
                          Biquaternion ei = Biquaternion::unit(i);
                          if (ei * ei != -e0) return fail("(e_i)^2 != -e0 at i=" + std::to_string(i));
                          if (e0 * ei != ei || ei * e0 != ei) return fail("e0 not neutral");
                          for (int j = 1; j <= 3; ++j) {
                              if (i == j) continue;
                              Biquaternion ej = Biquaternion::unit(j);
                              if (ei * ej != -(ej * ei)) return fail("anticommutation failed");
                          }
                      }
                      if (Biquaternion::unit(1) * Biquaternion::unit(2) != Biquaternion::unit(3))
                          return fail("e1 e2 != e3");
                      if (Biquaternion::unit(1) * Biquaternion::unit(2) * Biquaternion::unit(3) != -e0)
                          return fail("e1 e2 e3 != -e0");
                      return ok();
                  }});
    cs.push_back({"algebra", "algebra.conjugation",
                  "N(ZW) = N(Z)N(W), (ZW)+ = W+ Z+, Z+ is an involution, Z Z^{-1} = e0, "
                  "N(Z) Z^{-1} = Z+, bar fixes real-coordinate quaternions",
                  [] {
                      std::mt19937 rng(7);
                      for (int t = 0; t < 12; ++t) {
                          Biquaternion z, w;
                          for (int i = 1; i <= 2; ++i)
                              for (int j = 1; j <= 2; ++j) {
                                  z.entry(i, j) = rand_coeff(rng);
                                  w.entry(i, j) = rand_coeff(rng);
                              }
                          if (norm(z * w) != norm(z) * norm(w)) return fail("norm not multiplicative");
                          if (conj_plus(z * w) != conj_plus(w) * conj_plus(z))
                              return fail("conjugation not anti-multiplicative");
                          if (conj_plus(conj_plus(z)) != z) return fail("conjugation not involutive");
                          if (!norm(z).is_zero()) {
                              if (z * invert(z) != Biquaternion::one()) return fail("inverse failed");
                              if (norm(z) * invert(z) != conj_plus(z)) return fail("adjugate identity");
                          }
                          EBasisCoords c = matrix_to_coords(z);
                          if (coords_to_matrix(c) != z) return fail("coordinate round-trip");
                          // real-coordinate point: strip imaginary parts
                          EBasisCoords rc;
                          for (int i = 0; i < 4; ++i) rc.c[static_cast<size_t>(i)] =
                              GaussianRational(c.c[static_cast<size_t>(i)].re);
                          Biquaternion x = coords_to_matrix(rc);
                          if (bar(x) != x) return fail("bar moved a real quaternion");
                      }
                      Biquaternion nullcone(GaussianRational(1), GaussianRational(1),
                                            GaussianRational(1), GaussianRational(1));
                      try {
                          invert(nullcone);
                          return fail("null-cone inversion did not throw");
                      } catch (const NonInvertibleError&) {}
                      return ok();
                  }});
    cs.push_back({"algebra", "algebra.laurent",
                  "Laurent canonical form: N * N^{-1} = 1; Euler identity sum z_ij d_ij = deg; "
                  "sphere restriction drops N factors; pole evaluation raises the typed error",
                  [] {
                      LaurentFn n = LaurentFn::norm_poly();
                      if (n * LaurentFn::norm_inverse(1) != LaurentFn::one())
                          return fail("N N^{-1} != 1");
                      std::mt19937 rng(11);
                      for (int t = 0; t < 8; ++t) {
                          std::uniform_int_distribution<int> ed(0, 2);
                          LaurentFn f = LaurentFn::term({ed(rng), ed(rng), ed(rng), ed(rng)},
                                                        rand_coeff(rng), ed(rng) + 1);
                          int d;
                          if (!f.is_homogeneous(&d)) return fail("monomial not homogeneous");
                          LaurentFn euler;
                          for (int i = 1; i <= 2; ++i)
                              for (int j = 1; j <= 2; ++j)
                                  euler += LaurentFn::coordinate(i, j) * f.partial(i, j);
                          if (euler != gr_int(d) * f) return fail("Euler identity failed");
                          if ((f * n).to_real_sphere_poly() != f.to_real_sphere_poly())
                              return fail("sphere restriction not N-invariant");
                      }
                      try {
                          LaurentFn::norm_inverse(1).evaluate(
                              Biquaternion(GaussianRational(1), GaussianRational(1),
                                           GaussianRational(1), GaussianRational(1)));
                          return fail("pole evaluation did not throw");
                      } catch (const PoleAtNullConeError&) {}
                      if (LaurentFn::norm_inverse(1).evaluate(
                              GaussianRational(2) * Biquaternion::one()) != GaussianRational(1, 4))
                          return fail("N^{-1}(2 e0) != 1/4");
                      return ok();
                  }});
}

void add_tensor_checks(std::vector<Check>& cs, const SuiteConfig&) {
    cs.push_back({"tensor", "tensor.slots",
                  "slot operators: identity acts trivially, disjoint slots commute, rank 1 is the "
                  "ordinary matrix-vector product, dual bases contract to delta",
                  [] {
                      std::mt19937 rng(3);
                      SpinorTensor t(Side::Column, 2);
                      for (auto& c : t.data) c = rand_coeff(rng);
                      if (slot_apply(Biquaternion::one(), 1, t) != t) return fail("identity slot");
                      Biquaternion e1 = Biquaternion::unit(1), e2 = Biquaternion::unit(2);
                      if (slot_apply(e1, 1, slot_apply(e2, 2, t)) !=
                          slot_apply(e2, 2, slot_apply(e1, 1, t)))
                          return fail("disjoint slots do not commute");
                      SpinorTensor v(Side::Column, 1);
                      v.data[0] = rand_coeff(rng);
                      v.data[1] = rand_coeff(rng);
                      Biquaternion a;
                      for (int i = 1; i <= 2; ++i)
                          for (int j = 1; j <= 2; ++j) a.entry(i, j) = rand_coeff(rng);
                      SpinorTensor av = slot_apply(a, 1, v);
                      if (av.data[0] != a.z11 * v.data[0] + a.z12 * v.data[1] ||
                          av.data[1] != a.z21 * v.data[0] + a.z22 * v.data[1])
                          return fail("rank-1 slot is not matrix-vector");
                      for (unsigned i = 0; i < 4; ++i)
                          for (unsigned j = 0; j < 4; ++j) {
                              GaussianRational c = contract(SpinorTensor::basis(Side::Row, 2, i),
                                                            SpinorTensor::basis(Side::Column, 2, j));
                              if (c != gr_int(i == j ? 1 : 0)) return fail("contraction not dual");
                          }
                      return ok();
                  }});
    cs.push_back({"tensor", "tensor.symmetrize",
                  "symmetrization is an exact projection with image dimension n+1 and kernel "
                  "dimension 2^n - (n+1), for n <= 4",
                  [] {
                      for (int n = 1; n <= kMaxRank; ++n) {
                          std::vector<std::vector<GaussianRational>> rows;
                          for (unsigned i = 0; i < (1u << n); ++i) {
                              SpinorTensor s = symmetrize(SpinorTensor::basis(Side::Column, n, i));
                              if (symmetrize(s) != s) return fail("not idempotent");
                              rows.push_back(s.data);
                          }
                          if (exact_rank(rows) != n + 1)
                              return fail("image dimension wrong at n=" + std::to_string(n));
                      }
                      return ok();
                  }});
    for (int n = 2; n <= kMaxRank; ++n)
        cs.push_back({"tensor", "tensor.casimir.n" + std::to_string(n),
                      "sum_i slot(e_i, j) slot(e_i, k) annihilates every symmetric tensor of rank " +
                          std::to_string(n) + ", for all slot pairs j != k; it is nonzero on "
                          "antisymmetric rank-2 tensors",
                      [n] {
                          for (unsigned i = 0; i < (1u << n); ++i) {
                              SpinorTensor s = symmetrize(SpinorTensor::basis(Side::Column, n, i));
                              for (int j = 1; j <= n; ++j)
                                  for (int k = 1; k <= n; ++k) {
                                      if (j == k) continue;
                                      if (!casimir_slot_sum(s, j, k).is_zero())
                                          return fail("nonzero on symmetric basis element");
                                  }
                          }
                          if (n == 2) {
                              SpinorTensor anti = SpinorTensor::basis(Side::Column, 2, 1) -
                                                  SpinorTensor::basis(Side::Column, 2, 2);
                              if (casimir_slot_sum(anti, 1, 2) != gr_int(4) * anti)
                                  return fail("antisymmetric eigenvalue is not 4");
                          }
                          return ok();
                      }});
}

void add_diffops_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    cs.push_back({"diffops", "diffops.xform",
                  "entry-coordinate operator matrices agree with the real-coordinate definitions "
                  "of the Fueter operators, the wave operator and the Euler operator on a monomial "
                  "basis through degree 3",
                  [] {
                      // x-coordinate oracles act on XPoly and are translated back.
                      auto check_poly = [](const XPoly& p) -> bool {
                          LaurentFn f = x_poly_to_laurent(p);
                          // wave operator: sum of second x-derivatives
                          XPoly box;
                          for (int i = 0; i < 4; ++i) box = box + p.partial(i).partial(i);
                          if (laplacian(f) != x_poly_to_laurent(box)) return false;
                          // Euler operator
                          XPoly eul;
                          for (int i = 0; i < 4; ++i)
                              eul = eul + XPoly::variable(i) * p.partial(i);
                          if (deg_op(f) != x_poly_to_laurent(eul)) return false;
                          // Fueter operators at rank 1 against the real-coordinate forms
                          // e0 d0 + e1 d1 + e2 d2 + e3 d3 (the plus operator) and its
                          // conjugate e0 d0 - e1 d1 - e2 d2 - e3 d3
                          for (int comp = 0; comp < 2; ++comp) {
                              TensorFn col(Side::Column, 1);
                              col.components[static_cast<size_t>(comp)] = f;
                              TensorFn plus(Side::Column, 1), minus(Side::Column, 1);
                              for (int i = 0; i < 4; ++i) {
                                  TensorFn dcol(Side::Column, 1);
                                  dcol.components[static_cast<size_t>(comp)] =
                                      x_poly_to_laurent(p.partial(i));
                                  Biquaternion e = Biquaternion::unit(i);
                                  plus += slot_apply(e, 1, dcol);
                                  minus += slot_apply(i == 0 ? e : conj_plus(e), 1, dcol);
                              }
                              if (nabla_plus_slot(col, 1) != plus) return false;
                              if (nabla_slot(col, 1) != minus) return false;
                          }
                          return true;
                      };
                      for (int a = 0; a <= 3; ++a)
                          for (int b = 0; a + b <= 3; ++b)
                              for (int c = 0; a + b + c <= 3; ++c)
                                  for (int d = 0; a + b + c + d <= 3; ++d) {
                                      XPoly m = XPoly::variable(0).pow(a) * XPoly::variable(1).pow(b) *
                                                XPoly::variable(2).pow(c) * XPoly::variable(3).pow(d);
                                      if (!check_poly(m))
                                          return fail("monomial x^(" + std::to_string(a) + "," +
                                                      std::to_string(b) + "," + std::to_string(c) +
                                                      "," + std::to_string(d) + ")");
                                  }
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.identities",
                  "2(deg+2) = Z+ nabla+ + nabla Z = nabla+ Z+ + Z nabla and "
                  "box = nabla+ nabla = nabla nabla+ on Laurent monomials with |degree| <= 4",
                  [] {
                      Mat2L z = z_mat(), zp = zplus_mat();
                      for (const auto& f : monomial_span_rank1()) {
                          TensorFn lhs = gr_int(2) * deg_shift(f, 2);
                          TensorFn r1 = slot_apply(zp, 1, nabla_plus_slot(f, 1)) +
                                        nabla_slot(slot_apply(z, 1, f), 1);
                          TensorFn r2 = nabla_plus_slot(slot_apply(zp, 1, f), 1) +
                                        slot_apply(z, 1, nabla_slot(f, 1));
                          if (lhs != r1 || lhs != r2) return fail("degree identity failed");
                          TensorFn box = laplacian(f);
                          if (box != nabla_plus_slot(nabla_slot(f, 1), 1) ||
                              box != nabla_slot(nabla_plus_slot(f, 1), 1))
                              return fail("wave factorization failed");
                      }
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.partial",
                  "entrywise partials: d11 z11^2 = 2 z11, d11 N^{-1} = -z22 N^{-2}, d12 z11 = 0",
                  [] {
                      LaurentFn z11 = LaurentFn::coordinate(1, 1);
                      if ((z11 * z11).partial(1, 1) != gr_int(2) * z11) return fail("d11 z11^2");
                      if (LaurentFn::norm_inverse(1).partial(1, 1) !=
                          -(LaurentFn::coordinate(2, 2) * LaurentFn::norm_inverse(2)))
                          return fail("d11 N^{-1}");
                      if (!z11.partial(1, 2).is_zero()) return fail("d12 z11");
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.deg",
                  "degree operator and its shifted inverse act spectrally on homogeneous pieces; "
                  "resonant degrees raise the typed error",
                  [] {
                      LaurentFn z11 = LaurentFn::coordinate(1, 1);
                      TensorFn f(Side::Column, 1);
                      f.components[0] = z11;
                      if (deg_shift_inverse(f, 2).components[0] != GaussianRational(1, 3) * z11)
                          return fail("(deg+2)^{-1} z11");
                      TensorFn g(Side::Column, 1);
                      g.components[0] = LaurentFn::norm_inverse(1);
                      if (!deg_shift(g, 2).is_zero()) return fail("(deg+2) N^{-1} != 0");
                      try {
                          deg_shift_inverse(g, 2);
                          return fail("resonance did not throw");
                      } catch (const ResonantDegreeError&) {}
                      TensorFn h(Side::Column, 1);
                      h.components[0] = LaurentFn::norm_inverse(2);
                      if (deg_shift_inverse(h, 2).components[0] !=
                          GaussianRational(-1, 2) * LaurentFn::norm_inverse(2))
                          return fail("(deg+2)^{-1} N^{-2}");
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.harmonic",
                  "regular functions are harmonic: box annihilates N^{-1}, every t^l with l <= 2, "
                  "and every component of every family member with l <= 1",
                  [] {
                      LaurentFn ninv = LaurentFn::norm_inverse(1);
                      if (!laplacian(ninv).is_zero()) return fail("box N^{-1} != 0");
                      for (int lt = 0; lt <= 4; ++lt)
                          for (int v = -lt; v <= lt; v += 2)
                              for (int m = -lt; m <= lt; m += 2)
                                  if (!laplacian(t_coeff(HalfInt(lt), HalfInt(v), HalfInt(m))).is_zero())
                                      return fail("box t^l != 0");
                      for (int n = 1; n <= 2; ++n)
                          for (int lt = 0; lt <= 2; ++lt)
                              for (Family fam : kAllFamilies)
                                  for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt)))
                                      if (!laplacian(basis_fn(bi)).is_zero())
                                          return fail("family member not harmonic: " + bi.str());
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.construction",
                  "applying the slot gradient at every slot to a harmonic symmetric-valued "
                  "polynomial yields a regular function (both sides)",
                  [] {
                      std::mt19937 rng(17);
                      for (int n = 1; n <= 3; ++n)
                          for (Side side : {Side::Column, Side::Row})
                              for (int trial = 0; trial < 4; ++trial) {
                                  TensorFn phi(side, n);
                                  std::uniform_int_distribution<int> ed(0, 3);
                                  for (auto& comp : phi.components) {
                                      // harmonic monomials: no opposite-corner pairs
                                      int a = ed(rng), c = ed(rng);
                                      if (a + c > 3) c = 0;
                                      comp = LaurentFn::term({a, 0, c, 0}, rand_coeff(rng)) +
                                             LaurentFn::term({0, ed(rng) % 2, 0, ed(rng) % 2},
                                                             rand_coeff(rng));
                                  }
                                  phi = symmetrize(phi);
                                  TensorFn d = phi;
                                  for (int k = 1; k <= n; ++k) d = nabla_slot(d, k);
                                  if (!is_n_regular(d)) return fail("construction not regular");
                              }
                      return ok();
                  }});
    cs.push_back({"diffops", "diffops.commute",
                  "each slot Fueter operator lowers homogeneity by one: "
                  "nabla+_k deg = (deg+1) nabla+_k on the Laurent class",
                  [] {
                      std::mt19937 rng(23);
                      for (int n = 1; n <= 2; ++n)
                          for (int trial = 0; trial < 3; ++trial) {
                              TensorFn f = random_regular(n, Side::Column, rng);
                              // also perturb with a non-regular component
                              f.components[0] += LaurentFn::term({1, 1, 0, 0}, rand_coeff(rng), 1);
                              for (int k = 1; k <= n; ++k) {
                                  TensorFn lhs = nabla_plus_slot(deg_op(f), k);
                                  TensorFn rhs = deg_shift(nabla_plus_slot(f, k), 1);
                                  if (lhs != rhs) return fail("commutation failed");
                              }
                          }
                      return ok();
                  }});
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"diffops", "diffops.dn.n" + std::to_string(n),
                      "the degree-shift product and its spectral inverse compose to the identity "
                      "on 20 random regular Laurent-class functions of rank " + std::to_string(n),
                      [n, seed = cfg.seed] {
                          std::mt19937 rng(seed + static_cast<unsigned>(n));
                          for (int trial = 0; trial < 20; ++trial) {
                              Side side = trial % 2 ? Side::Row : Side::Column;
                              TensorFn f = random_regular(n, side, rng);
                              if (Dn(Dn_inverse(f, n), n) != f) return fail("right inverse failed");
                              if (Dn_inverse(Dn(f, n), n) != f) return fail("left inverse failed");
                          }
                          return ok();
                      }});
}

void add_basis_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    cs.push_back({"basis", "basis.tcoeff",
                  "matrix coefficients: t^0 = 1; the four t^{1/2} reproduce the matrix entries; "
                  "t^1_{0,0} = z11 z22 + z12 z21; inverted variants have homogeneity -2l-2",
                  [] {
                      if (t_coeff(HalfInt(0), HalfInt(0), HalfInt(0)) != LaurentFn::one())
                          return fail("t^0 != 1");
                      struct {
                          int v, m, i, j;
                      } half_cases[] = {{-1, -1, 1, 1}, {-1, 1, 1, 2}, {1, -1, 2, 1}, {1, 1, 2, 2}};
                      for (auto& h : half_cases)
                          if (t_coeff(HalfInt(1), HalfInt(h.v), HalfInt(h.m)) !=
                              LaurentFn::coordinate(h.i, h.j))
                              return fail("t^{1/2} entry mismatch");
                      LaurentFn t100 = t_coeff(HalfInt(2), HalfInt(0), HalfInt(0));
                      if (t100 != LaurentFn::term({1, 0, 0, 1}, gr_int(1)) +
                                      LaurentFn::term({0, 1, 1, 0}, gr_int(1)))
                          return fail("t^1_{0,0} mismatch");
                      if (t_coeff_inverted(HalfInt(0), HalfInt(0), HalfInt(0)) !=
                          LaurentFn::norm_inverse(1))
                          return fail("inverted t^0");
                      if (t_coeff_inverted(HalfInt(1), HalfInt(-1), HalfInt(-1)) !=
                          LaurentFn::coordinate(2, 2) * LaurentFn::norm_inverse(2))
                          return fail("inverted t^{1/2} entry");
                      for (int lt = 0; lt <= 4; ++lt)
                          for (int v = -lt; v <= lt; v += 2) {
                              int d;
                              LaurentFn f = t_coeff_inverted(HalfInt(lt), HalfInt(v), HalfInt(lt % 2));
                              if (!f.is_homogeneous(&d) || (!f.is_zero() && d != -lt - 2))
                                  return fail("inverted homogeneity");
                          }
                      return ok();
                  }});
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"basis", "basis.regularity.n" + std::to_string(n),
                      "every family member of rank " + std::to_string(n) + " with l <= " +
                          hstr(cfg.l_max) + " is regular on its side, symmetric-valued, and "
                          "homogeneous of degree 2l (plain families) or -(2l+n+2) (primed)",
                      [n, lm = cfg.l_max] {
                          for (HalfInt l : l_values(lm))
                              for (Family fam : kAllFamilies)
                                  for (const auto& bi : enumerate_indices(fam, n, l)) {
                                      TensorFn v = basis_fn(bi);
                                      if (v.is_zero()) return fail("zero member " + bi.str());
                                      if (!is_n_regular(v)) return fail("not regular " + bi.str());
                                      if (!is_symmetric_valued(v))
                                          return fail("not symmetric " + bi.str());
                                      int d;
                                      int expect = (fam == Family::F || fam == Family::G)
                                                       ? l.twice
                                                       : -(l.twice + n + 2);
                                      if (!is_homogeneous(v, &d) || d != expect)
                                          return fail("degree mismatch " + bi.str());
                                  }
                          return ok();
                      }});
    cs.push_back({"basis", "basis.explicit.n1",
                  "rank-1 members match their closed forms, e.g. the lowest F is the constant "
                  "column (1,0) and the lowest G-row pair is (1,0), (0,1)",
                  [] {
                      TensorFn f = F_basis(1, HalfInt(0), HalfInt(-1), HalfInt(0));
                      if (f.components[0] != LaurentFn::one() || !f.components[1].is_zero())
                          return fail("lowest F mismatch");
                      TensorFn g1 = G_basis(1, HalfInt(0), HalfInt(1), HalfInt(0));
                      TensorFn g2 = G_basis(1, HalfInt(0), HalfInt(-1), HalfInt(0));
                      if (g1.components[1] != LaurentFn::one() || !g1.components[0].is_zero() ||
                          g2.components[0] != LaurentFn::one() || !g2.components[1].is_zero())
                          return fail("lowest G mismatch");
                      // closed-form coefficient patterns at rank 1
                      for (int lt = 0; lt <= 3; ++lt) {
                          for (const auto& bi : enumerate_indices(Family::F, 1, HalfInt(lt))) {
                              TensorFn v = basis_fn(bi);
                              GaussianRational cm(mpq_class(lt - bi.mu.twice + 1, 2));
                              GaussianRational cp(mpq_class(lt + bi.mu.twice + 1, 2));
                              if (v.components[0] !=
                                      cm * t_coeff(bi.l, bi.nu, bi.mu + HalfInt(1)) ||
                                  v.components[1] != cp * t_coeff(bi.l, bi.nu, bi.mu - HalfInt(1)))
                                  return fail("closed rank-1 F mismatch at " + bi.str());
                          }
                          for (const auto& bi : enumerate_indices(Family::G, 1, HalfInt(lt))) {
                              TensorFn v = basis_fn(bi);
                              if (v.components[0] != t_coeff(bi.l, bi.mu + HalfInt(1), bi.nu) ||
                                  v.components[1] != t_coeff(bi.l, bi.mu - HalfInt(1), bi.nu))
                                  return fail("closed rank-1 G mismatch at " + bi.str());
                          }
                          for (const auto& bi : enumerate_indices(Family::Fp, 1, HalfInt(lt))) {
                              TensorFn v = basis_fn(bi);
                              GaussianRational cm(mpq_class(lt - bi.nu.twice + 2, 2));
                              GaussianRational cp(mpq_class(lt + bi.nu.twice + 2, 2));
                              if (v.components[0] !=
                                      cm * t_coeff_inverted(bi.l + HalfInt(1), bi.nu - HalfInt(1),
                                                            bi.mu) ||
                                  v.components[1] !=
                                      cp * t_coeff_inverted(bi.l + HalfInt(1), bi.nu + HalfInt(1),
                                                            bi.mu))
                                  return fail("closed rank-1 F' mismatch at " + bi.str());
                          }
                          for (const auto& bi : enumerate_indices(Family::Gp, 1, HalfInt(lt))) {
                              TensorFn v = basis_fn(bi);
                              if (v.components[0] != t_coeff_inverted(bi.l + HalfInt(1), bi.mu,
                                                                      bi.nu - HalfInt(1)) ||
                                  v.components[1] != t_coeff_inverted(bi.l + HalfInt(1), bi.mu,
                                                                      bi.nu + HalfInt(1)))
                                  return fail("closed rank-1 G' mismatch at " + bi.str());
                          }
                      }
                      return ok();
                  }});
    cs.push_back({"basis", "basis.recursion",
                  "rank recursions agree with the direct definitions: both displayed F forms "
                  "coincide, the F and G recursions reproduce the rank-(n+1) members, and the "
                  "primed recursions' alternative branches agree where both apply",
                  [lm = cfg.l_max] {
                      for (int n = 1; n <= 2; ++n)
                          for (HalfInt l : l_values(lm))
                              for (const auto& bi : enumerate_indices(Family::F, n + 1, l)) {
                                  if (F_basis(bi.n, bi.l, bi.mu, bi.nu) !=
                                      F_basis_alt(bi.n, bi.l, bi.mu, bi.nu))
                                      return fail("F forms disagree " + bi.str());
                                  // first recursion branch
                                  TensorFn prev =
                                      F_basis(n, bi.l + HalfInt(1), bi.mu, bi.nu - HalfInt(1));
                                  TensorFn rec(Side::Column, n + 1);
                                  for (unsigned idx = 0; idx < prev.components.size(); ++idx)
                                      for (unsigned b0 = 0; b0 < 2; ++b0)
                                          rec.components[(idx << 1) | b0] =
                                              prev.components[idx].partial(1, static_cast<int>(b0) + 1);
                                  if (rec != basis_fn(bi)) return fail("F recursion " + bi.str());
                              }
                      for (int n = 1; n <= 2; ++n)
                          for (HalfInt l : l_values(lm))
                              for (const auto& bi : enumerate_indices(Family::G, n + 1, l)) {
                                  TensorFn hi = G_basis(n, bi.l, bi.mu + HalfInt(1), bi.nu);
                                  TensorFn lo = G_basis(n, bi.l, bi.mu - HalfInt(1), bi.nu);
                                  TensorFn rec(Side::Row, n + 1);
                                  for (unsigned idx = 0; idx < hi.components.size(); ++idx) {
                                      rec.components[idx << 1] = hi.components[idx];
                                      rec.components[(idx << 1) | 1u] = lo.components[idx];
                                  }
                                  if (rec != basis_fn(bi)) return fail("G recursion " + bi.str());
                              }
                      // primed families: both branches agree in the interior of the mu range
                      for (int n = 1; n <= 2; ++n)
                          for (HalfInt l : l_values(HalfInt(2)))
                              for (const auto& bi : enumerate_indices(Family::Fp, n + 1, l)) {
                                  BasisIndex up{Family::Fp, n, bi.l, bi.mu + HalfInt(1), bi.nu};
                                  BasisIndex dn{Family::Fp, n, bi.l, bi.mu - HalfInt(1), bi.nu};
                                  if (!up.valid() || !dn.valid()) continue;
                                  TensorFn a = basis_fn(up), b = basis_fn(dn);
                                  TensorFn ra(Side::Column, n + 1), rb(Side::Column, n + 1);
                                  for (unsigned idx = 0; idx < a.components.size(); ++idx)
                                      for (unsigned b0 = 0; b0 < 2; ++b0) {
                                          ra.components[(idx << 1) | b0] =
                                              -a.components[idx].partial(1, static_cast<int>(b0) + 1);
                                          rb.components[(idx << 1) | b0] =
                                              -b.components[idx].partial(2, static_cast<int>(b0) + 1);
                                      }
                                  if (ra != rb) return fail("primed branches disagree " + bi.str());
                              }
                      return ok();
                  }});
    cs.push_back({"basis", "basis.dimension",
                  "the index set at fixed (n, l) has size (2l+1)(2l+n+1)",
                  [lm = cfg.l_max] {
                      for (int n = 1; n <= 3; ++n)
                          for (HalfInt l : l_values(lm)) {
                              size_t want = static_cast<size_t>((l.twice + 1) * (l.twice + n + 1));
                              if (enumerate_indices(Family::F, n, l).size() != want)
                                  return fail("index count mismatch");
                          }
                      return ok();
                  }});
}

void add_kernel_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    cs.push_back({"kernel", "kernel.moments",
                  "exact sphere moments: unit mass, (x^i)^2 -> 1/4, (x^0)^4 -> 1/8, "
                  "(x^0 x^1)^2 -> 1/24; odd moments vanish; entry-monomial route agrees with the "
                  "real-coordinate route on sample integrands",
                  [] {
                      if (sphere_moment(0, 0, 0, 0) != 1) return fail("mass");
                      if (sphere_moment(2, 0, 0, 0) != mpq_class(1, 4)) return fail("x^2");
                      if (sphere_moment(4, 0, 0, 0) != mpq_class(1, 8)) return fail("x^4");
                      if (sphere_moment(2, 2, 0, 0) != mpq_class(1, 24)) return fail("x^2 y^2");
                      if (sphere_moment(1, 2, 0, 0) != 0 || sphere_moment(3, 0, 1, 0) != 0)
                          return fail("odd moment nonzero");
                      if (integrate_S3(LaurentFn::one()) != gr_int(1) ||
                          !integrate_S3(LaurentFn::coordinate(1, 1)).is_zero() ||
                          integrate_S3(LaurentFn::norm_poly()) != gr_int(1))
                          return fail("basic integrals");
                      std::mt19937 rng(29);
                      std::uniform_int_distribution<int> ed(0, 2);
                      for (int t = 0; t < 20; ++t) {
                          LaurentFn f = LaurentFn::term({ed(rng), ed(rng), ed(rng), ed(rng)},
                                                        rand_coeff(rng), ed(rng));
                          if (integrate_S3(f) != integrate_S3_via_x(f))
                              return fail("integration routes disagree");
                      }
                      return ok();
                  }});
    cs.push_back({"kernel", "kernel.moments.montecarlo",
                  "every even moment of total degree <= 8 matches a seeded 10^6-sample Monte "
                  "Carlo estimate within 3 standard errors",
                  [seed = cfg.seed] {
                      std::mt19937 rng(seed);
                      std::normal_distribution<double> gauss(0.0, 1.0);
                      std::vector<std::array<int, 4>> keys;
                      for (int a = 0; a <= 8; a += 2)
                          for (int b = 0; a + b <= 8; b += 2)
                              for (int c = 0; a + b + c <= 8; c += 2)
                                  for (int d = 0; a + b + c + d <= 8; d += 2)
                                      keys.push_back({a, b, c, d});
                      std::vector<double> sum(keys.size()), sumsq(keys.size());
                      const int N = 1000000;
                      for (int s = 0; s < N; ++s) {
                          double x[4], r2 = 0;
                          for (double& v : x) {
                              v = gauss(rng);
                              r2 += v * v;
                          }
                          double r = std::sqrt(r2);
                          double pw[4][5];
                          for (int i = 0; i < 4; ++i) {
                              pw[i][0] = 1;
                              double u = x[i] / r;
                              for (int p = 1; p <= 4; ++p) pw[i][p] = pw[i][p - 1] * (u * u);
                          }
                          for (size_t k = 0; k < keys.size(); ++k) {
                              double v = pw[0][keys[k][0] / 2] * pw[1][keys[k][1] / 2] *
                                         pw[2][keys[k][2] / 2] * pw[3][keys[k][3] / 2];
                              sum[k] += v;
                              sumsq[k] += v * v;
                          }
                      }
                      for (size_t k = 0; k < keys.size(); ++k) {
                          double mean = sum[k] / N;
                          double var = std::max(0.0, sumsq[k] / N - mean * mean);
                          double se = std::sqrt(var / N);
                          double exact = sphere_moment(keys[k][0], keys[k][1], keys[k][2], keys[k][3])
                                             .get_d();
                          if (std::abs(mean - exact) > 3 * se + 1e-12)
                              return fail("moment (" + std::to_string(keys[k][0]) + "," +
                                          std::to_string(keys[k][1]) + "," +
                                          std::to_string(keys[k][2]) + "," +
                                          std::to_string(keys[k][3]) + ") outside 3 SE");
                      }
                      return ok();
                  }});
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"kernel", "kernel.invariants.n" + std::to_string(n),
                      "the rank-" + std::to_string(n) + " kernel has denominator power n+1, "
                      "homogeneity -(n+2), parity (-1)^n, and harmonic components",
                      [n] {
                          KernelFn k = kernel(n);
                          std::array<std::array<GaussianRational, 4>, 4> neg{};
                          for (size_t v = 0; v < 4; ++v) neg[v][v] = gr_int(-1);
                          for (auto& row : k.comps)
                              for (auto& c : row) {
                                  if (c.denom_pow() != n + 1) return fail("denominator power");
                                  int d;
                                  if (!c.is_homogeneous(&d) || d != -(n + 2))
                                      return fail("homogeneity");
                                  LaurentFn flip = c.substitute_linear(neg, gr_int(1));
                                  if (flip != (n % 2 ? -c : c)) return fail("parity");
                                  if (!laplacian(c).is_zero()) return fail("not harmonic");
                              }
                          if (n == 1) {
                              // closed form: adjugate over N^2
                              Mat2L zp = zplus_mat();
                              LaurentFn n2 = LaurentFn::norm_inverse(2);
                              for (int i = 1; i <= 2; ++i)
                                  for (int j = 1; j <= 2; ++j)
                                      if (k.comps[static_cast<size_t>(i - 1)][static_cast<size_t>(
                                              j - 1)] != zp.at(i, j) * n2)
                                          return fail("rank-1 closed form");
                          }
                          return ok();
                      }});
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"kernel", "kernel.expansion.n" + std::to_string(n),
                      "both expansions of the rank-" + std::to_string(n) + " kernel match its "
                      "Taylor data in the second variable through total degree 2, exactly",
                      [n] {
                          KernelFn k = kernel(n);
                          size_t dim = 1u << n;
                          for (int m = 0; m <= 2; ++m) {
                              std::vector<std::map<Expo, LaurentFn>> fg(dim * dim), fpg(dim * dim);
                              for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(m))) {
                                  TensorFn F = basis_fn(bi);
                                  BasisIndex gi = bi;
                                  gi.family = Family::Gp;
                                  TensorFn Gp = basis_fn(gi);
                                  for (size_t I = 0; I < dim; ++I)
                                      for (size_t J = 0; J < dim; ++J)
                                          for (const auto& [e, c] : F.components[I].numerator()) {
                                              auto& slot = fg[I * dim + J][e];
                                              slot += c * Gp.components[J];
                                              if (slot.is_zero()) fg[I * dim + J].erase(e);
                                          }
                              }
                              for (const auto& bi : enumerate_indices(Family::Fp, n, HalfInt(m))) {
                                  TensorFn Fp = basis_fn(bi);
                                  BasisIndex gi = bi;
                                  gi.family = Family::G;
                                  TensorFn G = basis_fn(gi);
                                  for (size_t I = 0; I < dim; ++I)
                                      for (size_t J = 0; J < dim; ++J)
                                          for (const auto& [e, c] : G.components[J].numerator()) {
                                              auto& slot = fpg[I * dim + J][e];
                                              slot += c * Fp.components[I];
                                              if (slot.is_zero()) fpg[I * dim + J].erase(e);
                                          }
                              }
                              for (size_t I = 0; I < dim; ++I)
                                  for (size_t J = 0; J < dim; ++J) {
                                      auto tw = taylor_w(k.comps[I][J], m);
                                      if (tw != fg[I * dim + J] || tw != fpg[I * dim + J])
                                          return fail("expansion bucket mismatch at degree " +
                                                      std::to_string(m));
                                  }
                          }
                          return ok();
                      }});
    cs.push_back({"kernel", "kernel.expansion.float",
                  "floating spot check: rank-2 partial sums at (2 e0, e1/2) approach the exact "
                  "kernel value with relative error < 10^-3 at level 4",
                  [] {
                      int n = 2;
                      Biquaternion Z = gr_int(2) * Biquaternion::one();
                      Biquaternion W = GaussianRational(1, 2) * Biquaternion::unit(1);
                      KernelFn k = kernel(n);
                      size_t dim = 1u << n;
                      std::vector<std::vector<GaussianRational>> acc(
                          dim, std::vector<GaussianRational>(dim));
                      for (int lt = 0; lt <= 8; ++lt)
                          for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(lt))) {
                              SpinorTensor F = basis_fn(bi).evaluate(W);
                              BasisIndex gi = bi;
                              gi.family = Family::Gp;
                              SpinorTensor Gp = basis_fn(gi).evaluate(Z);
                              for (size_t I = 0; I < dim; ++I)
                                  for (size_t J = 0; J < dim; ++J) acc[I][J] += F.data[I] * Gp.data[J];
                          }
                      double worst = 0;
                      for (size_t I = 0; I < dim; ++I)
                          for (size_t J = 0; J < dim; ++J) {
                              GaussianRational ex = k.comps[I][J].evaluate(Z - W);
                              std::complex<double> ev(ex.to_double_re(), ex.to_double_im());
                              std::complex<double> av(acc[I][J].to_double_re(),
                                                      acc[I][J].to_double_im());
                              if (std::abs(ev) > 1e-12)
                                  worst = std::max(worst, std::abs(av - ev) / std::abs(ev));
                          }
                      if (worst >= 1e-3) return fail("relative error " + std::to_string(worst));
                      return ok();
                  }});
}

void add_pairing_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"pairing", "pairing.orthogonality.n" + std::to_string(n),
                      "the full rank-" + std::to_string(n) + " pairing matrix over l, l' <= " +
                          hstr(cfg.l_max) + " is the delta pattern: <F, G'> = delta, "
                          "<F', G> = (-1)^{n-1} delta, <F, G> = <F', G'> = 0",
                      [n, lm = cfg.l_max] {
                          GaussianRational sgn(n % 2 ? 1 : -1);
                          for (HalfInt l : l_values(lm))
                              for (HalfInt lp : l_values(lm))
                                  for (const auto& fi : enumerate_indices(Family::F, n, l))
                                      for (const auto& gi : enumerate_indices(Family::Gp, n, lp)) {
                                          bool diag = l == lp && fi.mu == gi.mu && fi.nu == gi.nu;
                                          BasisIndex fpi = fi, gpi = gi;
                                          fpi.family = Family::Fp;
                                          gpi.family = Family::G;
                                          GaussianRational v1 =
                                              bilinear_pairing(basis_fn(fi), basis_fn(gi));
                                          if (v1 != gr_int(diag ? 1 : 0))
                                              return fail("<F,G'> " + fi.str() + " vs " + gi.str() +
                                                          " -> " + v1.str());
                                          GaussianRational v2 =
                                              bilinear_pairing(basis_fn(fpi), basis_fn(gpi));
                                          if (v2 != (diag ? sgn : gr_int(0)))
                                              return fail("<F',G> " + fpi.str() + " vs " + gpi.str() +
                                                          " -> " + v2.str());
                                          if (!bilinear_pairing(basis_fn(fi), basis_fn(gpi)).is_zero())
                                              return fail("<F,G> nonzero");
                                          if (!bilinear_pairing(basis_fn(fpi), basis_fn(gi)).is_zero())
                                              return fail("<F',G'> nonzero");
                                      }
                          return ok();
                      }});
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"pairing", "pairing.degselect.n" + std::to_string(n),
                      "degree selection at rank " + std::to_string(n) + ": the pairing vanishes "
                      "whenever the two homogeneity degrees do not sum to -(n+2)",
                      [n] {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (int lpt = 0; lpt <= 2; ++lpt) {
                                  if (lt == lpt) continue; // complementary case excluded
                                  auto f = enumerate_indices(Family::F, n, HalfInt(lt));
                                  auto g = enumerate_indices(Family::Gp, n, HalfInt(lpt));
                                  if (!bilinear_pairing(basis_fn(f[f.size() / 2]),
                                                        basis_fn(g[g.size() / 3]))
                                           .is_zero())
                                      return fail("nonzero off-degree pairing");
                              }
                          return ok();
                      }});
    cs.push_back({"pairing", "pairing.degswitch",
                  "the degree-shift product can be moved to the other argument at the cost of "
                  "(-1)^{n-1}, on family pairs and random regular pairs",
                  [seed = cfg.seed] {
                      std::mt19937 rng(seed + 101);
                      for (int n = 1; n <= 2; ++n) {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (const auto& fi : enumerate_indices(Family::F, n, HalfInt(lt))) {
                                  BasisIndex gi = fi;
                                  gi.family = Family::Gp;
                                  if (!deg_switch_check(basis_fn(fi), basis_fn(gi)))
                                      return fail("transfer failed on " + fi.str());
                              }
                          for (int t = 0; t < 3; ++t) {
                              TensorFn f = random_regular(n, Side::Column, rng);
                              TensorFn g = random_regular(n, Side::Row, rng);
                              if (!deg_switch_check(f, g)) return fail("transfer failed on random pair");
                          }
                      }
                      return ok();
                  }});
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"pairing", "pairing.cauchythm.n" + std::to_string(n),
                      "closed-contour vanishing at rank " + std::to_string(n) + ": the sphere "
                      "integral of g . (Z x ... x Z) . f vanishes for polynomial regular pairs",
                      [n, seed = cfg.seed] {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (int lpt = 0; lpt <= 2; ++lpt)
                                  for (const auto& fi : enumerate_indices(Family::F, n, HalfInt(lt)))
                                      for (const auto& gi :
                                           enumerate_indices(Family::G, n, HalfInt(lpt)))
                                          if (!cauchy_theorem_integral(basis_fn(fi), basis_fn(gi))
                                                   .is_zero())
                                              return fail("nonzero integral " + fi.str() + " " +
                                                          gi.str());
                          std::mt19937 rng(seed + 202);
                          for (int t = 0; t < 3; ++t) {
                              // polynomial parts only
                              TensorFn f(Side::Column, n), g(Side::Row, n);
                              for (int lt = 0; lt <= 2; ++lt) {
                                  auto fi = enumerate_indices(Family::F, n, HalfInt(lt));
                                  auto gi = enumerate_indices(Family::G, n, HalfInt(lt));
                                  std::uniform_int_distribution<size_t> pf(0, fi.size() - 1);
                                  std::uniform_int_distribution<size_t> pg(0, gi.size() - 1);
                                  f += rand_coeff(rng) * basis_fn(fi[pf(rng)]);
                                  g += rand_coeff(rng) * basis_fn(gi[pg(rng)]);
                              }
                              if (!cauchy_theorem_integral(f, g).is_zero())
                                  return fail("nonzero integral on random regular pair");
                          }
                          return ok();
                      }});
    cs.push_back({"pairing", "pairing.laurent",
                  "coefficient extraction against the dual families reconstructs Laurent-class "
                  "regular functions exactly (20 random functions per rank <= 3)",
                  [seed = cfg.seed, ns = cfg.n_range] {
                      for (int n : clamp_n(ns, 3)) {
                          std::mt19937 rng(seed + 303 + static_cast<unsigned>(n));
                          for (int t = 0; t < 20; ++t) {
                              TensorFn f = random_regular(n, Side::Column, rng);
                              auto table = laurent_coefficients(f, HalfInt(2));
                              if (reconstruct_from_coefficients(table, n) != f)
                                  return fail("reconstruction failed at rank " + std::to_string(n));
                          }
                          // unit vectors land on single coefficients
                          BasisIndex bi = enumerate_indices(Family::F, n, HalfInt(1))[0];
                          auto table = laurent_coefficients(basis_fn(bi), HalfInt(2));
                          if (table.b.size() != 0 || table.a.size() != 1 ||
                              table.a.begin()->second != gr_int(1))
                              return fail("unit coefficient table wrong");
                      }
                      return ok();
                  }});
    cs.push_back({"pairing", "pairing.inner",
                  "the inner products are conjugate-symmetric, positive on the polynomial spaces, "
                  "diagonal on distinct labels, and agree with the bilinear pairing composed with "
                  "conjugation-inversion",
                  [seed = cfg.seed] {
                      for (int n = 1; n <= 2; ++n) {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(lt))) {
                                  TensorFn v = basis_fn(bi);
                                  GaussianRational p = inner_product_F(v, v);
                                  if (!p.is_real() || !(p.re > 0))
                                      return fail("not positive at " + bi.str());
                              }
                          std::mt19937 rng(seed + 404);
                          for (int t = 0; t < 3; ++t) {
                              TensorFn f1 = random_regular(n, Side::Column, rng);
                              TensorFn f2 = random_regular(n, Side::Column, rng);
                              if (inner_product_F(f1, f2) != inner_product_F(f2, f1).conj())
                                  return fail("conjugate symmetry failed");
                              GaussianRational rel =
                                  bilinear_pairing(f1, conj_dagger(act_inversion(f2)));
                              if (inner_product_F(f1, f2) != rel)
                                  return fail("relation to bilinear pairing failed");
                              TensorFn g1 = random_regular(n, Side::Row, rng);
                              TensorFn g2 = random_regular(n, Side::Row, rng);
                              if (inner_product_G(g1, g2) != inner_product_G(g2, g1).conj())
                                  return fail("row-side conjugate symmetry failed");
                          }
                      }
                      return ok();
                  }});
}

void add_reproduce_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"reproduce", "reproduce.n" + std::to_string(n),
                      "the sphere integral against the rank-" + std::to_string(n) + " kernel "
                      "returns the degree-shift product applied to f at 5 interior points and 0 "
                      "at 3 exterior points, for every plain family member with 2l <= 3",
                      [n] {
                          GaussianRational half(1, 2), third(1, 3), quarter(1, 4);
                          std::vector<Biquaternion> interior = {
                              third * Biquaternion::one(),
                              quarter * (Biquaternion::one() + Biquaternion::unit(2)),
                              half * Biquaternion::unit(1),
                              GaussianRational(1, 5) *
                                  (Biquaternion::unit(0) + Biquaternion::unit(1) +
                                   Biquaternion::unit(3)),
                              GaussianRational(2, 3) * Biquaternion::unit(3)};
                          std::vector<Biquaternion> exterior = {
                              gr_int(2) * Biquaternion::one(),
                              Biquaternion::one() + Biquaternion::unit(1),
                              GaussianRational(3, 2) * Biquaternion::unit(2)};
                          for (int lt = 0; lt <= 3; ++lt)
                              for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(lt))) {
                                  TensorFn f = basis_fn(bi);
                                  for (const auto& w : interior)
                                      if (!(cauchy_fueter_apply(f, w, HalfInt(3)) ==
                                            Dn(f, n).evaluate(w)))
                                          return fail("interior mismatch at " + bi.str());
                                  for (const auto& w : exterior)
                                      if (!cauchy_fueter_apply(f, w, HalfInt(3)).is_zero())
                                          return fail("exterior not zero at " + bi.str());
                              }
                          return ok();
                      }});
    cs.push_back({"reproduce", "reproduce.truncation",
                  "a truncation level below the degree of the integrand raises the typed error",
                  [] {
                      TensorFn f = basis_fn(enumerate_indices(Family::F, 1, HalfInt(3))[0]);
                      try {
                          cauchy_fueter_apply(f, GaussianRational(1, 3) * Biquaternion::one(),
                                              HalfInt(1));
                          return fail("no error raised");
                      } catch (const TruncationInsufficientError&) {
                          return ok();
                      }
                  }});
}

void add_lie_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    cs.push_back({"lie", "lie.bracket",
                  "the differentiated action is a Lie algebra homomorphism: "
                  "act([X,Y]) = act(X) act(Y) - act(Y) act(X) on sample functions",
                  [seed = cfg.seed] {
                      std::mt19937 rng(seed + 505);
                      auto gens = one_block_generators();
                      for (int n = 1; n <= 2; ++n)
                          for (int t = 0; t < 6; ++t) {
                              std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
                              GlElement x = gens[pick(rng)], y = gens[pick(rng)];
                              TensorFn f = random_regular(n, t % 2 ? Side::Row : Side::Column, rng);
                              TensorFn lhs =
                                  act_algebra(block_sub(block_mul(x, y), block_mul(y, x)), f);
                              TensorFn rhs = act_algebra(x, act_algebra(y, f)) -
                                             act_algebra(y, act_algebra(x, f));
                              if (lhs != rhs) return fail("bracket mismatch");
                          }
                      return ok();
                  }});
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"lie", "lie.regularity.n" + std::to_string(n),
                      "all 16 one-block generators preserve regularity of every rank-" +
                          std::to_string(n) + " family member with l <= 1",
                      [n] {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (Family fam : kAllFamilies)
                                  for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt)))
                                      for (const auto& x : one_block_generators())
                                          if (!is_n_regular(act_algebra(x, basis_fn(bi))))
                                              return fail("regularity lost at " + bi.str());
                          return ok();
                      }});
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"lie", "lie.invariance.n" + std::to_string(n),
                      "pairing skew-symmetry under all 16 one-block generators on complementary "
                      "rank-" + std::to_string(n) + " pairs with l <= 1",
                      [n] {
                          for (int lt = 0; lt <= 2; ++lt)
                              for (const auto& fi : enumerate_indices(Family::F, n, HalfInt(lt)))
                                  for (const auto& gi : enumerate_indices(Family::Gp, n, HalfInt(lt)))
                                      for (const auto& x : one_block_generators()) {
                                          GaussianRational s =
                                              bilinear_pairing(act_algebra(x, basis_fn(fi)),
                                                               basis_fn(gi)) +
                                              bilinear_pairing(basis_fn(fi),
                                                               act_algebra(x, basis_fn(gi)));
                                          if (!s.is_zero())
                                              return fail("skew-symmetry failed at " + fi.str() +
                                                          " / " + gi.str());
                                      }
                          return ok();
                      }});
    cs.push_back({"lie", "lie.sigma",
                  "the conjugation map is an involution exchanging sides, maps the polynomial "
                  "left space into the right one, and intertwines the off-diagonal block actions "
                  "up to block adjoint",
                  [] {
                      GaussianRational i = GaussianRational::i();
                      for (int n = 1; n <= 2; ++n)
                          for (int lt = 0; lt <= 2; ++lt)
                              for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(lt))) {
                                  TensorFn f = basis_fn(bi);
                                  TensorFn sf = conj_dagger(f);
                                  if (sf.side != Side::Row || conj_dagger(sf) != f)
                                      return fail("involution failed");
                                  if (!is_n_regular(sf)) return fail("image not right-regular");
                                  for (int k = 0; k < 4; ++k)
                                      for (int im = 0; im < 2; ++im) {
                                          Biquaternion b = Biquaternion::unit(k);
                                          if (im) b = i * b;
                                          if (conj_dagger(act_algebra(GlElement::b_block(b), f)) !=
                                              act_algebra(GlElement::b_block(adjoint(b)), sf))
                                              return fail("B-block intertwining failed");
                                          if (conj_dagger(act_algebra(GlElement::c_block(b), f)) !=
                                              act_algebra(GlElement::c_block(adjoint(b)), sf))
                                              return fail("C-block intertwining failed");
                                      }
                              }
                      return ok();
                  }});
    cs.push_back({"lie", "lie.group",
                  "group elements: diagonal identity acts trivially, inversion exchanges the "
                  "polynomial and decaying spaces with square the identity, translation shifts "
                  "the argument of polynomials",
                  [] {
                      for (int n = 1; n <= 2; ++n)
                          for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(1))) {
                              TensorFn f = basis_fn(bi);
                              if (act_diagonal(Biquaternion::one(), Biquaternion::one(), f) != f)
                                  return fail("diagonal identity failed");
                              TensorFn inv = act_inversion(f);
                              int d;
                              if (!is_n_regular(inv) || !is_homogeneous(inv, &d) ||
                                  d != -(bi.l.twice + n + 2))
                                  return fail("inversion image wrong at " + bi.str());
                              if (act_inversion(inv) != f) return fail("inversion not involutive");
                              Biquaternion b = GaussianRational(1, 2) * Biquaternion::unit(2);
                              TensorFn tr = act_translation(b, f);
                              Biquaternion p = GaussianRational(1, 3) * Biquaternion::one();
                              if (!(tr.evaluate(p) == f.evaluate(p + b)))
                                  return fail("translation mismatch");
                              if (!is_n_regular(tr)) return fail("translation broke regularity");
                          }
                      return ok();
                  }});
}

void add_ktypes_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    for (int n : clamp_n(cfg.n_range, 3))
        cs.push_back({"ktypes", "ktypes.dims.n" + std::to_string(n),
                      "each degree block of the four rank-" + std::to_string(n) + " spaces "
                      "spans exactly (2l+1)(2l+n+1) dimensions for l <= 2, and the degree "
                      "supports are {2l} resp. {-(2l+n+2)}",
                      [n] {
                          for (int lt = 0; lt <= 4; ++lt)
                              for (Family fam : kAllFamilies) {
                                  std::vector<TensorFn> block;
                                  for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt)))
                                      block.push_back(basis_fn(bi));
                                  int want = (lt + 1) * (lt + n + 1);
                                  if (span_dimension(block) != want)
                                      return fail("dimension mismatch at l twice " +
                                                  std::to_string(lt));
                                  int expect = (fam == Family::F || fam == Family::G)
                                                   ? lt
                                                   : -(lt + n + 2);
                                  for (const auto& v : block) {
                                      int d;
                                      if (!is_homogeneous(v, &d) || d != expect)
                                          return fail("support mismatch");
                                  }
                              }
                          return ok();
                      }});
    cs.push_back({"ktypes", "ktypes.torus",
                  "the diagonal torus element diag(1, diag(u, u^-1)) with u = 3/5 + 4/5 i acts on "
                  "the extreme-index vector of each polynomial block by u^(2l+n)",
                  [] {
                      GaussianRational u(mpq_class(3, 5), mpq_class(4, 5));
                      Biquaternion d(u, {}, {}, u.inverse());
                      for (int n = 1; n <= 2; ++n)
                          for (int lt = 0; lt <= 2; ++lt) {
                              TensorFn v = F_basis(n, HalfInt(lt), HalfInt(-(lt + n)), HalfInt(-lt));
                              TensorFn w = act_diagonal(Biquaternion::one(), d, v);
                              GaussianRational expect(1);
                              for (int j = 0; j < lt + n; ++j) expect *= u;
                              if (w != expect * v) return fail("weight mismatch");
                          }
                      return ok();
                  }});
    cs.push_back({"ktypes", "ktypes.generation",
                  "every basis vector of each implemented degree block is moved to a nonzero "
                  "vector of the adjacent blocks by some one-block generator (both directions, "
                  "when the adjacent block is nonempty)",
                  [] {
                      auto bgens = [] {
                          std::vector<GlElement> out;
                          for (int k = 0; k < 4; ++k)
                              out.push_back(GlElement::b_block(Biquaternion::unit(k)));
                          return out;
                      }();
                      auto cgens = [] {
                          std::vector<GlElement> out;
                          for (int k = 0; k < 4; ++k)
                              out.push_back(GlElement::c_block(Biquaternion::unit(k)));
                          return out;
                      }();
                      for (int n = 1; n <= 2; ++n)
                          for (Family fam : kAllFamilies)
                              for (int lt = 0; lt <= 2; ++lt)
                                  for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt))) {
                                      TensorFn v = basis_fn(bi);
                                      bool plain = fam == Family::F || fam == Family::G;
                                      // downward: degree-lowering block
                                      bool need_down = !plain || lt > 0;
                                      if (need_down) {
                                          bool hit = false;
                                          for (const auto& x : bgens)
                                              if (!act_algebra(x, v).is_zero()) hit = true;
                                          if (!hit) return fail("no downward image at " + bi.str());
                                      }
                                      // upward: degree-raising block
                                      bool need_up = plain || lt > 0;
                                      if (need_up) {
                                          bool hit = false;
                                          for (const auto& x : cgens)
                                              if (!act_algebra(x, v).is_zero()) hit = true;
                                          if (!hit) return fail("no upward image at " + bi.str());
                                      }
                                      // vacuous edges: lowest primed block raised by C stays in
                                      // the space; lowest plain block lowered by B gives zero
                                      if (plain && lt == 0)
                                          for (const auto& x : bgens)
                                              if (!act_algebra(x, v).is_zero())
                                                  return fail("constant lowered to nonzero");
                                  }
                      return ok();
                  }});
}

void add_unitary_checks(std::vector<Check>& cs, const SuiteConfig& cfg) {
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"unitary", "unitary.gram.n" + std::to_string(n),
                      "rank-" + std::to_string(n) + " Gram matrices per degree block (l <= 1) are "
                      "Hermitian and definite: positive on the polynomial spaces, with the sign "
                      "of the degree-shift eigenvalue product on the decaying ones",
                      [n] {
                          for (Family fam : kAllFamilies)
                              for (int lt = 0; lt <= 2; ++lt) {
                                  std::vector<TensorFn> block;
                                  for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt)))
                                      block.push_back(basis_fn(bi));
                                  bool row = fam == Family::G || fam == Family::Gp;
                                  bool plain = fam == Family::F || fam == Family::G;
                                  size_t m = block.size();
                                  std::vector<std::vector<GaussianRational>> gram(
                                      m, std::vector<GaussianRational>(m));
                                  for (size_t i = 0; i < m; ++i)
                                      for (size_t j = 0; j < m; ++j)
                                          gram[i][j] = row ? inner_product_G(block[i], block[j])
                                                           : inner_product_F(block[i], block[j]);
                                  for (size_t i = 0; i < m; ++i)
                                      for (size_t j = 0; j < m; ++j)
                                          if (gram[i][j] != gram[j][i].conj())
                                              return fail("not Hermitian");
                                  int sign = 1;
                                  if (!plain) {
                                      int d = -(lt + n + 2);
                                      for (int q = 2; q <= n; ++q)
                                          if (d + q < 0) sign = -sign;
                                  }
                                  // leading principal minors of sign * gram must be positive
                                  for (size_t k = 1; k <= m; ++k) {
                                      std::vector<std::vector<GaussianRational>> sub(
                                          k, std::vector<GaussianRational>(k));
                                      for (size_t i = 0; i < k; ++i)
                                          for (size_t j = 0; j < k; ++j)
                                              sub[i][j] = gr_int(sign) * gram[i][j];
                                      GaussianRational det = exact_det(sub);
                                      if (!det.is_real() || !(det.re > 0))
                                          return fail("minor not positive at size " +
                                                      std::to_string(k));
                                  }
                              }
                          return ok();
                      }});
    for (int n : clamp_n(cfg.n_range, 2))
        cs.push_back({"unitary", "unitary.invariance.n" + std::to_string(n),
                      "all 16 real generators of the unitary real form act skew-symmetrically "
                      "for the rank-" + std::to_string(n) + " inner products through l = 1",
                      [n] {
                          for (int lt = 0; lt <= 2; ++lt) {
                              auto idx = enumerate_indices(Family::F, n, HalfInt(lt));
                              auto idg = enumerate_indices(Family::G, n, HalfInt(lt));
                              for (size_t i = 0; i < idx.size(); ++i)
                                  for (size_t j = i; j < idx.size(); ++j)
                                      for (const auto& x : u22_generators()) {
                                          TensorFn f1 = basis_fn(idx[i]), f2 = basis_fn(idx[j]);
                                          GaussianRational s =
                                              inner_product_F(act_algebra(x, f1), f2) +
                                              inner_product_F(f1, act_algebra(x, f2));
                                          if (!s.is_zero()) return fail("left-side invariance failed");
                                          TensorFn g1 = basis_fn(idg[i]), g2 = basis_fn(idg[j]);
                                          GaussianRational t =
                                              inner_product_G(act_algebra(x, g1), g2) +
                                              inner_product_G(g1, act_algebra(x, g2));
                                          if (!t.is_zero())
                                              return fail("right-side invariance failed");
                                      }
                          }
                          return ok();
                      }});
}

} // namespace

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names = {"algebra", "tensor", "diffops", "basis",
                                                   "kernel",  "pairing", "reproduce", "lie",
                                                   "ktypes",  "unitary"};
    return names;
}

std::vector<Check> build_checks(const SuiteConfig& cfg) {
    std::vector<Check> cs;
    auto selected = [&cfg](const std::string& s) {
        if (cfg.suites.empty()) return true;
        return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
    };
    if (selected("algebra")) add_algebra_checks(cs, cfg);
    if (selected("tensor")) add_tensor_checks(cs, cfg);
    if (selected("diffops")) add_diffops_checks(cs, cfg);
    if (selected("basis")) add_basis_checks(cs, cfg);
    if (selected("kernel")) add_kernel_checks(cs, cfg);
    if (selected("pairing")) add_pairing_checks(cs, cfg);
    if (selected("reproduce")) add_reproduce_checks(cs, cfg);
    if (selected("lie")) add_lie_checks(cs, cfg);
    if (selected("ktypes")) add_ktypes_checks(cs, cfg);
    if (selected("unitary")) add_unitary_checks(cs, cfg);
    std::sort(cs.begin(), cs.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return cs;
}

RunOutcome run_suites(const SuiteConfig& cfg) {
    for (const auto& s : cfg.suites)
        if (std::find(all_suite_names().begin(), all_suite_names().end(), s) ==
            all_suite_names().end())
            throw IndexRangeError("unknown suite: " + s);
    for (int n : cfg.n_range)
        if (n < 1 || n > kMaxRank)
            throw IndexRangeError("rank out of range: " + std::to_string(n));

    std::vector<Check> checks = build_checks(cfg);
    std::vector<CheckResult> results(checks.size());

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("NREGULAR_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(checks.size() ? checks.size() : 1));

    auto t0 = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            try {
                results[i] = checks[i].run();
            } catch (const std::exception& e) {
                results[i] = fail(std::string("exception: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    RunOutcome out;
    ordered_json report;
    report["config"] = {{"suites", cfg.suites.empty() ? all_suite_names() : cfg.suites},
                        {"n_range", cfg.n_range},
                        {"l_max", cfg.l_max.str()},
                        {"seed", cfg.seed}};
    report["checks"] = ordered_json::array();
    std::ostringstream text;
    for (size_t i = 0; i < checks.size(); ++i) {
        bool pass = results[i].pass;
        pass ? ++out.passed : ++out.failed;
        ordered_json c;
        c["id"] = checks[i].id;
        c["statement"] = checks[i].statement;
        c["status"] = pass ? "pass" : "fail";
        if (!pass) c["witness"] = results[i].witness;
        report["checks"].push_back(c);
        text << (pass ? "PASS" : "FAIL") << "  " << checks[i].id;
        if (!pass) text << "\n      witness: " << results[i].witness;
        text << "\n";
    }
    report["totals"] = {{"passed", out.passed}, {"failed", out.failed}};
    out.json = report.dump(2) + "\n";
    text << out.passed << " passed, " << out.failed << " failed (" << ms << " ms)\n";
    out.text = text.str();
    return out;
}

std::optional<std::string> explain(const std::string& id) {
    SuiteConfig cfg; // defaults cover every check id
    for (const auto& c : build_checks(cfg))
        if (c.id == id) {
            std::ostringstream os;
            os << c.id << " [suite " << c.suite << "]\n" << c.statement << "\n"
               << "default parameters: n in {1,2,3}, l_max " << cfg.l_max.str() << ", seed "
               << cfg.seed << "\n";
            return os.str();
        }
    return std::nullopt;
}

HalfInt parse_half(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(2 * std::stoi(s));
        if (s.substr(slash + 1) != "2") throw IndexRangeError("half-integers use denominator 2");
        return HalfInt(std::stoi(s.substr(0, slash)));
    } catch (const IndexRangeError&) {
        throw;
    } catch (const std::exception&) {
        throw IndexRangeError("cannot parse half-integer: " + s);
    }
}

} // namespace nregular
