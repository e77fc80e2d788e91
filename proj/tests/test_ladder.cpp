#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dftnum/eigen_methods.hpp"
#include "dftnum/ladder.hpp"
#include "dftnum/precision.hpp"
#include "reference_values.hpp"

using namespace dftnum;
using M = Matrix<double>;
using V = Vector<double>;

namespace {
M named(MatrixKind k) { return build_named_matrix<double>(k, 5); }
}  // namespace

TEST_CASE("ground state") {
  const auto k = FifthRootConstants<double>::make();
  const V raw = V::from_real({k.xi0, k.xi1, 1, 1, k.xi1});
  CHECK(std::abs(norm(raw) - ref::f0_raw_norm) < 1e-14);

  const auto g = ground_state<double>();
  CHECK(g.n == 0);
  CHECK(g.lambda == 0.0);
  CHECK(g.dft_exponent == 0);
  CHECK(g.parity == Parity::symmetric);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(g.vector[i].re - ref::f0[i]) < 1e-15);
    CHECK(g.vector[i].im == 0.0);
  }
  CHECK(g.vector[0].re > 0);
  CHECK(norm(apply(named(MatrixKind::lowering), g.vector)) <= 1e-12);
}

TEST_CASE("closed-form spectrum") {
  const auto s = closed_form_spectrum<double>();
  for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(s.lambda[n] - ref::lambda[n]) < 1e-14);
  CHECK(std::abs(s.sum() - 10.0) <= 1e-12);
  CHECK(std::abs(s.sum() - trace(named(MatrixKind::number)).re) <= 1e-12);
  const auto k = FifthRootConstants<double>::make();
  CHECK(std::abs(s.lambda[2] + s.lambda[3] - k.s[1] * k.s[1]) <= 1e-12);
  CHECK(std::abs(s.lambda[1] + s.lambda[4] - (7 - k.c[1])) <= 1e-12);
  // distinct, nonnegative, and not monotone in n
  std::array<double, 5> sorted = s.lambda;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sorted[0] == 0.0);
  CHECK(s.lambda[3] < s.lambda[4]);
  CHECK(s.lambda[4] < s.lambda[2]);
  CHECK(s.lambda[2] < s.lambda[1]);
}

TEST_CASE("closed-form spectrum at 40 digits") {
  ExtendedPrecisionScope scope(40);
  const auto s = closed_form_spectrum<Extended>();
  CHECK(abs(s.lambda[1] - Extended(ref::lambda1_40)) < Extended(1e-38));
  CHECK(abs(mixing_eta<Extended>() - Extended(ref::eta_40)) < Extended(1e-38));
  CHECK(abs(s.sum() - Extended(10)) < Extended(1e-38));
}

TEST_CASE("raise") {
  const auto spec = closed_form_spectrum<double>();
  const auto k = FifthRootConstants<double>::make();
  const auto r0 = raise(ground_state<double>());
  CHECK(r0.next.n == 1);
  CHECK(r0.next.parity == Parity::antisymmetric);
  CHECK(std::abs(r0.norm_factor - ref::eta * std::sqrt(ref::lambda[1])) <= 1e-11);
  const V dir = normalize(V::from_real({0, k.xi1, k.c[1], -k.c[1], -k.xi1}));
  CHECK(norm(subtract(r0.next.vector, dir)) < 1e-14);

  const auto r1 = raise(r0.next);
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(r1.next.vector[i].re - ref::f2[i]) < 1e-14);
  CHECK(std::abs(r1.norm_factor - std::sqrt(spec.lambda[2])) <= 1e-11);

  const auto r2 = raise(r1.next);
  CHECK(std::abs(r2.norm_factor - ref::sqrt_lambda3) <= 1e-11);
  const auto r3 = raise(r2.next);
  CHECK(std::abs(r3.norm_factor - std::sqrt(spec.lambda[4])) <= 1e-11);
  CHECK(r3.next.n == 4);
  CHECK_THROWS_AS(raise(r3.next), std::out_of_range);
}

TEST_CASE("ladder eigensystem invariants") {
  const auto sys = ladder_eigensystem<double>();
  const M n5 = named(MatrixKind::number);
  const M phi = dft_matrix<double>(5);
  const M p = named(MatrixKind::reflection);
  std::vector<V> fs;
  for (int n = 0; n < 5; ++n) {
    CAPTURE(n);
    const auto& pair = sys.pairs[static_cast<std::size_t>(n)];
    CHECK(pair.n == n);
    CHECK(pair.dft_exponent == n);
    CHECK(std::abs(norm(pair.vector) - 1) <= 1e-12);
    CHECK(norm(subtract(apply(n5, pair.vector), scale(pair.lambda, pair.vector))) <= 1e-11);
    CHECK(norm(subtract(apply(phi, pair.vector), scale(i_pow<double>(n), pair.vector))) <= 1e-11);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    CHECK(norm(subtract(apply(p, pair.vector), scale(sign, pair.vector))) <= 1e-12);
    CHECK(std::abs(pair.lambda - ref::lambda[n]) <= 1e-12);
    fs.push_back(pair.vector);
  }
  CHECK(frobenius_norm(subtract(gram(fs), M::identity(5))) <= 1e-12);

  M recon(5), dft_recon(5);
  for (int n = 0; n < 5; ++n) {
    recon = add(recon, scale(sys.spectrum.lambda[static_cast<std::size_t>(n)], outer(sys.f(n), sys.f(n))));
    dft_recon = add(dft_recon, scale(i_pow<double>(n), outer(sys.f(n), sys.f(n))));
  }
  CHECK(frobenius_norm(subtract(recon, n5)) <= 1e-11);
  CHECK(frobenius_norm(subtract(dft_recon, phi)) <= 1e-11);
}

TEST_CASE("ladder vectors match the printed directions") {
  const auto k = FifthRootConstants<double>::make();
  const double s1 = k.s[1], s2 = k.s[2], c1 = k.c[1], c2 = k.c[2];
  const auto sys = ladder_eigensystem<double>();
  const V f3 = normalize(V::from_real({0, 1 - s2, c1, -c1, s2 - 1}));
  CHECK(norm(subtract(f3, sys.f(3))) < 1e-14);
  const V f4 = normalize(
      V::from_real({2, c2 - 2 * s1, 2 * s1 - c2 + 2 * c1, 2 * s1 - c2 + 2 * c1, c2 - 2 * s1}));
  CHECK(norm(subtract(f4, sys.f(4))) < 1e-14);
}

TEST_CASE("lowering closes the chain") {
  const auto sys = ladder_eigensystem<double>();
  const M a = named(MatrixKind::lowering);
  for (int n = 2; n <= 4; ++n)
    CHECK(norm(subtract(apply(a, sys.f(n)),
                        scale(std::sqrt(ref::lambda[n]), sys.f(n - 1)))) <= 1e-11);
  const double phi = mixing_angle<double>();
  const V mix = subtract(scale(std::cos(phi), sys.f(0)), scale(std::sin(phi), sys.f(4)));
  CHECK(norm(subtract(apply(a, sys.f(1)), scale(std::sqrt(ref::lambda[1]), mix))) <= 1e-11);
}

TEST_CASE("power formula") {
  const auto sys = ladder_eigensystem<double>();
  for (int n = 1; n <= 4; ++n) CHECK(max_abs(subtract(power_formula<double>(n), sys.f(n))) <= 1e-10);
  CHECK_THROWS_AS(power_formula<double>(0), std::out_of_range);
  CHECK_THROWS_AS(power_formula<double>(5), std::out_of_range);
  const double pref = 1 / (mixing_eta<double>() * std::sqrt(ref::lambda[1] * ref::lambda[2]));
  CHECK(std::abs(pref - ref::power_prefactor_n2) < 1e-14);
}

TEST_CASE("mixing data") {
  const auto m = mixing<double>();
  CHECK(std::abs(m.eta - ref::eta) < 1e-15);
  CHECK(std::abs(m.phi - ref::phi_rad) < 1e-15);
  CHECK(std::abs(m.phi * 180 / M_PI - 42.13) <= 0.005);
  CHECK(std::abs(m.eta - std::cos(m.phi)) <= 1e-12);

  const auto sys = ladder_eigensystem<double>();
  const M ns = named(MatrixKind::partner_number);
  for (std::size_t n = 0; n < 5; ++n)
    CHECK(norm(subtract(apply(ns, m.g[n]), scale(ref::lambda[n], m.g[n]))) <= 1e-11);
  CHECK(m.g[2] == sys.f(1));
  CHECK(m.g[3] == sys.f(2));
  CHECK(m.g[4] == sys.f(3));
}

TEST_CASE("recurrences") {
  const auto r = recurrence_residuals<double>();
  CHECK(r.at("three_term_n3") <= 1e-12);
  CHECK(r.at("three_term_n2") <= 1e-12);
  CHECK(r.at("four_term_n1") <= 1e-12);
  CHECK(r.at("lowering_f1_mixture") <= 1e-11);
  CHECK(r.at("lowering_f1_rotation") <= 1e-11);
}

TEST_CASE("newton ladder") {
  const auto nl = newton_ladder<double>();
  const auto sys = ladder_eigensystem<double>();
  const auto bs = split<double>(SplitVariant::symmetric).sparse.to_dense();
  const M x = named(MatrixKind::position);

  CHECK(nl.polynomials[0] == M::identity(5));
  CHECK(max_abs(subtract(nl.polynomials[1], add(x, bs))) == 0.0);
  CHECK(nl.d[0] == 1.0);
  for (std::size_t n = 1; n < 5; ++n) CHECK(std::abs(nl.d[n] - ref::d[n]) < 1e-13);
  for (int n = 0; n <= 4; ++n)
    CHECK(max_abs(subtract(nl.eigenvector(n, sys.f(0)), sys.f(n))) <= 1e-10);
  CHECK_THROWS_AS(nl.eigenvector(5, sys.f(0)), std::out_of_range);

  const V p2 = apply(nl.polynomials[2], sys.f(0));
  const V p3 = apply(nl.polynomials[3], sys.f(0));
  CHECK(abs(inner_product(p2, p3)) <= 1e-10 * nl.d[2] * nl.d[3]);
  CHECK(std::abs(inner_product(p2, p2).re - nl.d[2] * nl.d[2]) <= 1e-10 * nl.d[2] * nl.d[2]);
  CHECK(std::abs(nl.d[2] - 2 * ref::eta * std::sqrt(ref::lambda[1] * ref::lambda[2])) < 1e-13);
}

TEST_CASE("all four methods give the same eigensystem") {
  const auto ladder = eigensystem_by_method<double>(EigenMethod::ladder);
  for (auto m : {EigenMethod::power, EigenMethod::newton, EigenMethod::oracle}) {
    CAPTURE(static_cast<int>(m));
    const auto other = eigensystem_by_method<double>(m);
    for (int n = 0; n < 5; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      CHECK(max_abs(subtract(other.f(n), ladder.f(n))) <= 1e-10);
      CHECK(std::abs(other.pairs[idx].lambda - ladder.pairs[idx].lambda) <= 1e-10);
      CHECK(other.pairs[idx].dft_exponent == n);
      CHECK(other.pairs[idx].parity == ladder.pairs[idx].parity);
    }
  }
}

TEST_CASE("ladder in extended precision") {
  ExtendedPrecisionScope scope(50);
  const auto sys = ladder_eigensystem<Extended>();
  const auto number = build_named_matrix<Extended>(MatrixKind::number, 5);
  for (int n = 0; n < 5; ++n) {
    const auto& pr = sys.pairs[static_cast<std::size_t>(n)];
    CHECK(norm(subtract(apply(number, pr.vector), scale(sys.spectrum.lambda[static_cast<std::size_t>(n)], pr.vector))) <
          Extended(1e-47));
  }
  for (const auto& [name, r] : recurrence_residuals(sys)) {
    CAPTURE(name);
    CHECK(r < Extended(1e-47));
  }
}
