#include "dftnum/claims.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "dftnum/constants.hpp"
#include "dftnum/ladder.hpp"
#include "dftnum/linalg.hpp"
#include "dftnum/operators.hpp"
#include "dftnum/oracle.hpp"
#include "dftnum/sparse_split.hpp"

namespace dftnum {

namespace {

using K = ClaimKind;

// clang-format off
const std::vector<ClaimSpec> kRegistry = {
  {"dft_unitary", "Phi5 Phi5^H = I", K::rounding, 1e-12, false},
  {"dft_fourth_power", "Phi5^4 = I", K::rounding, 1e-12, false},
  {"dft_commutes_reflection", "[Phi5, Pd] = 0", K::rounding, 1e-12, false},
  {"reflection_factorization", "Pd = C5^T J5 = J5 C5", K::exact, 0, false},
  {"intertwining_A", "A5 Phi5 = i Phi5 A5", K::rounding, 1e-12, false},
  {"intertwining_At", "A5^T Phi5 = -i Phi5 A5^T", K::rounding, 1e-12, false},
  {"number_commutes_dft", "[N5, Phi5] = 0", K::rounding, 1e-12, false},
  {"position_anticommutes_reflection", "Pd X5 + X5 Pd = 0", K::rounding, 1e-12, false},
  {"derivative_anticommutes_reflection", "Pd D5 + D5 Pd = 0", K::exact, 0, false},
  {"position_two_diagonal", "X5 eps_n = i (eps_{n-1} - eps_{n+1})", K::rounding, 1e-12, false},
  {"momentum_two_diagonal", "Y5 e_n = i (e_{n+1} - e_{n-1})", K::rounding, 1e-12, false},
  {"momentum_eigenvectors", "Y5 eps_n = s_n eps_n", K::rounding, 1e-12, false},
  {"unitary_equivalence", "Y5 = -i D5 = Phi5 X5 Phi5^H", K::rounding, 1e-12, false},
  {"phi_x_closed_form", "Phi5 X5 = s2^-1 [0, q^k, c1 q^2k, -c1 q^3k, -q^4k]_k, traceless", K::rounding, 1e-14, false},
  {"split_symmetric_reconstruction", "Phi5 X5 = s2^-1 As + i Bs", K::rounding, 1e-14, false},
  {"split_antisymmetric_reconstruction", "Phi5 X5 = s2^-1 (Aa + Ba)", K::rounding, 1e-14, false},
  {"split_symmetric_annihilation", "As (a, b, c, c, b)^T = 0", K::rounding, 1e-13, false},
  {"split_antisymmetric_annihilation", "Aa (0, b, c, -c, -b)^T = 0", K::rounding, 1e-13, false},
  {"split_symmetric_sparsity", "Bs has 8 nonzero entries", K::exact, 0, false},
  {"split_antisymmetric_sparsity", "Ba has 10 nonzero entries", K::exact, 0, false},
  {"sparse_rules", "A5 f, A5^T f = 2^-1/2 (X5 +- sparse) f on each DFT class", K::rounding, 1e-12, false},
  {"ground_state_conditions", "x0 = s1 x1 + x2, x1 = (1 + s2) x2", K::rounding, 1e-14, false},
  {"ground_state_annihilated", "A5 f0 = 0", K::rounding, 1e-12, false},
  {"xi1_identity", "c2 xi1^2 = c1 - 2 s1 xi1", K::rounding, 1e-14, false},
  {"fifth_root_identities", "q^5 = 1, s1 s2 = sqrt5, c1 - c2 = sqrt5, c1 c2 = -1, c1 + c2 = -1", K::rounding, 1e-14, false},
  {"raised_ground_state_form", "A5^T (xi0, xi1, 1, 1, xi1)^T = sqrt2 s1 (0, xi1, c1, -c1, -xi1)^T", K::rounding, 1e-12, false},
  {"dft_eigenvectors", "Phi5 f_n = i^n f_n", K::rounding, 1e-11, false},
  {"dft_eigendecomposition", "sum_n i^n f_n f_n^H = Phi5", K::rounding, 1e-11, false},
  {"eigenvalue_equations", "N5 f_n = lambda_n f_n (closed-form lambda_n)", K::rounding, 1e-11, false},
  {"ladder_eigenvalues", "|A5 f_n|^2 = lambda_n", K::rounding, 1e-12, false},
  {"spectrum_vs_oracle", "closed-form lambda_n = Jacobi eigenvalues of N5", K::rounding, 1e-11, false},
  {"spectrum_trace", "sum_n lambda_n = tr N5", K::rounding, 1e-12, false},
  {"spectrum_sum_rules", "lambda2 + lambda3 = s1^2, lambda1 + lambda4 = 7 - c1", K::rounding, 1e-12, false},
  {"eigenvectors_orthonormal", "(f_k, f_l) = delta_kl", K::rounding, 1e-12, false},
  {"eigenvectors_vs_oracle", "f_n = Jacobi eigenvector of lambda_n up to phase", K::rounding, 1e-10, false},
  {"number_reconstruction", "sum_n lambda_n f_n f_n^H = N5", K::rounding, 1e-11, false},
  {"printed_ladder_vectors", "f1, f2, f3 printed closed forms equal the ladder vectors", K::rounding, 1e-12, false},
  {"uniform_forms", "uniform unit-length forms of f0, f1, f2, f3", K::rounding, 1e-12, true},
  {"f4_printed_prefactor", "f4 = (lambda2 lambda4)^-1/2 (2, c2 - 2s1, 2s1 - c2 + 2c1, ...)^T", K::rounding, 1e-12, true},
  {"intermediate_u", "A5 f1 = u, Phi5 u = u, A5^T u = lambda1 f1", K::rounding, 1e-12, false},
  {"intermediate_v", "A5^T f3 = v, Phi5 v = v, |v| = sqrt(lambda4)", K::rounding, 1e-12, false},
  {"lowering_v_prefactor", "A5 v = 2^-1/2 (7 - c1 - c1 s2) f3", K::rounding, 1e-12, true},
  {"eta_closed_forms", "eta = 4/sqrt(21 - 5c2) = cos phi, sin phi = s1^2/sqrt(21 - 5c2)", K::rounding, 1e-12, false},
  {"phi_closed_forms", "arctan(s1^2/4) = arctan((5 + sqrt5)/8)", K::rounding, 1e-12, false},
  {"phi_quoted_degrees", "phi = 42.13 degrees", K::quoted, 0.005, false},
  {"eta_printed_8s2", "eta = 8 s2 / sqrt(lambda1 lambda4)", K::rounding, 1e-12, true},
  {"partner_spectrum", "spec(A5 A5^T) = spec(A5^T A5)", K::rounding, 1e-11, false},
  {"partner_eigenvectors", "A5 A5^T g_n = lambda_n g_n with g0, g1 rotated by phi", K::rounding, 1e-11, false},
  {"power_formula", "f_n = (eta prod sqrt(lambda_k))^-1 (A5^T)^n f0", K::rounding, 1e-10, false},
  {"raise_norm_factors", "|A5^T f0| = eta sqrt(lambda1), |A5^T f_n| = sqrt(lambda_{n+1})", K::rounding, 1e-11, false},
  {"three_term_recurrence_n3", "sqrt(2 lambda4) f4 + sqrt(2 lambda3) f2 = 2 X5 f3", K::rounding, 1e-12, false},
  {"three_term_recurrence_n2", "sqrt(2 lambda3) f3 + sqrt(2 lambda2) f1 = 2 X5 f2", K::rounding, 1e-12, false},
  {"four_term_recurrence", "sqrt(2 lambda2) f2 + sqrt(2 lambda1) eta (f0 + sqrt5 c2/4 f4) = 2 X5 f1", K::rounding, 1e-12, false},
  {"lowering_f1_mixture", "A5 f1 = sqrt(lambda1)(cos phi f0 - sin phi f4) = sqrt(lambda1) eta (f0 + sqrt5 c2/4 f4)", K::rounding, 1e-11, false},
  {"lowering_chain", "A5 f_n = sqrt(lambda_n) f_{n-1}, n = 2, 3, 4", K::rounding, 1e-11, false},
  {"newton_eigenvectors", "f_n = d_n^-1 P_n(X5) f0", K::rounding, 1e-10, false},
  {"newton_normalizers", "d1 = eta sqrt(2 l1), d2 = 2 eta sqrt(l1 l2), d3 = eta sqrt(8 l1 l2 l3), d4 = 4 eta sqrt(l1 l2 l3 l4)", K::rounding, 1e-12, false},
  {"newton_orthogonality", "(P_k f0, P_l f0) = d_k^2 delta_kl", K::rounding, 1e-10, false},
  {"newton_nodes", "M0 = -M2 = -Bs, M1 = -M3 = s2^-1 Ba", K::exact, 0, false},
};
// clang-format on

template <typename T>
struct Outcome {
  T residual;
  std::optional<T> corrected;
  std::string note;
};

template <typename T>
T max_of(std::initializer_list<T> xs) {
  T m = *xs.begin();
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

template <typename T>
std::map<std::string, Outcome<T>> evaluate(int trials, std::uint64_t seed) {
  using std::abs;
  using std::atan;
  using std::cos;
  using std::sin;
  using std::sqrt;
  using M = Matrix<T>;
  using V = Vector<T>;

  const auto k = FifthRootConstants<T>::make();
  const T s1 = k.s[1], s2 = k.s[2], c1 = k.c[1], c2 = k.c[2], xi0 = k.xi0, xi1 = k.xi1;
  const Complex<T> iu = Complex<T>::i();

  const M phi = dft_matrix<T>(5);
  const M phih = conjugate_transpose(phi);
  const M eye = M::identity(5);
  const M C = build_named_matrix<T>(MatrixKind::circulant, 5);
  const M J = build_named_matrix<T>(MatrixKind::backward_identity, 5);
  const M P = build_named_matrix<T>(MatrixKind::reflection, 5);
  const M X = build_named_matrix<T>(MatrixKind::position, 5);
  const M D = build_named_matrix<T>(MatrixKind::derivative, 5);
  const M Y = build_named_matrix<T>(MatrixKind::momentum, 5);
  const M A = build_named_matrix<T>(MatrixKind::lowering, 5);
  const M At = build_named_matrix<T>(MatrixKind::raising, 5);
  const M N = build_named_matrix<T>(MatrixKind::number, 5);
  const M Ns = build_named_matrix<T>(MatrixKind::partner_number, 5);

  const auto sys = ladder_eigensystem<T>();
  const auto& lam = sys.spectrum.lambda;
  const T eta = mixing_eta<T>();
  const T phi_angle = mixing_angle<T>();
  auto f = [&](int n) -> const V& { return sys.f(n); };

  std::map<std::string, Outcome<T>> out;
  auto put = [&](const std::string& id, T r) { out[id] = Outcome<T>{r, std::nullopt, {}}; };
  auto put_corrected = [&](const std::string& id, T printed, T corrected, std::string note) {
    out[id] = Outcome<T>{printed, corrected, std::move(note)};
  };

  // -- operator identities --------------------------------------------------
  put("dft_unitary", frobenius_norm(subtract(multiply(phi, phih), eye)));
  put("dft_fourth_power", frobenius_norm(subtract(power(phi, 4), eye)));
  put("dft_commutes_reflection", frobenius_norm(commutator(phi, P)));
  put("reflection_factorization",
      max_of<T>({frobenius_norm(subtract(P, multiply(transpose(C), J))),
                 frobenius_norm(subtract(P, multiply(J, C)))}));
  put("intertwining_A", frobenius_norm(subtract(multiply(A, phi), scale(iu, multiply(phi, A)))));
  put("intertwining_At", frobenius_norm(add(multiply(At, phi), scale(iu, multiply(phi, At)))));
  put("number_commutes_dft", frobenius_norm(commutator(N, phi)));
  put("position_anticommutes_reflection", frobenius_norm(anticommutator(P, X)));
  put("derivative_anticommutes_reflection", frobenius_norm(anticommutator(P, D)));

  {
    T two_diag_x(0), two_diag_y(0), y_eig(0);
    for (std::size_t n = 0; n < 5; ++n) {
      const std::size_t prev = (n + 4) % 5, next = (n + 1) % 5;
      const V eps = fourier_basis_vector<T>(5, n);
      const V rhs_x = scale(iu, subtract(fourier_basis_vector<T>(5, prev),
                                         fourier_basis_vector<T>(5, next)));
      two_diag_x = max_of<T>({two_diag_x, norm(subtract(apply(X, eps), rhs_x))});
      const V rhs_y = scale(iu, subtract(V::basis(5, next), V::basis(5, prev)));
      two_diag_y = max_of<T>({two_diag_y, norm(subtract(apply(Y, V::basis(5, n)), rhs_y))});
      y_eig = max_of<T>({y_eig, norm(subtract(apply(Y, eps), scale(k.s[n], eps)))});
    }
    put("position_two_diagonal", two_diag_x);
    put("momentum_two_diagonal", two_diag_y);
    put("momentum_eigenvectors", y_eig);
  }
  put("unitary_equivalence", frobenius_norm(subtract(Y, multiply(multiply(phi, X), phih))));

  // -- splitting of Phi5 X5 -------------------------------------------------
  const M px = phi_x_product<T>();
  {
    T first_col(0);
    for (std::size_t r = 0; r < 5; ++r) first_col = max_of<T>({first_col, abs(px(r, 0))});
    put("phi_x_closed_form", max_of<T>({max_abs(subtract(px, phi_x_closed_form<T>())),
                                        abs(trace(px)), first_col}));
  }
  const auto sym = split<T>(SplitVariant::symmetric);
  const auto anti = split<T>(SplitVariant::antisymmetric);
  put("split_symmetric_reconstruction", max_abs(subtract(px, sym.reconstruct())));
  put("split_antisymmetric_reconstruction", max_abs(subtract(px, anti.reconstruct())));
  {
    TrialGenerator gen(seed);
    T worst_s(0), worst_a(0);
    for (int t = 0; t < trials; ++t) {
      const T a(gen.next()), b(gen.next()), c(gen.next());
      const V fs = V::from_real({a, b, c, c, b});
      const V fa = V::from_real({T(0), b, c, -c, -b});
      worst_s = max_of<T>({worst_s, norm(apply(sym.annihilator, fs)) / norm(fs)});
      worst_a = max_of<T>({worst_a, norm(apply(anti.annihilator, fa)) / norm(fa)});
    }
    put("split_symmetric_annihilation", worst_s);
    put("split_antisymmetric_annihilation", worst_a);
  }
  put("split_symmetric_sparsity", abs(T(static_cast<int>(sym.sparse.nonzeros())) - T(8)));
  put("split_antisymmetric_sparsity", abs(T(static_cast<int>(anti.sparse.nonzeros())) - T(10)));
  {
    T worst(0);
    for (int n = 0; n < 5; ++n) {
      const ParityClass cls(n);
      for (auto which : {LadderDirection::raising, LadderDirection::lowering}) {
        const V dense = apply(which == LadderDirection::raising ? At : A, f(n));
        const V sparse = sparse_apply(f(n), cls, which);
        const T scale_ref = max_of<T>({norm(dense), T(1)});
        worst = max_of<T>({worst, norm(subtract(sparse, dense)) / scale_ref});
      }
    }
    put("sparse_rules", worst);
  }

  // -- ground state and constants -------------------------------------------
  {
    const T x0 = f(0)[0].re, x1 = f(0)[1].re, x2 = f(0)[2].re;
    put("ground_state_conditions",
        max_of<T>({abs(x0 - (s1 * x1 + x2)), abs(x1 - (T(1) + s2) * x2), abs(x0 - xi0 * x2),
                   abs(f(0)[3].re - x2), abs(f(0)[4].re - x1)}));
  }
  put("ground_state_annihilated", norm(apply(A, f(0))));
  put("xi1_identity", abs(c2 * xi1 * xi1 - (c1 - T(2) * s1 * xi1)));
  put("fifth_root_identities", k.identity_residuals().max());
  {
    const V raw = V::from_real({xi0, xi1, T(1), T(1), xi1});
    const V lhs = apply(At, raw);
    const V rhs = scale(sqrt(T(2)) * s1, V::from_real({T(0), xi1, c1, -c1, -xi1}));
    put("raised_ground_state_form", norm(subtract(lhs, rhs)) / norm(lhs));
  }

  // -- eigensystem ----------------------------------------------------------
  {
    T dft_res(0), eig_res(0), lam_res(0);
    M decomposition(5), reconstruction(5);
    std::vector<V> fs;
    for (int n = 0; n < 5; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      dft_res = max_of<T>({dft_res, norm(subtract(apply(phi, f(n)), scale(i_pow<T>(n), f(n))))});
      eig_res = max_of<T>({eig_res, norm(subtract(apply(N, f(n)), scale(lam[idx], f(n))))});
      lam_res = max_of<T>({lam_res, abs(sys.pairs[idx].lambda - lam[idx])});
      decomposition = add(decomposition, scale(i_pow<T>(n), outer(f(n), f(n))));
      reconstruction = add(reconstruction, scale(lam[idx], outer(f(n), f(n))));
      fs.push_back(f(n));
    }
    put("dft_eigenvectors", dft_res);
    put("dft_eigendecomposition", frobenius_norm(subtract(decomposition, phi)));
    put("eigenvalue_equations", eig_res);
    put("ladder_eigenvalues", lam_res);
    put("eigenvectors_orthonormal", frobenius_norm(subtract(gram(fs), eye)));
    put("number_reconstruction", frobenius_norm(subtract(reconstruction, N)));
  }

  const auto oracle = hermitian_eigensolver(N);
  {
    std::array<T, 5> sorted = lam;
    std::sort(sorted.begin(), sorted.end());
    T spec_res(0);
    for (std::size_t j = 0; j < 5; ++j)
      spec_res = max_of<T>({spec_res, abs(sorted[j] - oracle.eigenvalues[j])});
    put("spectrum_vs_oracle", spec_res);

    T vec_res(0);
    for (std::size_t n = 0; n < 5; ++n) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < 5; ++j)
        if (abs(oracle.eigenvalues[j] - lam[n]) < abs(oracle.eigenvalues[best] - lam[n]))
          best = j;
      vec_res = max_of<T>(
          {vec_res, eigenvector_match(f(static_cast<int>(n)), oracle.eigenvectors[best])});
    }
    put("eigenvectors_vs_oracle", vec_res);
  }
  put("spectrum_trace", abs(sys.spectrum.sum() - trace(N).re));
  put("spectrum_sum_rules",
      max_of<T>({abs(lam[2] + lam[3] - s1 * s1), abs(lam[1] + lam[4] - (T(7) - c1))}));

  // -- printed closed forms -------------------------------------------------
  {
    const V f1p = scale(T(1) / (T(2) * sqrt(s2 * xi1)), V::from_real({T(0), xi1, c1, -c1, -xi1}));
    const V f2p = scale(T(1) / (T(2) * s2), V::from_real({T(-2) * c1, T(1), T(1), T(1), T(1)}));
    const V f3p = scale(T(1) / (T(2) * sqrt(s2 * (s2 - T(1)))),
                        V::from_real({T(0), T(1) - s2, c1, -c1, s2 - T(1)}));
    put("printed_ladder_vectors",
        max_of<T>({norm(subtract(f1p, f(1))), norm(subtract(f2p, f(2))),
                   norm(subtract(f3p, f(3)))}));
  }
  {
    const std::array<V, 4> raw{
        V::from_real({s1 - T(2) * c2, T(1) + s2, T(1), T(1), T(1) + s2}),
        V::from_real({T(0), s1 - c2, T(1), T(-1), c2 - s1}),
        V::from_real({T(2), c2, c2, c2, c2}),
        V::from_real({T(0), -(s1 + c2), T(1), T(-1), s1 + c2}),
    };
    const std::array<T, 4> printed{T(2) / sqrt(lam[2] * lam[4]), T(1) / sqrt(T(2) * lam[2]),
                                   T(1) / sqrt(lam[2] * lam[3]), T(1) / sqrt(T(2) * lam[3])};
    const std::array<T, 4> corrected{T(1) / (T(2) * sqrt(lam[2] * lam[4])),
                                     T(1) / (T(2) * sqrt(T(2) * lam[2])),
                                     T(-1) / (T(4) * sqrt(lam[2] * lam[3])),
                                     T(1) / (T(2) * sqrt(T(2) * lam[3]))};
    T printed_res(0), corrected_res(0);
    for (int n = 0; n < 4; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      printed_res = max_of<T>({printed_res, norm(subtract(scale(printed[idx], raw[idx]), f(n)))});
      corrected_res =
          max_of<T>({corrected_res, norm(subtract(scale(corrected[idx], raw[idx]), f(n)))});
    }
    put_corrected("uniform_forms", printed_res, corrected_res,
                  "prefactors 1/(2 sqrt(l2 l4)), 1/(2 sqrt(2 l2)), 1/(4 sqrt(l2 l3)), "
                  "1/(2 sqrt(2 l3)) give f0..f3, with a minus sign on the f2 form; printed "
                  "prefactors give norms 4, 2, 4, 2");
  }
  {
    const V raw = V::from_real({T(2), c2 - T(2) * s1, T(2) * s1 - c2 + T(2) * c1,
                                T(2) * s1 - c2 + T(2) * c1, c2 - T(2) * s1});
    const T printed = T(1) / sqrt(lam[2] * lam[4]);
    const T corrected = T(1) / (T(4) * sqrt(lam[2] * lam[4]));
    put_corrected("f4_printed_prefactor", norm(subtract(scale(printed, raw), f(4))),
                  norm(subtract(scale(corrected, raw), f(4))),
                  "prefactor 1/(4 sqrt(l2 l4)) gives f4; printed 1/sqrt(l2 l4) gives norm 4");
  }
  {
    const V u = scale(T(1) / (T(2) * sqrt(T(2) * s2 * xi1)),
                      V::from_real({T(2) * xi1, s1 * xi1 + c1, c2 - c1 * c1 * s2,
                                    c2 - c1 * c1 * s2, s1 * xi1 + c1}));
    put("intermediate_u", max_of<T>({norm(subtract(u, apply(A, f(1)))),
                                     norm(subtract(apply(phi, u), u)),
                                     norm(subtract(apply(At, u), scale(lam[1], f(1))))}));

    const V v = scale(sqrt(lam[3]) / (T(2) * s2),
                      V::from_real({T(2) * c1, -(T(2) * s2 + T(1)), T(2) * s2 + T(3) - T(2) * c1,
                                    T(2) * s2 + T(3) - T(2) * c1, -(T(2) * s2 + T(1))}));
    put("intermediate_v", max_of<T>({norm(subtract(v, apply(At, f(3)))),
                                     norm(subtract(apply(phi, v), v)), abs(norm(v) - sqrt(lam[4]))}));

    const T bracket = T(7) - c1 - c1 * s2;
    const V av = apply(A, v);
    put_corrected("lowering_v_prefactor", norm(subtract(av, scale(bracket / sqrt(T(2)), f(3)))),
                  norm(subtract(av, scale(bracket / T(2), f(3)))),
                  "A5 v = ((7 - c1 - c1 s2)/2) f3 = lambda4 f3; printed factor "
                  "2^-1/2 (7 - c1 - c1 s2) equals sqrt2 lambda4");
  }

  // -- mixing -----------------------------------------------------------------
  {
    const T root = sqrt(T(21) - T(5) * c2);
    put("eta_closed_forms",
        max_of<T>({abs(eta - cos(phi_angle)), abs(sin(phi_angle) - s1 * s1 / root),
                   abs(sin(phi_angle) - eta * s1 * s1 / T(4))}));
    put("phi_closed_forms", abs(phi_angle - atan((T(5) + sqrt(T(5))) / T(8))));
    put("phi_quoted_degrees", abs(phi_angle * T(180) / pi<T>() - T(4213) / T(100)));
    const T l14 = sqrt(lam[1] * lam[4]);
    put_corrected("eta_printed_8s2", abs(eta - T(8) * s2 / l14), abs(eta - T(2) * s2 / l14),
                  "2s₂/√(λ₁λ₄) passes; printed 8s₂ form off by "
                  "factor 4");
  }
  {
    const auto partner = hermitian_eigensolver(Ns);
    T res(0);
    for (std::size_t j = 0; j < 5; ++j)
      res = max_of<T>({res, abs(partner.eigenvalues[j] - oracle.eigenvalues[j])});
    put("partner_spectrum", res);

    const auto mix = mixing(sys);
    T g_res(0);
    for (std::size_t n = 0; n < 5; ++n)
      g_res = max_of<T>({g_res, norm(subtract(apply(Ns, mix.g[n]), scale(lam[n], mix.g[n])))});
    const T r = s1 * s1 / T(4);
    const V g0 = scale(eta, add(scale(r, f(0)), f(4)));
    const V g1 = scale(eta, subtract(f(0), scale(r, f(4))));
    g_res = max_of<T>({g_res, norm(subtract(g0, mix.g[0])), norm(subtract(g1, mix.g[1]))});
    put("partner_eigenvectors", g_res);
  }

  // -- ladder hierarchy -------------------------------------------------------
  {
    T res(0);
    for (int n = 1; n <= 4; ++n)
      res = max_of<T>({res, max_abs(subtract(power_formula<T>(n), f(n)))});
    put("power_formula", res);

    T nf(0);
    for (int n = 0; n < 4; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      const T expected = n == 0 ? eta * sqrt(lam[1]) : sqrt(lam[idx + 1]);
      nf = max_of<T>({nf, abs(raise(sys.pairs[idx]).norm_factor - expected)});
    }
    put("raise_norm_factors", nf);
  }
  {
    const auto rec = recurrence_residuals(sys);
    put("three_term_recurrence_n3", rec.at("three_term_n3"));
    put("three_term_recurrence_n2", rec.at("three_term_n2"));
    put("four_term_recurrence", rec.at("four_term_n1"));
    put("lowering_f1_mixture",
        max_of<T>({rec.at("lowering_f1_mixture"), rec.at("lowering_f1_rotation")}));
    T chain(0);
    for (int n = 2; n <= 4; ++n)
      chain = max_of<T>({chain, norm(subtract(apply(A, f(n)),
                                              scale(sqrt(lam[static_cast<std::size_t>(n)]), f(n - 1))))});
    put("lowering_chain", chain);
  }

  // -- Newtonian basis --------------------------------------------------------
  {
    const auto nl = newton_ladder<T>();
    T vec_res(0);
    for (int n = 1; n <= 4; ++n)
      vec_res = max_of<T>({vec_res, max_abs(subtract(nl.eigenvector(n, f(0)), f(n)))});
    put("newton_eigenvectors", vec_res);

    const std::array<T, 4> printed{eta * sqrt(T(2) * lam[1]), T(2) * eta * sqrt(lam[1] * lam[2]),
                                   eta * sqrt(T(8) * lam[1] * lam[2] * lam[3]),
                                   T(4) * eta * sqrt(lam[1] * lam[2] * lam[3] * lam[4])};
    T d_res(0);
    for (std::size_t n = 1; n <= 4; ++n)
      d_res = max_of<T>({d_res, abs(printed[n - 1] - nl.d[n]) / nl.d[n]});
    put("newton_normalizers", d_res);

    std::array<V, 5> pf;
    for (std::size_t n = 0; n < 5; ++n) pf[n] = apply(nl.polynomials[n], f(0));
    T orth(0);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        const Complex<T> ip = inner_product(pf[a], pf[b]);
        const Complex<T> expected = a == b ? Complex<T>(nl.d[a] * nl.d[a]) : Complex<T>(T(0));
        orth = max_of<T>({orth, abs(ip - expected) / (nl.d[a] * nl.d[b])});
      }
    put("newton_orthogonality", orth);
    put("newton_nodes", max_of<T>({frobenius_norm(add(nl.nodes[0], nl.nodes[2])),
                                   frobenius_norm(add(nl.nodes[1], nl.nodes[3])),
                                   frobenius_norm(add(nl.nodes[0], sym.sparse.to_dense()))}));
  }
  return out;
}

template <typename T>
ClaimsReport assemble(const PrecisionConfig& config, int trials, std::uint64_t seed) {
  const auto outcomes = evaluate<T>(trials, seed);
  if (outcomes.size() != kRegistry.size())
    throw std::logic_error("run_claims: evaluator and registry disagree on the claim set");

  ClaimsReport report;
  report.precision = config.label();
  report.tolerance = config.epsilon;
  report.trials = trials;
  report.seed = seed;
  const double scale_factor = config.epsilon / 1e-12;
  for (const auto& spec : kRegistry) {
    const auto it = outcomes.find(std::string(spec.id));
    if (it == outcomes.end())
      throw std::logic_error("run_claims: no evaluation for claim " + std::string(spec.id));
    const auto& o = it->second;

    ClaimEntry e;
    e.claim_id = std::string(spec.id);
    e.identity = std::string(spec.identity);
    e.kind = spec.kind;
    e.residual = static_cast<double>(o.residual);
    e.threshold = spec.kind == ClaimKind::rounding ? spec.base_threshold * scale_factor
                                                   : spec.base_threshold;
    if (o.corrected) e.corrected_residual = static_cast<double>(*o.corrected);

    if (o.residual <= T(e.threshold)) {
      e.status = ClaimStatus::pass;
    } else if (o.corrected && *o.corrected <= T(e.threshold)) {
      e.status = ClaimStatus::pass_with_correction;
      e.correction_note = o.note;
    } else {
      e.status = ClaimStatus::fail;
      if (o.corrected) e.correction_note = o.note;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::pass_with_correction: return "PASS_WITH_CORRECTION";
  }
  return "FAIL";
}

std::string_view kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::rounding: return "rounding";
    case ClaimKind::exact: return "exact";
    case ClaimKind::quoted: return "quoted";
  }
  return "rounding";
}

const std::vector<ClaimSpec>& claim_registry() { return kRegistry; }

std::size_t ClaimsReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [s](const ClaimEntry& e) { return e.status == s; }));
}

const ClaimEntry* ClaimsReport::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.claim_id == id) return &e;
  return nullptr;
}

ClaimsReport run_claims(const PrecisionConfig& config, int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("run_claims: trials must be positive");
  if (!(config.epsilon > 0)) throw std::invalid_argument("run_claims: tolerance must be positive");
  if (config.mode == PrecisionMode::binary64) return assemble<double>(config, trials, seed);
  ExtendedPrecisionScope scope(config.digits);
  return assemble<Extended>(config, trials, seed);
}

bool verification_passed(const ClaimsReport& report) {
  for (const auto& spec : kRegistry) {
    const ClaimEntry* e = report.find(spec.id);
    if (e == nullptr) return false;
    const ClaimStatus required =
        spec.known_misprint ? ClaimStatus::pass_with_correction : ClaimStatus::pass;
    if (e->status != required) return false;
  }
  return report.entries.size() == kRegistry.size();
}

std::vector<PrecisionShrinkage> compare_precision(const ClaimsReport& binary64,
                                                  const ClaimsReport& extended) {
  const double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;
  std::vector<PrecisionShrinkage> out;
  for (const auto& e : binary64.entries) {
    if (e.kind != ClaimKind::rounding || e.status != ClaimStatus::pass) continue;
    const ClaimEntry* x = extended.find(e.claim_id);
    if (x == nullptr) throw std::invalid_argument("compare_precision: claim sets differ");
    const double reference = std::max(e.residual, unit_roundoff);
    out.push_back({e.claim_id, e.residual, x->residual, x->residual <= reference / 10});
  }
  return out;
}

TrialGenerator::TrialGenerator(std::uint64_t seed)
    : engine_(static_cast<std::minstd_rand::result_type>(seed % std::minstd_rand::modulus)) {}

double TrialGenerator::next() {
  constexpr double span = static_cast<double>(std::minstd_rand::modulus - 2);
  const double u = static_cast<double>(engine_() - 1) / span;
  return 2.0 * u - 1.0;
}

}  // namespace dftnum
