#pragma once

// The four routes to the 5-point eigensystem, behind one switch.

#include <optional>
#include <string_view>

#include "dftnum/ladder.hpp"
#include "dftnum/oracle.hpp"

namespace dftnum {

enum class EigenMethod { ladder, power, newton, oracle };

std::optional<EigenMethod> eigen_method_from_name(std::string_view name);
std::string_view eigen_method_name(EigenMethod m);

/// lambda = (f, N f) for a unit vector f
template <typename T>
T rayleigh_quotient(const Matrix<T>& m, const Vector<T>& f) {
  return inner_product(f, apply(m, f)).re;
}

/// power and newton take f0 from the ground state and lambda_n from the
/// Rayleigh quotient of N_5, so nothing is borrowed from the ladder run.
template <typename T>
EigenSystem5<T> eigensystem_by_method(EigenMethod method) {
  switch (method) {
    case EigenMethod::ladder:
      return ladder_eigensystem<T>();
    case EigenMethod::oracle:
      return oracle_eigensystem<T>();
    case EigenMethod::power:
    case EigenMethod::newton: {
      const Matrix<T> number = build_named_matrix<T>(MatrixKind::number, 5);
      EigenSystem5<T> sys;
      sys.pairs[0] = ground_state<T>();
      std::optional<NewtonLadder<T>> nl;
      if (method == EigenMethod::newton) nl = newton_ladder<T>();
      for (int n = 1; n <= 4; ++n) {
        Vector<T> v = method == EigenMethod::power ? power_formula<T>(n)
                                                   : nl->eigenvector(n, sys.pairs[0].vector);
        const T lambda = rayleigh_quotient(number, v);
        sys.pairs[static_cast<std::size_t>(n)] =
            EigenPair<T>{n, lambda, std::move(v), n,
                         n % 2 == 0 ? Parity::symmetric : Parity::antisymmetric};
      }
      for (std::size_t n = 0; n < 5; ++n) {
        if (n == 0) sys.pairs[0].lambda = rayleigh_quotient(number, sys.pairs[0].vector);
        sys.spectrum.lambda[n] = sys.pairs[n].lambda;
      }
      return sys;
    }
  }
  throw std::invalid_argument("eigensystem_by_method: unknown method");
}

}  // namespace dftnum
