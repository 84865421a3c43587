// R(e^{-2 pi}) by three routes, then the sextic instance whose root is u(e^{-2 pi}).

#include <cmath>
#include <cstdio>

#include "rrq/rrq.hpp"

int main() {
  const rrq::Nome q = rrq::Nome::from_r_doubled(1.0);
  const double s5 = std::sqrt(5.0);
  const double radical = -(1.0 + s5) / 2.0 + std::sqrt((5.0 + s5) / 2.0);

  const double eta = rrq::rrcf(q);
  const double cf = rrq::rrcf_cf_oracle(q, 40);
  const double k = rrq::singular_modulus(4.0);
  const double via_f = rrq::F_of_x(0.6 * std::cbrt(2.0 * k) * rrq::gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, k * k, {}));

  std::printf("radical            %.15f\n", radical);
  std::printf("eta quotient       %.15f\n", eta);
  std::printf("continued fraction %.15f\n", cf);
  std::printf("F(hypergeometric)  %.15f\n", via_f);

  const rrq::SexticSolution s = rrq::solve_sextic(rrq::SexticInstance::with_j(1.0, 250.0, 1728.0));
  std::printf("sextic root        %.12f  (u(e^-2pi) = %.12f)\n", s.X, rrq::u_of_q(q));

  const bool ok = std::abs(eta - radical) < 1e-12 && std::abs(cf - radical) < 1e-12 && std::abs(via_f - radical) < 1e-9 &&
                  std::abs(s.X / rrq::u_of_q(q) - 1.0) < 1e-9;
  return ok ? 0 : 1;
}
