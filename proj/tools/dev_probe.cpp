// Development probe: pins down conjugation directions and signs numerically.
// Not part of the build.
#include <cstdio>
#include <cmath>

#include "qchain/circuit.hpp"
#include "qchain/factors.hpp"
#include "qchain/linalg.hpp"
#include "qchain/verify.hpp"

using namespace qchain;

static void report(const char* name, double r) { std::printf("%-55s %.3e\n", name, r); }

int main() {
  const Matrix x = pauli_x(), y = pauli_y(), z = pauli_z();
  const Matrix i2 = identity(2);
  const Matrix g = make_factor(FactorKind::ExchangeG).matrix_r;
  const Matrix f = make_factor(FactorKind::ExchangeF).matrix_r;
  const Matrix p1 = proj_one(), p0 = proj_zero();

  // 1. MSG direction: u^dag Y1 u for u = [XX]^{s pi/4}
  for (double s : {1.0, -1.0}) {
    const Matrix u = expm_generator(tensor(x, x), s * M_PI / 4.0);
    const Matrix got = u.adjoint() * tensor(y, i2) * u;
    std::printf("msg s=%+.0f: vs -Z1X2: %.3e  vs +Z1X2: %.3e\n", s,
                max_abs(got + tensor(z, x)), max_abs(got - tensor(z, x)));
  }
  // 2. iSWAP direction: u^dag Y1 u for u = [G]^{s pi/2}
  for (double s : {1.0, -1.0}) {
    const Matrix u = expm_generator(g, s * M_PI / 2.0);
    const Matrix got = u.adjoint() * tensor(y, i2) * u;
    std::printf("iswap s=%+.0f: vs -Z1X2: %.3e  vs +Z1X2: %.3e\n", s,
                max_abs(got + tensor(z, x)), max_abs(got - tensor(z, x)));
  }
  // 3. Toffoli chain direction: u^{dag} Z1Z2 u for u = [P1 X2 P3]^{s pi/2}
  const Matrix rhs_tof = -embed(tensor(p1, tensor(z, z)), {0, 1, 2}, 3) +
                         embed(tensor(p0, z), {0, 1}, 3);
  for (double s : {1.0, -1.0}) {
    const Matrix u = expm_generator(embed(tensor(p1, tensor(x, p1)), {0, 1, 2}, 3),
                                    s * M_PI / 2.0);
    const Matrix got_dag = u.adjoint() * embed(tensor(z, z), {0, 1}, 3) * u;
    const Matrix got_fwd = u * embed(tensor(z, z), {0, 1}, 3) * u.adjoint();
    std::printf("toffoli s=%+.0f: udag.ZZ.u: %.3e   u.ZZ.udag: %.3e\n", s,
                max_abs(got_dag - rhs_tof), max_abs(got_fwd - rhs_tof));
  }
  // 4. Exchange chain direction: u^dag G12 u for u = [Z1 G34]^{s pi/4} (4 qubits)
  {
    const Matrix zg = embed(tensor(z, g), {0, 2, 3}, 4);
    const Matrix g12 = embed(g, {0, 1}, 4);
    const Matrix g34 = embed(g, {2, 3}, 4);
    const Matrix f12 = embed(f, {0, 1}, 4);
    const Matrix pker34 = embed(make_factor(FactorKind::ExchangeG).p_ker, {2, 3}, 4);
    const Matrix rhs = g12 * pker34 + f12 * g34;
    for (double s : {1.0, -1.0}) {
      const Matrix u = expm_generator(zg, s * M_PI / 4.0);
      std::printf("exchange s=%+.0f: udag.G12.u: %.3e   u.G12.udag: %.3e\n", s,
                  max_abs(u.adjoint() * g12 * u - rhs), max_abs(u * g12 * u.adjoint() - rhs));
    }
  }
  // 5. F-variant on the best direction
  {
    const Matrix zg = embed(tensor(z, g), {0, 2, 3}, 4);
    const Matrix g12 = embed(g, {0, 1}, 4);
    const Matrix g34 = embed(g, {2, 3}, 4);
    const Matrix f12 = embed(f, {0, 1}, 4);
    const Matrix pker34 = embed(make_factor(FactorKind::ExchangeG).p_ker, {2, 3}, 4);
    const Matrix rhs = f12 * pker34 + g12 * g34;
    for (double s : {1.0, -1.0}) {
      const Matrix u = expm_generator(zg, s * M_PI / 4.0);
      std::printf("exchangeF s=%+.0f: udag.F12.u: %.3e   u.F12.udag: %.3e\n", s,
                  max_abs(u.adjoint() * f12 * u - rhs), max_abs(u * f12 * u.adjoint() - rhs));
    }
  }
  // 6. iSWAP decomposition of the exchange generator:
  //    [F_il]^{-pi/2} [G_ik]^a [F_il]^{pi/2} = [Z_i G_kl]^a on 3 qubits
  {
    const double a = 0.7;
    const Matrix target = expm_generator(embed(tensor(z, g), {0, 1, 2}, 3), a);
    for (double s : {1.0, -1.0}) {
      const Matrix fil = expm_generator(embed(f, {0, 2}, 3), s * M_PI / 2.0);
      const Matrix gik = expm_generator(embed(g, {0, 1}, 3), a);
      report("zg from iswaps", max_abs(fil.adjoint() * gik * fil - target));
    }
  }
  // 7. MSG dressed step: K = MSG * (V x W), K^dag Y1 K =? Y1 Y2
  {
    for (double sv : {1.0, -1.0}) {
      const Matrix v = expm_generator(x, sv * M_PI / 4.0);
      const Matrix w = expm_generator(z, -M_PI / 4.0);
      const Matrix k = expm_generator(tensor(x, x), M_PI / 4.0) * tensor(v, w);
      const Matrix got = k.adjoint() * tensor(y, i2) * k;
      std::printf("msg dressed sv=%+.0f: vs Y1Y2: %.3e\n", sv,
                  max_abs(got - tensor(y, y)));
    }
    for (double sv : {1.0, -1.0}) {
      const Matrix v = expm_generator(x, sv * M_PI / 4.0);
      const Matrix w = expm_generator(z, -M_PI / 4.0);
      const Matrix k = expm_generator(g, -M_PI / 2.0) * tensor(v, w);
      const Matrix got = k.adjoint() * tensor(y, i2) * k;
      std::printf("iswap dressed sv=%+.0f: vs Y1Y2: %.3e\n", sv,
                  max_abs(got - tensor(y, y)));
    }
  }
  // 8. G -> F frame: [Z1]^{s pi/4}-conjugation of G
  for (double s : {1.0, -1.0}) {
    const Matrix u = embed(expm_generator(z, s * M_PI / 4.0), {0}, 2);
    const Matrix got = u.adjoint() * g * u;
    std::printf("gf frame s=%+.0f: vs F: %.3e  vs -F: %.3e\n", s,
                max_abs(got - f), max_abs(got + f));
  }
  // 9. Mirror for exchange strings: [Z2]^{pi/2}-conjugation flips G
  {
    const Matrix u = embed(expm_generator(z, M_PI / 2.0), {1}, 2);
    const Matrix got = u.adjoint() * g * u;
    report("exchange mirror flips G", max_abs(got + g));
  }
  // 10. Relative-phase Toffoli 4-CNOT lowering
  {
    Gate rp{GateKind::RelPhaseToffoli, {reg(0), reg(1), reg(2)}, M_PI / 2.0, ""};
    Circuit c;
    c.num_register = 3;
    c.gates.push_back(rp);
    Circuit low = lower_to_backend(c, Backend::Cnot);
    report("rp toffoli lowering", phase_distance(circuit_unitary(low), gate_unitary(rp)));
    int cnots = 0;
    for (auto& gg : low.gates) if (gg.kind == GateKind::Cnot) ++cnots;
    std::printf("rp toffoli cnots: %d\n", cnots);
  }
  // 11. Exact Toffoli 6-CNOT lowering
  {
    Gate tof{GateKind::Toffoli, {reg(0), reg(1), reg(2)}, 0.0, ""};
    Circuit c;
    c.num_register = 3;
    c.gates.push_back(tof);
    Circuit low = lower_to_backend(c, Backend::Cnot);
    report("toffoli lowering", phase_distance(circuit_unitary(low), gate_unitary(tof)));
    int cnots = 0;
    for (auto& gg : low.gates) if (gg.kind == GateKind::Cnot) ++cnots;
    std::printf("toffoli cnots: %d\n", cnots);
  }
  // 12. identity suite
  for (const auto& chk : verify_identity_suite()) report(chk.name.c_str(), chk.residual);
  return 0;
}
