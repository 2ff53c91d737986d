// Development probe for the protocol engine. Not part of the build.
#include <cstdio>
#include <cmath>

#include "qchain/families.hpp"
#include "qchain/protocol.hpp"
#include "qchain/verify.hpp"

using namespace qchain;

static void report(const char* name, double r) {
  std::printf("%-58s %.3e %s\n", name, r, r < 1e-9 ? "ok" : "FAIL");
}

int main() {
  // Staircase identities: circuit vs exp(-i a Hhat) from the closed form.
  for (Backend b : {Backend::Cnot, Backend::Msg, Backend::ISwap}) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<FactorKind> axes;
      for (int i = 0; i < n; ++i)
        axes.push_back(i % 3 == 0 ? FactorKind::PauliX
                                  : (i % 3 == 1 ? FactorKind::PauliZ
                                                : FactorKind::PauliY));
      ChainSpec spec;
      spec.family = ChainFamily::PauliString;
      spec.pauli_axes = axes;
      spec.alpha = 0.37;
      spec.backend = b;
      const Matrix u = circuit_unitary(build_staircase(spec));
      const Matrix t = expm_generator(hhat_closed_form(spec), spec.alpha);
      char name[64];
      std::snprintf(name, sizeof(name), "pauli staircase backend=%d n=%d",
                    static_cast<int>(b), n);
      report(name, phase_distance(u, t));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    ChainSpec spec;
    spec.family = ChainFamily::MultiControl;
    spec.num_controls = n;
    spec.alpha = 0.51;
    const Matrix u = circuit_unitary(build_staircase(spec));
    const Matrix t = expm_generator(hhat_closed_form(spec), spec.alpha);
    char name[64];
    std::snprintf(name, sizeof(name), "mc staircase n=%d", n);
    report(name, phase_distance(u, t));
    report("mc residue commutes",
           max_abs(residue_closed_form(spec) * hbar_closed_form(spec) -
                   hbar_closed_form(spec) * residue_closed_form(spec)));
  }
  for (int pairs = 2; pairs <= 3; ++pairs) {
    ChainSpec spec;
    spec.family = ChainFamily::ExchangePairs;
    spec.pair_kinds.assign(pairs, FactorKind::ExchangeG);
    spec.alpha = 0.43;
    const Matrix u = circuit_unitary(build_staircase(spec));
    const Matrix t = expm_generator(hhat_closed_form(spec), spec.alpha);
    char name[64];
    std::snprintf(name, sizeof(name), "exchange staircase pairs=%d", pairs);
    report(name, phase_distance(u, t));
  }
  // Decoupling: exp(-2 i a Hbar).
  for (int n = 1; n <= 4; ++n) {
    ChainSpec spec;
    spec.family = ChainFamily::MultiControl;
    spec.num_controls = n;
    spec.alpha = 0.3;
    const Matrix u = circuit_unitary(build_decoupling(spec));
    const Matrix t = expm_generator(hbar_closed_form(spec), 2.0 * spec.alpha);
    char name[64];
    std::snprintf(name, sizeof(name), "mc decoupling n=%d", n);
    report(name, phase_distance(u, t));
  }
  for (int pairs = 2; pairs <= 3; ++pairs) {
    for (FactorKind kind :
         {FactorKind::ExchangeG, FactorKind::ExchangeF, FactorKind::ParityPair}) {
      ChainSpec spec;
      spec.family = ChainFamily::ExchangePairs;
      spec.pair_kinds.assign(pairs, kind);
      spec.alpha = 0.3;
      const Matrix u = circuit_unitary(build_decoupling(spec));
      Matrix h = identity(1);
      for (FactorKind k : spec.pair_kinds) h = tensor(h, make_factor(k).matrix_r);
      const Matrix t = expm_generator(h, 2.0 * spec.alpha);
      char name[64];
      std::snprintf(name, sizeof(name), "exchange decoupling pairs=%d kind=%s",
                    pairs, factor_kind_name(kind).c_str());
      report(name, phase_distance(u, t));
    }
  }
  // Pauli selection.
  for (int n = 2; n <= 5; ++n) {
    std::vector<FactorKind> axes(n, FactorKind::PauliX);
    FamilySpec fam;
    fam.family = "pauli";
    fam.axes = axes;
    fam.alpha = 0.7;
    fam.backend = Backend::ISwap;
    fam.protocol = Protocol::Selection;
    const Circuit c = synth(fam);
    const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
    char name[64];
    std::snprintf(name, sizeof(name), "pauli selection n=%d (leak %.1e)", n,
                  res.subspace_leakage);
    report(name, res.distance);
  }
  // Multi-control selection = exact CnX.
  for (int n = 2; n <= 5; ++n) {
    FamilySpec fam;
    fam.family = "mcx";
    fam.num_controls = n;
    fam.protocol = Protocol::Selection;
    const Circuit c = synth(fam);
    const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
    char name[64];
    std::snprintf(name, sizeof(name), "mcx selection n=%d (leak %.1e)", n,
                  res.subspace_leakage);
    report(name, res.distance);
    const ResourceReport rr = resource_report(c);
    std::printf("    toffolis=%d expected=%d depth_ent=%d\n",
                rr.counts_by_kind.count("toffoli") ? rr.counts_by_kind.at("toffoli") : 0,
                2 * (n - 1), rr.entangler_depth);
  }
  // Multi-control phaseless echo.
  for (int n = 2; n <= 4; ++n) {
    for (McTarget t : {McTarget::X, McTarget::Z}) {
      FamilySpec fam;
      fam.family = "mcx";
      fam.num_controls = n;
      fam.mc_target = t;
      fam.protocol = Protocol::Decoupling;
      const Circuit c = synth(fam);
      const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
      char name[64];
      std::snprintf(name, sizeof(name), "mcx echo exact n=%d target=%s", n,
                    mc_target_name(t).c_str());
      report(name, res.distance);
      const ResourceReport rr = resource_report(c);
      std::printf("    rptoffolis=%d expected=%d\n",
                  rr.counts_by_kind.count("rptoffoli") ? rr.counts_by_kind.at("rptoffoli") : 0,
                  4 * n - 2);
    }
  }
  // Relative mode differs from exact by a diagonal.
  {
    const int n = 3;
    Circuit rel = synth_multicontrol(n, McTarget::X, Protocol::Decoupling,
                                     PhaseMode::Relative, M_PI / 4.0);
    const Matrix u = circuit_unitary(rel);
    FamilySpec fam;
    fam.family = "mcx";
    fam.num_controls = n;
    const Matrix t = target_unitary(fam);
    const Matrix ratio = u * t.adjoint();
    double offdiag = 0.0, unit = 0.0;
    for (Eigen::Index i = 0; i < ratio.rows(); ++i)
      for (Eigen::Index j = 0; j < ratio.cols(); ++j) {
        if (i != j) offdiag = std::max(offdiag, std::abs(ratio(i, j)));
        else unit = std::max(unit, std::abs(std::abs(ratio(i, j)) - 1.0));
      }
    report("mcx relative ratio offdiag", offdiag);
    report("mcx relative ratio unit modulus", unit);
  }
  // Exchange selection.
  for (int pairs = 2; pairs <= 3; ++pairs) {
    FamilySpec fam;
    fam.family = "numcons";
    fam.pair_kinds.assign(pairs, FactorKind::ExchangeG);
    fam.alpha = 0.45;
    fam.protocol = Protocol::Selection;
    const Circuit c = synth(fam);
    const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
    char name[64];
    std::snprintf(name, sizeof(name), "exchange selection pairs=%d (leak %.1e)",
                  pairs, res.subspace_leakage);
    report(name, res.distance);
  }
  // UCC echo vs target and vs baseline.
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      FamilySpec fam;
      fam.family = "ucc";
      fam.ucc_m = m;
      fam.ucc_n = n;
      fam.alpha = 0.35;
      fam.protocol = Protocol::Decoupling;
      const Circuit c = synth(fam);
      const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
      char name[64];
      std::snprintf(name, sizeof(name), "ucc m=%d n=%d (leak %.1e)", m, n,
                    res.subspace_leakage);
      report(name, res.distance);
      const ResourceReport rr = resource_report(c);
      std::printf("    rpt=%d expected=%d iswaps=%d expected=%d\n",
                  rr.counts_by_kind.count("rptoffoli") ? rr.counts_by_kind.at("rptoffoli") : 0,
                  4 * (m + n),
                  rr.counts_by_kind.count("iswap") ? rr.counts_by_kind.at("iswap") : 0,
                  4 * (m + n - 1));
    }
  // Baseline.
  for (int m = 1; m <= 2; ++m) {
    FamilySpec fam;
    fam.family = "ucc-baseline";
    fam.ucc_m = m;
    fam.ucc_n = 1;
    fam.alpha = 0.8;
    fam.protocol = Protocol::Staircase;
    const Circuit c = synth(fam);
    const auto res = verify_equivalence(c, target_unitary(fam), 1e-9);
    char name[64];
    std::snprintf(name, sizeof(name), "ucc baseline m=%d n=1", m);
    report(name, res.distance);
  }
  return 0;
}
