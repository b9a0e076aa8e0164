#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qdlab/arith.hpp"
#include "qdlab/lfun.hpp"
#include "qdlab/smooth.hpp"

// Empirical shifted fourth moment over odd squarefree d against the
// sixteen-term predicted main term.

namespace qdlab::moments {

using cplx = std::complex<double>;

struct Shift4 {
  std::array<cplx, 4> alpha;
  double log_x;
  bool admissible;
  double margin;  // min |sum eta_i alpha_i| over eta != 0, in 1/log X units
};

// alpha_i = pattern_i / log X with the full 3^4 - 1 eta-combination check:
// admissible iff 1/2 <= pattern_i <= 1 and every |sum eta_i pattern_i|
// >= 1/50.
Shift4 admissible_shifts(double log_x, const std::array<double, 4>& pattern);

struct MomentValue {
  cplx value;
  double max_afe_tail;
  long long d_count;
};

class MomentEngine {
 public:
  MomentEngine(const Shift4& shifts, const lfun::AfeConfig& cfg,
               long long max_x, int threads = 1);

  // sum over odd squarefree d with phi(d/X) != 0 of
  // prod_i L(1/2 + alpha_i, chi_8d) * phi(d/X).
  MomentValue empirical(long long X, const smooth::TestFunction& phi) const;

  // Same sum with every L-value taken from the Hurwitz-zeta oracle
  // (small X only; used as the oracle slice).
  MomentValue empirical_hurwitz(long long X,
                                const smooth::TestFunction& phi) const;

  const arith::ArithTables& tables() const { return tables_; }
  const Shift4& shifts() const { return shifts_; }

 private:
  Shift4 shifts_;
  lfun::AfeConfig cfg_;
  int threads_;
  arith::ArithTables tables_;
  std::vector<lfun::VTable> vplus_, vminus_;
};

// One epsilon-term of the predicted main term (without the 4X/pi^2 front
// factor); eps entries are +-1.
cplx predicted_term(long long X, const Shift4& shifts,
                    const smooth::TestFunction& phi,
                    const std::array<int, 4>& eps, long long P,
                    const arith::ArithTables& t);

// (4X/pi^2) sum over the sixteen sign patterns.
cplx predicted_main_term(long long X, const Shift4& shifts,
                         const smooth::TestFunction& phi, long long P,
                         const arith::ArithTables& t);

struct MomentReport {
  long long X;
  Shift4 shifts;
  std::string phi_label;
  cplx empirical;
  cplx predicted;
  cplx ratio;
  long long d_count;
  double runtime_seconds;
  double max_afe_tail;
  bool ok;
  std::string error;
};

struct SweepConfig {
  std::array<double, 4> pattern{0.50, 0.63, 0.79, 0.97};
  long long prime_cutoff = 100000;
  int threads = 1;
  bool record_timing = true;  // when false, runtime_seconds is written as 0
  lfun::AfeConfig afe;
};

std::vector<MomentReport> moment_sweep(const std::vector<long long>& xs,
                                       const SweepConfig& cfg);

}  // namespace qdlab::moments
