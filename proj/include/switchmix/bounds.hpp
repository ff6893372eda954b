#pragma once

#include <string>
#include <vector>

#include "switchmix/degseq.hpp"
#include "switchmix/numeric.hpp"

namespace switchmix {

/// Pieces of the multicommodity-flow mixing bound
///   tau <= rho * ell * (log(1/pi*) + log(1/eps)),
/// each in closed form. Logarithms are natural.
struct FlowComponents {
  bool directed = false;
  /// M (degree sum) or m (arc count).
  std::int64_t size = 0;
  /// d_max or r_max.
  int max_degree = 0;
  /// Upper bound on the state count: M! / (2^(M/2) (M/2)! prod d_j!) or m!.
  Rational state_count_bound;
  /// Upper bound on log(1/pi*): M ln(M) / 2 or m ln(m).
  Real log_inverse_pi_bound;
  /// Longest canonical path: M/2 or m.
  Rational path_length_bound;
  /// 1/Q(e) for a transition, without the state-count factor: 6 a(d) or
  /// C(m, 2). Exact for this sequence.
  BigInt inverse_q;
  /// The closed-form cap used in the bound: M^2 or m^2 / 2.
  Rational inverse_q_bound;
  /// Bound on (encodings consistent with Z) / (states): 2 M^6 or m^8 / 8.
  Rational encoding_ratio_bound;
  /// Factor in front of the encoding ratio in the load: d_max^14 or 4 r_max^16.
  BigInt load_factor;
  /// load_factor * encoding_ratio_bound * inverse_q_bound:
  /// 2 d_max^14 M^8 or r_max^16 m^10 / 4.
  Rational load_bound;
};

FlowComponents flow_components(const DegreeSequence& d);
FlowComponents flow_components(const DirectedDegreeSequence& dd);

struct BoundReport {
  bool directed = false;
  std::vector<int> degrees;
  std::vector<DegreePair> directed_degrees;
  double eps = 0.0;
  /// Degree hypotheses of the mixing theorem. The directed theorem also
  /// needs switch-irreducibility, which is not checked here.
  bool applicable = false;
  std::string warning;
  /// d_max^14 M^9 or r_max^16 m^11 / 4.
  Rational polynomial;
  /// M ln(M) / 2 + ln(1/eps) or m ln(m) + ln(1/eps).
  Real log_term;
  Real value;
  std::string formula;
};

/// Throws std::invalid_argument unless 0 < eps < 1, and for an odd degree
/// sum or unbalanced directed totals.
BoundReport mixing_bound(const DegreeSequence& d, double eps);
BoundReport mixing_bound(const DirectedDegreeSequence& dd, double eps);

/// rho * ell * (log(1/pi*) + ln(1/eps)) from the components. Matches
/// mixing_bound's value, which is computed from the closed form directly.
Real compose_bound(const FlowComponents& c, double eps);

/// Natural log of a positive rational, to Real precision.
Real log_rational(const Rational& x);

/// Scientific notation with `digits` significant digits.
std::string to_decimal(const Real& x, int digits = 20);

}  // namespace switchmix
