#include "switchmix/bounds.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace switchmix {

namespace {

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

Real to_real(const Rational& x) {
  return Real(boost::multiprecision::numerator(x)) / Real(boost::multiprecision::denominator(x));
}

// k ln k, with 0 ln 0 = 0.
Real k_log_k(std::int64_t k) {
  if (k <= 1) return Real(0);
  return Real(k) * boost::multiprecision::log(Real(k));
}

Real log_inverse_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  return -boost::multiprecision::log(Real(eps));
}

void check_even(const DegreeSequence& d) {
  if (d.total() % 2 != 0) throw std::invalid_argument("degree sum is odd");
}

void check_balanced(const DirectedDegreeSequence& dd) {
  if (!dd.balanced()) throw std::invalid_argument("in- and out-degree totals differ");
}

}  // namespace

FlowComponents flow_components(const DegreeSequence& d) {
  check_even(d);
  const std::int64_t M = d.total();
  const BigInt bigM = M;
  FlowComponents c;
  c.directed = false;
  c.size = M;
  c.max_degree = d.max_degree();
  BigInt denominator = pow(BigInt(2), static_cast<unsigned>(M / 2)) * factorial(M / 2);
  for (int v = 0; v < d.n(); ++v) denominator *= factorial(d[v]);
  c.state_count_bound = Rational(factorial(M), denominator);
  c.log_inverse_pi_bound = k_log_k(M) / 2;
  c.path_length_bound = Rational(M, 2);
  c.inverse_q = 6 * *stats(d).a;
  c.inverse_q_bound = Rational(bigM * bigM);
  c.encoding_ratio_bound = Rational(2 * pow(bigM, 6));
  c.load_factor = pow(BigInt(d.max_degree()), 14);
  c.load_bound = Rational(c.load_factor) * c.encoding_ratio_bound * c.inverse_q_bound;
  return c;
}

FlowComponents flow_components(const DirectedDegreeSequence& dd) {
  check_balanced(dd);
  const std::int64_t m = dd.arcs();
  const BigInt bigm = m;
  FlowComponents c;
  c.directed = true;
  c.size = m;
  c.max_degree = dd.r_max();
  c.state_count_bound = Rational(factorial(m));
  c.log_inverse_pi_bound = k_log_k(m);
  c.path_length_bound = Rational(m);
  c.inverse_q = choose2(bigm);
  c.inverse_q_bound = Rational(bigm * bigm, 2);
  c.encoding_ratio_bound = Rational(pow(bigm, 8), 8);
  c.load_factor = 4 * pow(BigInt(dd.r_max()), 16);
  c.load_bound = Rational(c.load_factor) * c.encoding_ratio_bound * c.inverse_q_bound;
  return c;
}

Real compose_bound(const FlowComponents& c, double eps) {
  const Real rho_ell = to_real(c.load_bound * c.path_length_bound);
  return rho_ell * (c.log_inverse_pi_bound + log_inverse_eps(eps));
}

BoundReport mixing_bound(const DegreeSequence& d, double eps) {
  const Real log_eps = log_inverse_eps(eps);
  check_even(d);
  BoundReport r;
  r.directed = false;
  r.degrees.assign(d.degrees().begin(), d.degrees().end());
  r.eps = eps;
  r.applicable = classify(d).theorem1_applicable;
  if (!r.applicable) r.warning = "degree hypotheses fail (need graphical, d_min >= 1, d_max >= 3, 9 d_max^2 <= M)";
  const BigInt M = d.total();
  r.polynomial = Rational(pow(BigInt(d.max_degree()), 14) * pow(M, 9));
  r.log_term = k_log_k(d.total()) / 2 + log_eps;
  r.value = to_real(r.polynomial) * r.log_term;
  r.formula = "d_max^14 * M^9 * (M ln(M) / 2 + ln(1/eps))";
  return r;
}

BoundReport mixing_bound(const DirectedDegreeSequence& dd, double eps) {
  const Real log_eps = log_inverse_eps(eps);
  check_balanced(dd);
  BoundReport r;
  r.directed = true;
  r.directed_degrees.assign(dd.pairs().begin(), dd.pairs().end());
  r.eps = eps;
  const DirectedClassification dc = classify_directed(dd);
  r.applicable = dc.digraphical && dc.theorem2_degree_ok;
  r.warning = r.applicable ? "switch-irreducibility is assumed, not checked"
                           : "degree hypotheses fail (need digraphical, r_min >= 1, r_max >= 2, 16 r_max^2 <= m)";
  const BigInt m = dd.arcs();
  r.polynomial = Rational(pow(BigInt(dd.r_max()), 16) * pow(m, 11), 4);
  r.log_term = k_log_k(dd.arcs()) + log_eps;
  r.value = to_real(r.polynomial) * r.log_term;
  r.formula = "r_max^16 * m^11 / 4 * (m ln(m) + ln(1/eps))";
  return r;
}

Real log_rational(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("log of a non-positive number");
  return boost::multiprecision::log(Real(boost::multiprecision::numerator(x))) -
         boost::multiprecision::log(Real(boost::multiprecision::denominator(x)));
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(digits - 1) << x;
  return out.str();
}

}  // namespace switchmix
