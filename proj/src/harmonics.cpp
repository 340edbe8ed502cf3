#include "areakin/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "areakin/constants.hpp"

namespace areakin {

double gegenbauer_eval(int n, double lambda, double t) {
  if (n < 0) throw std::invalid_argument("gegenbauer_eval: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * t * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ZonalHarmonic::operator()(const Vec& u) const {
  return scale * gegenbauer_eval(degree, (d - 2) / 2.0, axis.dot(u));
}

double RealHarmonicS2::operator()(const Vec& u_in) const {
  Vec u = u_in;
  if (frame.size() != 0) u = frame.transpose() * u_in;
  const int l = degree;
  const int m = std::abs(order);
  const double x = u[0], y = u[1], z = u[2];

  // Associated Legendre polynomial with the (1-z^2)^{m/2} factor removed;
  // that factor is carried by Re/Im (x + i y)^m.
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0);
  double p = pmm;
  if (l > m) {
    double p_prev = pmm;
    double p_cur = z * (2.0 * m + 1.0) * pmm;
    for (int k = m + 2; k <= l; ++k) {
      const double next = ((2.0 * k - 1.0) * z * p_cur - (k + m - 1.0) * p_prev) / (k - m);
      p_prev = p_cur;
      p_cur = next;
    }
    p = p_cur;
  }

  // sigma-normalization: (2l+1) (l-m)!/(l+m)!, doubled for m != 0.
  double norm2 = (2.0 * l + 1.0);
  for (int i = l - m + 1; i <= l + m; ++i) norm2 /= i;
  if (m != 0) norm2 *= 2.0;
  const double norm = std::sqrt(norm2);

  if (m == 0) return norm * p;
  const std::complex<double> w = std::pow(std::complex<double>(x, y), m);
  return norm * p * (order > 0 ? w.real() : w.imag());
}

double HarmonicTerm::operator()(const Vec& u) const {
  return coeff * std::visit([&](const auto& b) { return b(u); }, basis);
}

HarmonicSpectrum& HarmonicSpectrum::add_zonal(int degree, const Vec& axis, double coeff,
                                              double scale) {
  if (degree < 0) throw std::invalid_argument("add_zonal: negative degree");
  if (axis.size() != d_) throw std::invalid_argument("add_zonal: axis dimension mismatch");
  if (d_ < 3) throw std::invalid_argument("add_zonal: zonal harmonics need d >= 3");
  terms_.push_back({degree, ZonalHarmonic{d_, degree, axis.normalized(), scale}, coeff});
  return *this;
}

HarmonicSpectrum& HarmonicSpectrum::add_real_s2(int degree, int order, double coeff) {
  if (d_ != 3) throw std::invalid_argument("add_real_s2: only available for d = 3");
  if (degree < 0 || std::abs(order) > degree)
    throw std::invalid_argument("add_real_s2: need |order| <= degree");
  terms_.push_back({degree, RealHarmonicS2{degree, order, Mat()}, coeff});
  return *this;
}

double HarmonicSpectrum::operator()(const Vec& u) const {
  if (u.size() != d_) throw std::invalid_argument("HarmonicSpectrum: dimension mismatch");
  double s = 0.0;
  for (const auto& t : terms_) s += t(u);
  return s;
}

double HarmonicSpectrum::sphere_mean() const {
  double s = 0.0;
  for (const auto& t : terms_) {
    if (t.degree != 0) continue;
    if (const auto* z = std::get_if<ZonalHarmonic>(&t.basis))
      s += t.coeff * z->scale;
    else
      s += t.coeff;  // Y_00 == 1
  }
  return s;
}

int HarmonicSpectrum::max_degree() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.degree);
  return m;
}

bool HarmonicSpectrum::has_odd_degree() const {
  for (const auto& t : terms_)
    if (t.degree % 2 == 1 && t.coeff != 0.0) return true;
  return false;
}

bool HarmonicSpectrum::has_degree(int s) const {
  for (const auto& t : terms_)
    if (t.degree == s && t.coeff != 0.0) return true;
  return false;
}

std::vector<int> HarmonicSpectrum::degrees() const {
  std::vector<int> out;
  for (const auto& t : terms_)
    if (std::find(out.begin(), out.end(), t.degree) == out.end()) out.push_back(t.degree);
  std::sort(out.begin(), out.end());
  return out;
}

HarmonicSpectrum HarmonicSpectrum::component(int s) const {
  HarmonicSpectrum out(d_);
  for (const auto& t : terms_)
    if (t.degree == s) out.terms_.push_back(t);
  return out;
}

HarmonicSpectrum HarmonicSpectrum::reflected() const {
  return apply_multiplier(*this, DegreeMultiplier::reflection());
}

HarmonicSpectrum HarmonicSpectrum::rotated(const Mat& rot) const {
  HarmonicSpectrum out(*this);
  for (auto& t : out.terms_) {
    if (auto* z = std::get_if<ZonalHarmonic>(&t.basis)) {
      z->axis = rot * z->axis;
    } else {
      auto& y = std::get<RealHarmonicS2>(t.basis);
      y.frame = y.frame.size() == 0 ? rot : Mat(rot * y.frame);
    }
  }
  return out;
}

std::string HarmonicSpectrum::describe() const {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << " + ";
    os << t.coeff << "*";
    if (const auto* z = std::get_if<ZonalHarmonic>(&t.basis)) {
      os << "zonal(s=" << t.degree << ",scale=" << z->scale << ",axis=[";
      for (int k = 0; k < z->axis.size(); ++k) os << (k ? "," : "") << z->axis[k];
      os << "])";
    } else {
      const auto& y = std::get<RealHarmonicS2>(t.basis);
      os << "Y(" << y.degree << "," << y.order << ")";
    }
  }
  if (terms_.empty()) os << "0";
  return os.str();
}

DegreeMultiplier DegreeMultiplier::identity() {
  return DegreeMultiplier([](int) { return 1.0; }, kUnbounded, "identity");
}

DegreeMultiplier DegreeMultiplier::reflection() {
  return DegreeMultiplier([](int s) { return s % 2 == 0 ? 1.0 : -1.0; }, kUnbounded,
                          "reflection");
}

DegreeMultiplier DegreeMultiplier::composed(int d, int p1, int p2) {
  // Validate eagerly so range errors surface at construction.
  (void)lambda_multiplier(d, p1, 0);
  (void)lambda_multiplier(d, p2, 0);
  return DegreeMultiplier(
      [d, p1, p2](int s) {
        return (lambda_multiplier(d, p1, s) * lambda_multiplier(d, p2, s)).real_value();
      },
      kUnbounded, "I_" + std::to_string(p1) + " I_" + std::to_string(p2));
}

DegreeMultiplier DegreeMultiplier::reduced_lambda(int d, int p) {
  (void)lambda_multiplier(d, p, 0);
  return DegreeMultiplier([d, p](int s) { return lambda_multiplier(d, p, s).magnitude; },
                          kUnbounded, "|I_" + std::to_string(p) + "|");
}

DegreeMultiplier DegreeMultiplier::even_lambda(int d, int p) {
  (void)lambda_multiplier(d, p, 0);
  return DegreeMultiplier([d, p](int s) { return lambda_multiplier(d, p, s).real_value(); },
                          kUnbounded, "I_" + std::to_string(p), true);
}

bool DegreeMultiplier::defined_at(int s) const {
  return s >= 0 && s <= max_degree_ && !(even_only_ && s % 2 != 0);
}

double DegreeMultiplier::operator()(int s) const {
  if (!defined_at(s))
    throw std::domain_error("multiplier " + name_ + " undefined at degree " + std::to_string(s));
  return fn_(s);
}

DegreeMultiplier DegreeMultiplier::then(const DegreeMultiplier& next) const {
  auto a = fn_;
  auto b = next.fn_;
  return DegreeMultiplier([a, b](int s) { return a(s) * b(s); },
                          std::min(max_degree_, next.max_degree_), next.name_ + " " + name_,
                          even_only_ || next.even_only_);
}

HarmonicSpectrum apply_multiplier(const HarmonicSpectrum& f, const DegreeMultiplier& m) {
  HarmonicSpectrum out(f);
  for (auto& t : out.terms()) t.coeff *= m(t.degree);
  return out;
}

SphereQuadrature SphereQuadrature::monte_carlo(int d, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("SphereQuadrature: need at least one node");
  SphereQuadrature q;
  q.d = d;
  Rng rng(seed);
  q.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) q.nodes.push_back(rng.unit_vec(d));
  q.weights.assign(n, 1.0 / static_cast<double>(n));
  return q;
}

double pair(const HarmonicSpectrum& f, const SphereQuadrature& q) {
  if (f.dim() != q.d) throw std::invalid_argument("pair: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * f(q.nodes[i]);
  return s;
}

McEstimate pair_estimate(const HarmonicSpectrum& f, const SphereQuadrature& q) {
  if (f.dim() != q.d) throw std::invalid_argument("pair: dimension mismatch");
  RunningStats st;
  for (const auto& u : q.nodes) st.add(f(u));
  McEstimate e = st.estimate();
  e.value = pair(f, q);
  return e;
}

double pair_pointwise(const HarmonicSpectrum& f, const Vec& u) { return f(u); }

McEstimate subsphere_average(const SphereFunction& f, const Mat& basis,
                             std::uint64_t samples, Rng& rng) {
  const int k = static_cast<int>(basis.cols());
  if (k < 1) throw std::invalid_argument("subsphere_average: subspace must have dim >= 1");
  if (samples == 0) throw std::invalid_argument("subsphere_average: need samples > 0");
  RunningStats st;
  for (std::uint64_t i = 0; i < samples; ++i) st.add(f(Vec(basis * rng.unit_vec(k))));
  return st.estimate();
}

}  // namespace areakin
