#include "mpap/series.hpp"

#include <algorithm>
#include <sstream>

namespace mpap {

namespace {

int min_order(const USeries& a, const USeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

bool USeries::is_zero() const {
  for (int n = 0; n <= order(); ++n)
    if ((*this)[n] != 0) return false;
  return true;
}

int USeries::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if ((*this)[n] != 0) return n;
  return order() + 1;
}

bool USeries::integral() const {
  for (int n = 0; n <= order(); ++n)
    if ((*this)[n].get_den() != 1) return false;
  return true;
}

std::vector<Int> USeries::int_coeffs() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (int n = 0; n <= order(); ++n) {
    if ((*this)[n].get_den() != 1) throw NonIntegerCoefficient(n);
    out.push_back((*this)[n].get_num());
  }
  return out;
}

USeries USeries::operator-() const {
  USeries r(order());
  for (int n = 0; n <= order(); ++n) r.c_[n] = -c_[n];
  return r;
}

USeries USeries::scaled(const Rat& a) const {
  USeries r(order());
  for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] * a;
  return r;
}

USeries USeries::truncated(int order) const {
  if (order > this->order()) throw TruncationExceeded(order, this->order());
  USeries r(order);
  for (int n = 0; n <= order; ++n) r.c_[n] = c_[n];
  return r;
}

USeries USeries::shift_up(int k) const {
  USeries r(order() + k);
  for (int n = 0; n <= order(); ++n) r.c_[n + k] = c_[n];
  return r;
}

USeries USeries::shift_down(int k) const {
  for (int n = 0; n < k && n <= order(); ++n)
    if (c_[n] != 0)
      throw SeriesError("shift_down by " + std::to_string(k) +
                        " needs valuation >= " + std::to_string(k));
  if (order() < k) throw TruncationExceeded(k, order());
  USeries r(order() - k);
  for (int n = k; n <= order(); ++n) r.c_[n - k] = c_[n];
  return r;
}

USeries USeries::pow(int e) const {
  USeries r = USeries::constant(1, order());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

USeries USeries::derivative() const {
  if (order() == 0) return USeries(0);
  USeries r(order() - 1);
  for (int n = 1; n <= order(); ++n) r.c_[n - 1] = c_[n] * n;
  return r;
}

USeries operator+(const USeries& a, const USeries& b) {
  USeries r(min_order(a, b));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a[n] + b[n];
  return r;
}

USeries operator-(const USeries& a, const USeries& b) {
  USeries r(min_order(a, b));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a[n] - b[n];
  return r;
}

USeries operator*(const USeries& a, const USeries& b) {
  USeries r(min_order(a, b));
  for (int n = 0; n <= r.order(); ++n) {
    Rat acc;
    for (int i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    r.c_[n] = acc;
  }
  return r;
}

USeries USeries::div(const USeries& b) const {
  if (b.order() < 0 || b[0] == 0) throw DivisorNotUnit();
  USeries q(min_order(*this, b));
  for (int n = 0; n <= q.order(); ++n) {
    Rat acc = (*this)[n];
    for (int i = 0; i < n; ++i) acc -= q.c_[i] * b[n - i];
    q.c_[n] = acc / b[0];
  }
  return q;
}

std::string USeries::to_string() const {
  std::ostringstream os;
  for (int n = 0; n <= order(); ++n) {
    if (n) os << ' ';
    os << c_[n].get_str();
  }
  return os.str();
}

USeries sqrt_series(const USeries& a) {
  if (a[0] != 1) throw ConstantNotOne();
  // r[n] determined from (r*r)[n] = a[n]: 2*r[0]*r[n] = a[n] - sum_{0<i<n} r[i]r[n-i].
  USeries r(a.order());
  r.set(0, 1);
  for (int n = 1; n <= a.order(); ++n) {
    Rat acc = a[n];
    for (int i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r.set(n, acc / 2);
  }
  return r;
}

USeries compose(const USeries& outer, const USeries& inner) {
  if (inner[0] != 0) throw InnerConstantNonzero();
  int order = std::min(outer.order(), inner.order());
  // Horner from the top coefficient down.
  USeries inn = inner.truncated(order);
  USeries acc = USeries::constant(outer[outer.order()], order);
  for (int n = outer.order() - 1; n >= 0; --n) {
    acc = acc * inn;
    acc.set(0, acc[0] + outer[n]);
  }
  return acc;
}

USeries comp_inverse(const USeries& f) {
  if (f[0] != 0) throw InnerConstantNonzero();
  if (f.order() < 1 || f[1] == 0) throw NotInvertible();
  // Lagrange-free iteration: lift g with g(f) = z one coefficient at a time.
  int order = f.order();
  USeries g(order);
  g.set(1, Rat(1) / f[1]);
  for (int n = 2; n <= order; ++n) {
    // With g correct below n, coefficient n of g(f) equals
    // g_n * f_1^n + (known terms); solve for g_n.
    USeries trial = compose(g, f);
    Rat err = trial[n];
    Rat f1n = f[1];
    for (int i = 1; i < n; ++i) f1n *= f[1];
    g.set(n, -err / f1n);
  }
  return g;
}

USeries named_series(Named which, int order) {
  // The radicals sit under a z or z^2 factor, so work two orders higher
  // internally and hand back exactly the requested truncation.
  int w = order + 2;
  USeries z = USeries::z(w);
  USeries one = USeries::constant(1, w);
  switch (which) {
    case Named::Catalan: {
      // C = (1 - sqrt(1-4z)) / (2z)
      USeries root = sqrt_series(one - z.scaled(4));
      return (one - root).shift_down(1).scaled(Rat(1, 2)).truncated(order);
    }
    case Named::Motzkin: {
      // M = (1 - z - sqrt(1-2z-3z^2)) / (2z^2)
      USeries root = sqrt_series(one - z.scaled(2) - (z * z).scaled(3));
      return (one - z - root).shift_down(2).scaled(Rat(1, 2)).truncated(order);
    }
    case Named::RiordanNumbers: {
      // R = (1 + z - sqrt(1-2z-3z^2)) / (2z(1+z))
      USeries root = sqrt_series(one - z.scaled(2) - (z * z).scaled(3));
      return (one + z - root)
          .shift_down(1)
          .scaled(Rat(1, 2))
          .div((one + z).truncated(w - 1))
          .truncated(order);
    }
  }
  throw std::logic_error("unknown named series");
}

BSeries BSeries::from_columns(const std::vector<USeries>& cols) {
  if (cols.empty()) throw SeriesError("no columns");
  int order = cols[0].order();
  for (const auto& c : cols) order = std::min(order, c.order());
  BSeries b(order, static_cast<int>(cols.size()) - 1);
  for (int k = 0; k <= b.width(); ++k)
    for (int n = 0; n <= order; ++n) b.set(n, k, cols[static_cast<size_t>(k)][n]);
  return b;
}

USeries BSeries::column(int k) const {
  USeries c(order());
  for (int n = 0; n <= order(); ++n) c.set(n, at(n, k));
  return c;
}

BSeries BSeries::operator-() const {
  BSeries r(n_, k_);
  for (int n = 0; n <= n_; ++n)
    for (int k = 0; k <= k_; ++k) r.set(n, k, -at(n, k));
  return r;
}

BSeries BSeries::shift_u(int j) const {
  BSeries r(n_, k_ + j);
  for (int n = 0; n <= n_; ++n)
    for (int k = 0; k <= k_; ++k) r.set(n, k + j, at(n, k));
  return r;
}

BSeries BSeries::mul_z(const USeries& a) const {
  BSeries r(std::min(n_, a.order()), k_);
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= k_; ++k) {
      Rat acc;
      for (int i = 0; i <= n; ++i) acc += a[i] * at(n - i, k);
      r.set(n, k, acc);
    }
  return r;
}

BSeries BSeries::truncated(int order_z, int deg_u) const {
  if (order_z > n_ || deg_u > k_) throw TruncationExceeded(std::max(order_z, deg_u), std::min(n_, k_));
  BSeries r(order_z, deg_u);
  for (int n = 0; n <= order_z; ++n)
    for (int k = 0; k <= deg_u; ++k) r.set(n, k, at(n, k));
  return r;
}

BSeries operator+(const BSeries& a, const BSeries& b) {
  BSeries r(std::min(a.order(), b.order()), std::min(a.width(), b.width()));
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= r.width(); ++k) r.set(n, k, a.at(n, k) + b.at(n, k));
  return r;
}

BSeries operator-(const BSeries& a, const BSeries& b) {
  BSeries r(std::min(a.order(), b.order()), std::min(a.width(), b.width()));
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= r.width(); ++k) r.set(n, k, a.at(n, k) - b.at(n, k));
  return r;
}

BSeries operator*(const BSeries& a, const BSeries& b) {
  BSeries r(std::min(a.order(), b.order()), std::min(a.width(), b.width()));
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= r.width(); ++k) {
      Rat acc;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= k; ++j)
          acc += a.at(i, j) * b.at(n - i, k - j);
      r.set(n, k, acc);
    }
  return r;
}

bool BSeries::is_zero() const {
  for (int n = 0; n <= n_; ++n)
    for (int k = 0; k <= k_; ++k)
      if (at(n, k) != 0) return false;
  return true;
}

USeries BSeries::eval_u(const Rat& point) const {
  if (point != 0 && k_ < n_) throw WindowTooSmall(n_, k_);
  USeries r(n_);
  for (int n = 0; n <= n_; ++n) {
    Rat acc;
    Rat p(1);
    for (int k = 0; k <= k_; ++k) {
      acc += at(n, k) * p;
      p *= point;
    }
    r.set(n, acc);
  }
  return r;
}

USeries BSeries::eval_u(const USeries& point) const {
  if (point[0] != 0) throw InnerConstantNonzero();
  int order = std::min(n_, point.order());
  // Powers of the point reach valuation > order quickly, so a width of
  // order() suffices; anything narrower would drop visible terms.
  if (k_ < order) throw WindowTooSmall(order, k_);
  USeries p = USeries::constant(1, order);
  USeries pt = point.truncated(order);
  USeries acc(order);
  for (int k = 0; k <= k_; ++k) {
    if (k) p = p * pt;
    acc = acc + column(k).truncated(order) * p;
  }
  return acc;
}

}  // namespace mpap
