#include "mpap/riordan.hpp"

#include <stdexcept>

namespace mpap {

RiordanArray::RiordanArray(USeries g_, USeries f_) : g(std::move(g_)), f(std::move(f_)) {
  if (g[0] == 0) throw NotInvertible();
  if (f[0] != 0) throw InnerConstantNonzero();
  if (f.order() < 1 || f[1] == 0) throw NotInvertible();
}

Rat riordan_term(const RiordanArray& a, int n, int k) {
  if (n > a.order()) throw TruncationExceeded(n, a.order());
  if (k < 0 || k > n) return Rat(0);  // f has valuation 1
  USeries col = a.g.truncated(n) * a.f.truncated(n).pow(k);
  return col[n];
}

std::vector<std::vector<Rat>> term_matrix(const RiordanArray& a, int rows, int cols) {
  int n_top = rows - 1;
  if (n_top > a.order()) throw TruncationExceeded(n_top, a.order());
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  USeries col = a.g.truncated(n_top);
  USeries f = a.f.truncated(n_top);
  for (int k = 0; k < cols; ++k) {
    for (int n = 0; n < rows; ++n) m[n][k] = col[n];
    col = col * f;
  }
  return m;
}

RiordanArray riordan_mul(const RiordanArray& a, const RiordanArray& b) {
  int order = std::min(a.order(), b.order());
  USeries f1 = a.f.truncated(order);
  return RiordanArray(a.g.truncated(order) * compose(b.g.truncated(order), f1),
                      compose(b.f.truncated(order), f1));
}

RiordanArray riordan_inverse(const RiordanArray& a) {
  int order = a.order();
  USeries fbar = comp_inverse(a.f.truncated(order));
  USeries one = USeries::constant(1, order);
  return RiordanArray(one.div(compose(a.g.truncated(order), fbar)), fbar);
}

USeries riordan_apply(const RiordanArray& a, const USeries& h) {
  int order = std::min(a.order(), h.order());
  return a.g.truncated(order) * compose(h.truncated(order), a.f.truncated(order));
}

std::vector<std::vector<Rat>> rectify(const RiordanArray& a, int rows, int cols) {
  int n_top = rows - 1;
  if (n_top + 1 > a.order()) throw TruncationExceeded(n_top + 1, a.order());
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  USeries ratio = a.f.shift_down(1);
  USeries col = a.g.truncated(a.order() - 1);
  for (int k = 0; k < cols; ++k) {
    for (int n = 0; n < rows; ++n) m[n][k] = col[n];
    col = col * ratio;
  }
  return m;
}

BSeries almost_bivariate(const AlmostRiordan& a, int order, int width) {
  std::vector<USeries> cols;
  cols.push_back(a.g0.truncated(order));
  if (a.stretched) {
    // z*u*g / (1 - z^2*u*g): column k = z^(2k-1) g^k
    USeries col = a.g.shift_up(1);
    USeries step = a.g.shift_up(2);
    for (int k = 1; k <= width; ++k) {
      cols.push_back(col.truncated(order));
      col = col * step;
    }
  } else {
    if (!a.f) throw std::invalid_argument("shifted almost-Riordan form needs f");
    // z*u*g / (1 - u*f): column k = z g f^(k-1)
    USeries col = a.g.shift_up(1);
    for (int k = 1; k <= width; ++k) {
      cols.push_back(col.truncated(order));
      col = col * a.f->truncated(order);
    }
  }
  return BSeries::from_columns(cols);
}

std::vector<std::vector<Rat>> almost_matrix(const AlmostRiordan& a, int rows, int cols) {
  BSeries b = almost_bivariate(a, rows - 1, cols - 1);
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (int n = 0; n < rows; ++n)
    for (int k = 0; k < cols; ++k) m[n][k] = b.at(n, k);
  return m;
}

PseudoInvolution pseudo_involution_check(const RiordanArray& a, int size) {
  auto t = term_matrix(a, size, size);
  std::vector<std::vector<Rat>> d(size, std::vector<Rat>(size));
  for (int n = 0; n < size; ++n)
    for (int k = 0; k < size; ++k) d[n][k] = (k % 2) ? -t[n][k] : t[n][k];
  PseudoInvolution out{true, true};
  for (int n = 0; n < size; ++n)
    for (int k = 0; k < size; ++k) {
      Rat acc;
      for (int j = 0; j < size; ++j) acc += d[n][j] * d[j][k];
      if (acc != (n == k ? Rat(1) : Rat(0))) out.involution = false;
      if (acc != d[n][k]) out.idempotent = false;
    }
  return out;
}

}  // namespace mpap
