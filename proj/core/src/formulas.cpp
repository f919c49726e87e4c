#include "mpap/formulas.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "json.hpp"

namespace mpap {

Int binomial(const Int& a, long b) {
  if (b < 0) return Int(0);
  Int r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

Int catalan_number(int n) {
  Int r = binomial(Int(2 * n), n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return r;
}

Int motzkin_number(int n) {
  Int acc = 0;
  for (int k = 0; 2 * k <= n; ++k) acc += binomial(Int(n), 2 * k) * catalan_number(k);
  return acc;
}

namespace {

int sign(long e) { return (e % 2) ? -1 : 1; }
bool even(long m) { return m % 2 == 0; }

Int as_int(const Rat& v, int where) {
  if (v.get_den() != 1) throw NonIntegerCoefficient(where);
  return v.get_num();
}

// Catalan-triangle entry (k+1)/(n+1) * binom(2n-k, n-k).
Rat c_entry(int n, int k) {
  return Rat(k + 1) / Rat(n + 1) * Rat(binomial(Int(2 * n - k), n - k));
}

Int d_entry(int n, int k) {
  Int acc = 0;
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= j; ++i) {
      long m = n - k - j - i;
      if (m < 0 || !even(m)) continue;
      acc += binomial(Int(k), j) * sign(j) * binomial(Int(j), i) * sign(i) *
             binomial(Int(2 * k - 1 + m / 2), 2 * k - 1);
    }
  return acc;
}

Int b_entry(int n, int k) {
  Int acc = 0;
  for (int j = 0; j <= 2 * k; ++j) {
    Int inner = 0;
    for (int i = 0; i <= n - 2 * j; ++i)
      inner += binomial(Int(k + i - 1), i) * binomial(Int(i), n - 2 * j - i) * sign(n - i);
    acc += binomial(Int(2 * k), j) * sign(j) * inner;
  }
  return acc;
}

Int a_entry(int n, int k) {
  Rat acc;
  for (int j = 0; j <= n; ++j) acc += c_entry(j, k) * Rat(d_entry(n, j));
  return as_int(acc, n);
}

Int t41(int n, int k) {
  std::vector<Int> a(n + 1), b(n + 1);
  for (int j = 0; j <= n; ++j) {
    a[j] = a_entry(j, k);
    b[j] = b_entry(j, k);
  }
  Int acc = 0;
  for (int i = 0; i <= n; i += 2) {
    Int s = 0;
    for (int j = 0; j <= n - i; ++j) s += a[j] * b[n - i - j];
    acc += binomial(Int(k + i / 2), i / 2) * s;
  }
  return acc;
}

// Shared inner kernel-power sum of the direct M1 form, cached on (a, j).
Int prop2_z(int a, int j) {
  static std::map<std::pair<int, int>, Int> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, j});
    if (it != cache.end()) return it->second;
  }
  Int acc = 0;
  for (int m = 0; m <= j; ++m)
    for (int p = 0; p <= m; ++p) {
      long q = a - m - p;
      if (q < 0 || !even(q)) continue;
      acc += binomial(Int(j), m) * sign(m) * binomial(Int(m), p) * sign(p) *
             binomial(Int(2 * j - 1 + q / 2), q / 2);
    }
  std::lock_guard<std::mutex> lock(mu);
  cache.insert({{a, j}, acc});
  return acc;
}

Int prop2(int n, int k) {
  Rat acc;
  for (int i = 0; i <= n - k; ++i) {
    long w = n - k - i;
    if (!even(w)) continue;
    Int outer = binomial(Int(k + w / 2), w / 2);
    Rat inner;
    for (int j = 0; j <= i; ++j) inner += c_entry(k + j, k) * Rat(prop2_z(i - j, j));
    acc += Rat(outer) * inner;
  }
  return as_int(acc, n);
}

Int v42(int n) {
  static std::map<int, Int> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Int acc = 0;
  for (int k = 0; k <= n; ++k) {
    Int cat = catalan_number(k);
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        int top = n - 3 * k - j - i;
        if (top < 0) continue;
        Int pre = binomial(Int(k), j) * sign(j) * binomial(Int(j), i) * sign(i) * cat;
        for (int l = 0; l <= top; ++l)
          for (int m = 0; m <= l; ++m) {
            int t = top - l - m;
            if (t < 0) continue;
            Int three = 1;
            for (int e = 0; e < l - m; ++e) three *= 3;
            acc += pre * binomial(Int(2 * k + l), l) * binomial(Int(l), m) * three *
                   sign(m) * binomial(Int(m), t) * sign(t);
          }
      }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.insert({n, acc});
  return acc;
}

Int m42(int n, int k) {
  if (n == 0) return Int(k == 0 ? 1 : 0);
  if (k == 0) return Int(0);
  Rat val = Rat(k) / Rat(n) * Rat(binomial(Int(2 * n - k - 1), n - k));
  return as_int(val, n);
}

Int t42_z(int j, int m) {
  static std::map<std::pair<int, int>, Int> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({j, m});
    if (it != cache.end()) return it->second;
  }
  Int acc = 0;
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= p; ++q) {
      long w = j - m - p - q;
      if (w < 0 || !even(w)) continue;
      acc += binomial(Int(m), p) * sign(p) * binomial(Int(p), q) * sign(q) *
             binomial(Int(2 * m - 1 + w / 2), w / 2);
    }
  std::lock_guard<std::mutex> lock(mu);
  cache.insert({{j, m}, acc});
  return acc;
}

// The rectangular-array sum for M1R; equals the triangle entry t(n+1, k+1).
Int t42(int n, int k) {
  Rat acc;
  for (int i = 0; i <= n + k; ++i) {
    Int vi = v42(n + k - i);
    if (vi == 0) continue;
    for (int j = 0; j <= i; ++j) {
      if (!even(i - j)) continue;
      Int outer = binomial(Int(k), (i - j) / 2) * sign((i - j) / 2);
      if (outer == 0) continue;
      Int inner = 0;
      for (int m = 0; m <= j; ++m) {
        Int mv = m42(m, k);
        if (mv == 0) continue;
        inner += mv * t42_z(j, m);
      }
      acc += Rat(vi) * Rat(outer) * Rat(inner);
    }
  }
  return as_int(acc, n);
}

Int expr1(int n, int k) {
  if (n == k) return Int(1);
  Rat acc;
  for (int j = 1; j <= n - k; ++j) {
    Rat s;
    for (int i = 0; i <= n - k; ++i)
      s += Rat(1) / Rat(n - k) * Rat(binomial(Int(i), n - k - i + j)) *
           Rat(binomial(Int(n - k), i));
    acc += Rat(j * sign(n - k - j)) * Rat(binomial(Int(n + j), j)) * s;
  }
  acc *= Rat(k + 1) / Rat(n + 1);
  return as_int(acc, n);
}

Int expr2(int n, int k) {
  Rat acc;
  for (int j = 0; j <= n; ++j) {
    Rat s;
    for (int i = 0; i <= j - k; ++i)
      s += Rat(1) / Rat(k + i + 1) * Rat(binomial(Int(k + 2 * i), i)) *
           Rat(binomial(Int(j - i - 1), j - k - i));
    acc += Rat(binomial(Int(n - 1), n - j)) * Rat(sign(n - j) * (k + 1)) * s;
  }
  return as_int(acc, n);
}

Int expr3(int n, int k) {
  if (n == k) return Int(1);
  Int acc = 0;
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= n - k; ++i)
      acc += binomial(Int(k), j) * binomial(Int(n - k), i) *
             binomial(Int(i), n - k - i - j - 1);
  Rat val = Rat(k + 1) / Rat(n - k) * Rat(acc);
  return as_int(val, n);
}

Int r44(int n, int k) {
  Rat acc;
  for (int i = 0; i <= n; ++i) {
    int ind = (n == i) ? 1 : 0;
    Int num = motzkin_number(i) * Int(k + ind);
    int den = n + k - i + ind;
    if (num == 0) continue;
    Int s1 = 0;
    for (int j = 0; j <= n - i; ++j) {
      Int s2 = 0;
      for (int l = 0; l <= n + k - i; ++l)
        s2 += binomial(Int(n + k - i), l) * binomial(Int(l), n - i - j - l);
      s1 += sign(n - i - j) * binomial(Int(n + k - i + j - 1), j) * s2;
    }
    acc += Rat(num) / Rat(den) * Rat(s1);
  }
  return as_int(acc, n);
}

}  // namespace

M1SumTerms m1_sum_terms(int n, int k) {
  return M1SumTerms{t41(n, k), a_entry(n, k), b_entry(n, k), as_int(c_entry(n, k), n),
                    d_entry(n, k)};
}

Int m1_direct_term(int n, int k) { return prop2(n, k); }

M1RSumTerms m1r_sum_terms(int n, int k) {
  Int t = (n >= 1 && k >= 1) ? t42(n - 1, k - 1) : Int(0);
  return M1RSumTerms{v42(n), std::move(t), m42(n, k)};
}

M2SumTerms m2_sum_terms(int n, int k) {
  return M2SumTerms{expr1(n, k), expr2(n, k), expr3(n, k)};
}

Int m2r_rect_term(int n, int k) { return r44(n, k); }

bool formula_validated(FormulaId id, int n, int k) {
  switch (id) {
    case FormulaId::M1Sum:
      return !(k == 0 && n % 2 == 0);
    case FormulaId::M1RSum:
      return n >= 1 && k >= 1;
    case FormulaId::M1Direct:
    case FormulaId::M2Expr1:
    case FormulaId::M2Expr2:
    case FormulaId::M2Expr3:
    case FormulaId::M2RRect:
      return true;
  }
  return false;
}

std::string formula_manifest_json() {
  nlohmann::json doc;
  doc["formulas"] = nlohmann::json::array();
  auto add = [&](const char* id, const char* target, const char* validated,
                 const char* note) {
    nlohmann::json f;
    f["id"] = id;
    f["target"] = target;
    f["validated"] = validated;
    if (*note) f["note"] = note;
    doc["formulas"].push_back(f);
  };
  add("m1-sum", "m1 triangle t(n,k)", "k >= 1, or k == 0 with n odd",
      "on column 0 at even n the sum evaluates to t(n,0) - 1");
  add("m1-direct", "m1 triangle t(n,k)", "all n, k >= 0", "");
  add("m1r-sum", "m1r triangle t(n,k)", "n >= 1 and k >= 1",
      "evaluates the rectangular-array sum at (n-1, k-1); row 0 and column 0 "
      "are outside the sum's range");
  add("m2-expr1", "m2 triangle t(n,k)", "all n, k >= 0", "");
  add("m2-expr2", "m2 triangle t(n,k)", "all n, k >= 0", "");
  add("m2-expr3", "m2 triangle t(n,k)", "all n, k >= 0", "");
  add("m2r-rect", "m2r rectangular array r(n,k)", "all n, k >= 0",
      "triangle rows follow as t(n,k) = r(n-1,k) for n >= 1");
  return doc.dump(2);
}

}  // namespace mpap
