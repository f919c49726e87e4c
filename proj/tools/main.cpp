#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mpap/enumerate.hpp"
#include "mpap/formulas.hpp"
#include "mpap/kernel.hpp"
#include "mpap/oeis.hpp"
#include "mpap/riordan.hpp"
#include "mpap/series.hpp"
#include "mpap/triangles.hpp"
#include "mpap/verify.hpp"

namespace {

using namespace mpap;
using json = nlohmann::ordered_json;

json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

json rat_json(const Rat& v) {
  if (v.get_den() == 1) return int_json(v.get_num());
  return v.get_str();
}

std::string rat_str(const Rat& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void print_sequence(const std::string& name, const std::vector<Int>& terms,
                    const std::string& format) {
  if (format == "json") {
    json doc;
    doc["name"] = name;
    json t = json::array();
    for (const auto& v : terms) t.push_back(int_json(v));
    doc["terms"] = std::move(t);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (size_t i = 0; i < terms.size(); ++i)
      std::cout << i << "," << terms[i].get_str() << "\n";
  } else {
    for (size_t i = 0; i < terms.size(); ++i)
      std::cout << (i ? " " : "") << terms[i].get_str();
    std::cout << "\n";
  }
}

void print_matrix(const std::string& family, const std::string& route,
                  const std::vector<std::vector<Rat>>& data, const std::string& format) {
  int rows = static_cast<int>(data.size());
  int cols = rows ? static_cast<int>(data[0].size()) : 0;
  if (format == "json") {
    json doc;
    doc["family"] = family;
    doc["route"] = route;
    doc["rows"] = rows;
    doc["cols"] = cols;
    json d = json::array();
    for (const auto& row : data) {
      json r = json::array();
      for (const auto& v : row) r.push_back(rat_json(v));
      d.push_back(std::move(r));
    }
    doc["data"] = std::move(d);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,k,count\n";
    for (int n = 0; n < rows; ++n)
      for (int k = 0; k < cols; ++k)
        std::cout << n << "," << k << "," << rat_str(data[n][k]) << "\n";
  } else {
    for (const auto& row : data) {
      for (size_t k = 0; k < row.size(); ++k)
        std::cout << (k ? " " : "") << rat_str(row[k]);
      std::cout << "\n";
    }
  }
}

std::vector<std::vector<Rat>> rat_matrix(const std::vector<std::vector<Int>>& data) {
  std::vector<std::vector<Rat>> out(data.size());
  for (size_t n = 0; n < data.size(); ++n)
    out[n].assign(data[n].begin(), data[n].end());
  return out;
}

void print_paths(const std::string& family, const std::string& scope,
                 const std::vector<std::string>& paths, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["family"] = family;
    doc["scope"] = scope;
    doc["paths"] = paths;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    throw std::invalid_argument("path listings have no csv form");
  } else {
    for (const auto& p : paths) std::cout << p << "\n";
  }
}

int print_reports(const std::vector<Report>& reports, const std::string& format) {
  bool ok = true;
  for (const auto& r : reports)
    if (!r.ok()) ok = false;
  if (format == "json") {
    json docs = json::array();
    for (const auto& r : reports) {
      json doc;
      doc["suite"] = r.suite;
      json checks = json::array();
      for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
      }
      doc["checks"] = std::move(checks);
      docs.push_back(std::move(doc));
    }
    std::cout << docs.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "suite,check,status,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        std::cout << csv_field(r.suite) << "," << csv_field(c.name) << ","
                  << (c.pass ? "pass" : "fail") << "," << csv_field(c.detail) << "\n";
  } else {
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << r.suite << ":" << c.name
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  return ok ? 0 : 1;
}

void run_enumerate(const std::string& ftag, int n, int k, int cap, int anti, bool list,
                   bool by_height, const std::string& format) {
  Family f = family_from_tag(ftag);
  if (anti >= 0) {
    if (n >= 0 || by_height)
      throw std::invalid_argument("--antidiagonal excludes a length argument and --by-height");
    if (list) {
      std::vector<std::string> paths;
      for (int len = 0; len <= anti; ++len)
        enumerate_paths(f, len, anti - len, [&](const LatticePath& p) {
          if (p.end_height() == anti - len) paths.push_back(render_path(p));
        });
      print_paths(ftag, "antidiagonal=" + std::to_string(anti), paths, format);
      return;
    }
    print_sequence(ftag + " antidiagonal=" + std::to_string(anti) + " count",
                   {antidiagonal_count(f, anti)}, format);
    return;
  }
  if (n < 0) throw std::invalid_argument("a path length is required (or --antidiagonal)");
  bool tall = (f == Family::M1R || f == Family::M2R);
  int cap_eff = k >= 0 ? k : cap;
  if (cap_eff < 0) {
    if (tall) throw std::invalid_argument(ftag + " has unbounded heights: pass --k or --cap");
    cap_eff = n;
  }
  std::vector<Int> tally(static_cast<size_t>(cap_eff) + 1);
  std::vector<std::string> paths;
  enumerate_paths(f, n, cap_eff, [&](const LatticePath& p) {
    int end = p.end_height();
    if (k >= 0 && end != k) return;
    tally[static_cast<size_t>(end)] += 1;
    if (list) paths.push_back(render_path(p));
  });
  std::string scope = "n=" + std::to_string(n);
  if (k >= 0) scope += " k=" + std::to_string(k);
  if (list) {
    print_paths(ftag, scope, paths, format);
    return;
  }
  if (by_height) {
    if (format == "csv") {
      std::cout << "n,k,count\n";
      for (size_t h = 0; h < tally.size(); ++h)
        std::cout << n << "," << h << "," << tally[h].get_str() << "\n";
      return;
    }
    print_sequence(ftag + " " + scope + " by-height", tally, format);
    return;
  }
  Int total = 0;
  for (const auto& v : tally) total += v;
  if (format == "csv") {
    if (k < 0) throw std::invalid_argument("csv counts need --by-height or --k");
    std::cout << "n,k,count\n" << n << "," << k << "," << total.get_str() << "\n";
    return;
  }
  print_sequence(ftag + " " + scope + " count", {total}, format);
}

void run_series(const std::string& name, const std::string& which, int kcol, int order,
                const std::string& format) {
  if (name == "catalan" || name == "motzkin" || name == "riordan_numbers") {
    Named id = name == "catalan" ? Named::Catalan
               : name == "motzkin" ? Named::Motzkin
                                   : Named::RiordanNumbers;
    print_sequence(name, named_series(id, order).int_coeffs(), format);
    return;
  }
  Family f = family_from_tag(name);
  if (which.empty()) throw std::invalid_argument("--which is required for a family series");
  std::string label = name + ":" + which;
  if (which == "total@u=0") {
    print_sequence(label, gf_closed_forms(f, order, 0).total[0].int_coeffs(), format);
  } else if (which == "total@u=1") {
    if (f == Family::M1R || f == Family::M2R)
      throw std::invalid_argument("u=1 evaluation needs bounded rows: use m1 or m2");
    GfBundle b = gf_closed_forms(f, order, order);
    print_sequence(label, b.total_bseries().eval_u(Rat(1)).int_coeffs(), format);
  } else if (which == "antidiag") {
    Triangle t = build_triangle(f, Route::ClosedForm, order + 1, order + 1);
    std::vector<Int> sums(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
      Int acc = 0;
      for (int j = 0; j <= n; ++j) acc += t.at(n - j, j);
      sums[static_cast<size_t>(n)] = acc;
    }
    print_sequence(label, sums, format);
  } else if (which == "column" || which == "f" || which == "g" || which == "h") {
    GfBundle b = gf_closed_forms(f, order, kcol);
    const std::vector<USeries>& cols = which == "f"   ? b.f
                                       : which == "g" ? b.g
                                       : which == "h" ? b.h
                                                      : b.total;
    print_sequence(label + ":k=" + std::to_string(kcol),
                   cols[static_cast<size_t>(kcol)].int_coeffs(), format);
  } else {
    throw std::invalid_argument("unknown --which: " + which);
  }
}

RiordanArray named_array(const std::string& name, int order) {
  if (name == "m1") return riordan_pair(Family::M1, order);
  if (name == "m2") return riordan_pair(Family::M2, order);
  if (name == "m1r") return rectification_pair(Family::M1R, order);
  if (name == "m2r") return rectification_pair(Family::M2R, order);
  throw std::invalid_argument("unknown array: " + name + " (expected m1, m2, m1r, m2r)");
}

Int formula_value(const std::string& name, int n, int k) {
  if (name == "m1-sum") return m1_sum_terms(n, k).t;
  if (name == "m1-direct") return m1_direct_term(n, k);
  if (name == "m1r-sum") return m1r_sum_terms(n, k).t;
  if (name == "m2-expr1") return m2_sum_terms(n, k).expr1;
  if (name == "m2-expr2") return m2_sum_terms(n, k).expr2;
  if (name == "m2-expr3") return m2_sum_terms(n, k).expr3;
  if (name == "m2r-rect") return m2r_rect_term(n, k);
  throw std::invalid_argument("unknown formula: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motzkin paths with air pockets: enumeration, triangles, series, checks"};
  app.require_subcommand(1);
  int rc = 0;

  auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
  };

  // enumerate
  std::string en_family, en_format = "plain";
  int en_n = -1, en_k = -1, en_cap = -1, en_anti = -1;
  bool en_list = false, en_count = false, en_byh = false;
  auto* en = app.add_subcommand("enumerate", "Generate or count paths of a family");
  en->add_option("family", en_family, "Family tag: m1, m2, m1r, m2r")->required();
  en->add_option("n", en_n, "Path length")->check(CLI::NonNegativeNumber);
  en->add_option("--k", en_k, "Restrict to final height k")->check(CLI::NonNegativeNumber);
  en->add_option("--cap", en_cap, "Final-height cap for the unbounded families")
      ->check(CLI::NonNegativeNumber);
  en->add_option("--antidiagonal", en_anti, "Count paths with length + final height = N")
      ->check(CLI::NonNegativeNumber);
  auto* en_list_f = en->add_flag("--list", en_list, "Print the paths");
  en->add_flag("--count", en_count, "Print counts")->excludes(en_list_f);
  en->add_flag("--by-height", en_byh, "Split the count by final height");
  add_format(en, en_format);
  en->callback([&] {
    run_enumerate(en_family, en_n, en_k, en_cap, en_anti, en_list, en_byh, en_format);
  });

  // triangle
  std::string tr_family, tr_route = "closed", tr_format = "plain";
  int tr_rows = 0, tr_cols = 0;
  auto* tr = app.add_subcommand("triangle", "Emit a counting triangle block");
  tr->add_option("family", tr_family, "Family tag")->required();
  tr->add_option("rows", tr_rows, "Rows")->required()->check(CLI::PositiveNumber);
  tr->add_option("cols", tr_cols, "Columns")->required()->check(CLI::PositiveNumber);
  tr->add_option("--route", tr_route, "Construction route")
      ->check(CLI::IsMember({"enum", "iter", "closed", "recur", "riordan"}))
      ->capture_default_str();
  add_format(tr, tr_format);
  tr->callback([&] {
    Triangle t = build_triangle(family_from_tag(tr_family), route_from_tag(tr_route),
                                tr_rows, tr_cols);
    print_matrix(tr_family, tr_route, rat_matrix(t.data), tr_format);
  });

  // series
  std::string se_name, se_which, se_format = "plain";
  int se_k = 0, se_order = 9;
  auto* se = app.add_subcommand("series", "Print coefficients of a generating function");
  se->add_option("name", se_name, "Family tag or catalan, motzkin, riordan_numbers")
      ->required();
  se->add_option("--which", se_which,
                 "total@u=0, total@u=1, antidiag, column, f, g, h (family series only)");
  se->add_option("--k", se_k, "Column index for column/f/g/h")->check(CLI::NonNegativeNumber);
  se->add_option("--order", se_order, "Truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_format(se, se_format);
  se->callback([&] { run_series(se_name, se_which, se_k, se_order, se_format); });

  // verify
  std::string ve_suite = "all", ve_format = "plain";
  int ve_order = 12, ve_width = 12;
  auto* ve = app.add_subcommand("verify", "Run the consistency check suites");
  std::vector<std::string> suites = verify_suite_names();
  suites.insert(suites.begin(), "all");
  ve->add_option("--suite", ve_suite, "Suite name")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  ve->add_option("--order", ve_order, "Series truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ve->add_option("--width", ve_width, "Column window")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_format(ve, ve_format);
  ve->callback([&] { rc = print_reports(run_suites(ve_suite, ve_order, ve_width), ve_format); });

  // riordan
  auto* ri = app.add_subcommand("riordan", "Operate on the named Riordan arrays");
  ri->require_subcommand(1);
  std::string ri_format = "plain";

  std::string rt_array;
  int rt_n = 0, rt_k = 0;
  auto* rt = ri->add_subcommand("term", "Single array entry");
  rt->add_option("array", rt_array, "m1, m2, m1r, m2r")->required();
  rt->add_option("n", rt_n, "Row")->required()->check(CLI::NonNegativeNumber);
  rt->add_option("k", rt_k, "Column")->required()->check(CLI::NonNegativeNumber);
  add_format(rt, ri_format);
  rt->callback([&] {
    Rat v = riordan_term(named_array(rt_array, rt_n + 2), rt_n, rt_k);
    if (ri_format == "json") {
      json doc;
      doc["name"] = rt_array + "(" + std::to_string(rt_n) + "," + std::to_string(rt_k) + ")";
      doc["terms"] = json::array({rat_json(v)});
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << rat_str(v) << "\n";
    }
  });

  std::string rm_a, rm_b;
  int rm_rows = 9, rm_cols = 9;
  auto* rm = ri->add_subcommand("mul", "Group product of two arrays");
  rm->add_option("a", rm_a, "Left array")->required();
  rm->add_option("b", rm_b, "Right array")->required();
  rm->add_option("--rows", rm_rows, "")->check(CLI::PositiveNumber)->capture_default_str();
  rm->add_option("--cols", rm_cols, "")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(rm, ri_format);
  rm->callback([&] {
    int ord = rm_rows + 2;
    RiordanArray p = riordan_mul(named_array(rm_a, ord), named_array(rm_b, ord));
    print_matrix(rm_a + "*" + rm_b, "riordan", term_matrix(p, rm_rows, rm_cols), ri_format);
  });

  std::string rv_a;
  int rv_rows = 9, rv_cols = 9;
  auto* rv = ri->add_subcommand("inverse", "Group inverse of an array");
  rv->add_option("array", rv_a, "")->required();
  rv->add_option("--rows", rv_rows, "")->check(CLI::PositiveNumber)->capture_default_str();
  rv->add_option("--cols", rv_cols, "")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(rv, ri_format);
  rv->callback([&] {
    RiordanArray inv = riordan_inverse(named_array(rv_a, rv_rows + 2));
    print_matrix(rv_a + "^-1", "riordan", term_matrix(inv, rv_rows, rv_cols), ri_format);
  });

  std::string rr_a;
  int rr_rows = 9, rr_cols = 9;
  auto* rr = ri->add_subcommand("rectify", "Rectangular expansion g (f/z)^k");
  rr->add_option("array", rr_a, "")->required();
  rr->add_option("--rows", rr_rows, "")->check(CLI::PositiveNumber)->capture_default_str();
  rr->add_option("--cols", rr_cols, "")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(rr, ri_format);
  rr->callback([&] {
    RiordanArray a = named_array(rr_a, rr_rows + 2);
    print_matrix(rr_a, "rectify", rectify(a, rr_rows, rr_cols), ri_format);
  });

  // formula
  std::string fo_name, fo_format = "plain";
  int fo_n = -1, fo_k = -1;
  bool fo_manifest = false;
  auto* fo = app.add_subcommand("formula", "Evaluate a named closed form at (n, k)");
  auto* fo_name_opt = fo->add_option(
      "name", fo_name, "m1-sum, m1-direct, m1r-sum, m2-expr1, m2-expr2, m2-expr3, m2r-rect");
  fo->add_option("n", fo_n, "Row")->check(CLI::NonNegativeNumber);
  fo->add_option("k", fo_k, "Column")->check(CLI::NonNegativeNumber);
  fo->add_flag("--manifest", fo_manifest, "Print the validated-range manifest")
      ->excludes(fo_name_opt);
  add_format(fo, fo_format);
  fo->callback([&] {
    if (fo_manifest) {
      std::cout << formula_manifest_json() << "\n";
      return;
    }
    if (fo_name.empty()) throw std::invalid_argument("a formula name is required");
    if (fo_n < 0 || fo_k < 0) throw std::invalid_argument("formula evaluation needs n and k");
    Int v = formula_value(fo_name, fo_n, fo_k);
    std::string label =
        fo_name + "(" + std::to_string(fo_n) + "," + std::to_string(fo_k) + ")";
    print_sequence(label, {v}, fo_format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mpap::OeisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.kind == OeisErrorKind::NetworkDisabled || e.kind == OeisErrorKind::FetchFailed)
               ? 3
               : 2;
  } catch (const mpap::RouteUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mpap::SeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
