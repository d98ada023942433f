#include "zx/cli/app.hpp"

#include "zx/analysis/chowla.hpp"
#include "zx/analysis/roots.hpp"
#include "zx/arith/mangoldt.hpp"
#include "zx/explicit/verify.hpp"
#include "zx/explicit/zeta_rhs.hpp"
#include "zx/liconst/liconst.hpp"
#include "zx/mp/special.hpp"
#include "zx/zeros/sums.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

namespace zx::cli {

namespace {

namespace bmp = boost::multiprecision;
using Json = nlohmann::ordered_json;
using mp::HComplex;
using mp::HReal;
using mp::Rational;

// Raised for malformed user input that CLI11 cannot catch itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { human, json, csv };

struct RunConfig {
  unsigned bits = 192;
  std::string format = "human";
  bool json = false;
  bool deterministic = false;
  bool inexact = false;
  std::string zeros;  // path, or empty for the environment / embedded table
  std::string T;
  std::size_t K = 0;

  Format output() const {
    if (json) return Format::json;
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::human;
  }
};

// ---------------------------------------------------------------- inputs

// "p/q" or an integer; a decimal only under --inexact, read exactly.
Rational parse_number(std::string const& text, bool inexact, std::string const& what) {
  static std::regex const exact(R"(\s*[+-]?\d+(/\d+)?\s*)");
  static std::regex const decimal(R"(\s*([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?\s*)");
  if (std::regex_match(text, exact)) {
    try {
      return mp::parse_rational(text);
    } catch (std::exception const& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  std::smatch m;
  if (!std::regex_match(text, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw InputError(what + ": cannot read '" + text + "' as p/q or an integer");
  }
  if (!inexact) throw InputError(what + ": decimal '" + text + "' needs --inexact (write p/q for an exact value)");
  mp::Integer digits(m[2].str() + m[3].str());
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  exponent -= static_cast<long>(m[3].length());
  Rational r(digits);
  mp::Integer const ten_pow = bmp::pow(mp::Integer(10), static_cast<unsigned>(std::labs(exponent)));
  r = exponent >= 0 ? r * Rational(ten_pow) : r / Rational(ten_pow);
  return m[1].str() == "-" ? Rational(-r) : r;
}

HReal parse_real(std::string const& text, std::string const& what) {
  static std::regex const number(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
  if (!std::regex_match(text, number)) throw InputError(what + ": '" + text + "' is not a number");
  return mp::from_string(text);
}

zeros::ZeroTable load_table(RunConfig const& cfg) {
  std::string path = cfg.zeros;
  if (path.empty()) {
    if (char const* env = std::getenv(kZerosEnv); env && *env) path = env;
  }
  if (path.empty()) return zeros::embedded_zeta_zeros();
  return zeros::load_zeros_file(path);
}

zeros::SumSpec selection(RunConfig const& cfg, zeros::ZeroTable const& table) {
  if (!cfg.T.empty() && cfg.K != 0) throw InputError("give either --T or --K, not both");
  zeros::SumSpec spec = !cfg.T.empty() ? zeros::SumSpec::up_to(parse_real(cfg.T, "--T"))
                                       : zeros::SumSpec::first(cfg.K != 0 ? cfg.K : table.size());
  spec.deterministic = cfg.deterministic;
  return spec;
}

// ---------------------------------------------------------------- output

int digits_for(unsigned bits) { return std::max(10, static_cast<int>(bits * 0.30103) - 4); }

struct Emitter {
  int digits;
  std::string num(HReal const& x) const { return mp::to_string(x, digits); }
  Json cplx(HComplex const& z) const { return Json{{"re", num(z.re)}, {"im", num(z.im)}}; }
};

Json table_json(zeros::ZeroTable const& t) {
  return Json{{"label", t.label()}, {"source", t.source()}, {"entries", t.size()}};
}

std::string scalar_text(Json const& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(Json const& v, std::string const& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key() == "rows") continue;
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::vector<std::string> row_columns(Json const& rows) {
  std::vector<std::string> cols;
  for (auto const& row : rows) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(row, "", flat);
    for (auto const& [k, _] : flat) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

std::string csv_cell(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(Json const& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(report, "", fields);
  bool const has_rows = report.contains("rows") && report["rows"].is_array();

  if (format == Format::csv) {
    if (has_rows) {
      auto const cols = row_columns(report["rows"]);
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(cols[i]);
      out << "\n";
      for (auto const& row : report["rows"]) {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(row, "", flat);
        for (std::size_t i = 0; i < cols.size(); ++i) {
          auto it = std::find_if(flat.begin(), flat.end(), [&](auto const& p) { return p.first == cols[i]; });
          out << (i ? "," : "") << (it == flat.end() ? "" : csv_cell(it->second));
        }
        out << "\n";
      }
    } else {
      out << "field,value\n";
      for (auto const& [k, v] : fields) out << csv_cell(k) << "," << csv_cell(v) << "\n";
    }
    return;
  }

  std::size_t width = 0;
  for (auto const& [k, _] : fields) width = std::max(width, k.size());
  for (auto const& [k, v] : fields) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
  if (has_rows) {
    auto const cols = row_columns(report["rows"]);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) widths[i] = cols[i].size();
    for (auto const& row : report["rows"]) {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(row, "", flat);
      std::vector<std::string> line;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        auto it = std::find_if(flat.begin(), flat.end(), [&](auto const& p) { return p.first == cols[i]; });
        line.push_back(it == flat.end() ? "" : it->second);
        widths[i] = std::max(widths[i], line.back().size());
      }
      cells.push_back(line);
    }
    if (!fields.empty()) out << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(widths[i] + 2)) << cols[i];
    out << "\n";
    for (auto const& line : cells) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(widths[i] + 2)) << line[i];
      }
      out << "\n";
    }
  }
}

// ---------------------------------------------------------------- commands

struct EvalFArgs {
  std::string x;
};

Json cmd_eval_f(RunConfig const& cfg, EvalFArgs const& a, Emitter const& e) {
  Rational const x = parse_number(a.x, cfg.inexact, "--x");
  if (x <= 0 || x == 1) throw std::domain_error("eval-f: x must be positive and different from 1");
  Json r{{"command", "eval-f"}, {"x", mp::to_string(x)}, {"side", x > 1 ? "x>1" : "0<x<1"}};
  bool const exact_input = !cfg.inexact;
  if (exact_input) {
    r["value"] = e.num(x > 1 ? expl::f_rhs_gt1(x) : expl::f_rhs_lt1(x));
    bool const jump = x > 1 ? arith::prime_power(x).has_value()
                            : (mp::is_integer(1 / x) && arith::prime_power(1 / x).has_value());
    r["at_jump"] = jump;
    if (jump) {
      auto const [left, right] = analysis::one_sided_limits(x);
      r["left_limit"] = e.num(left);
      r["right_limit"] = e.num(right);
    }
    r["branch"] = "midpoint at jumps";
  } else {
    HReal const xr = mp::to_hreal(x);
    HReal const value = x > 1 ? xr - arith::psi0_real(xr) - mp::log_two_pi() - bmp::log1p(-1 / (xr * xr)) / 2
                              : analysis::f_lt1_real(xr);
    r["value"] = e.num(value);
    r["branch"] = "plain sum, no jump handling";
  }
  return r;
}

struct VerifyArgs {
  std::string identity;
  std::string x;
  std::string pf;
  std::string alpha = "0";
  std::string descriptor;
  std::size_t trend_divisor = 10;
};

Json cmd_verify(RunConfig const& cfg, VerifyArgs const& a, Emitter const& e) {
  expl::VerifyRequest req;
  try {
    req.id = expl::parse_identity(a.identity);
  } catch (std::invalid_argument const& ex) {
    throw InputError(ex.what());
  }
  req.x = parse_number(a.x, cfg.inexact, "--x");
  req.alpha = parse_number(a.alpha, cfg.inexact, "--alpha");
  req.trend_divisor = a.trend_divisor;
  if (!a.pf.empty()) req.pf = expl::parse_pf(a.pf);
  if (!a.descriptor.empty()) req.F = expl::load_descriptor_file(a.descriptor);
  auto const table = load_table(cfg);
  auto const spec = selection(cfg, table);
  auto const rep = expl::verify_identity(req, table, spec);

  Json r{{"command", "verify"}, {"identity", expl::to_string(rep.id)}, {"x", mp::to_string(rep.x)}};
  if (req.pf) r["pf"] = req.pf->describe();
  if (req.F) {
    r["descriptor"] = req.F->label;
    r["alpha"] = mp::to_string(req.alpha);
  }
  r["table"] = table_json(table);
  r["terms_used"] = rep.terms_used;
  r["height"] = e.num(rep.height);
  r["lhs"] = e.cplx(rep.lhs);
  r["rhs"] = e.cplx(rep.rhs);
  r["residual"] = e.cplx(rep.residual);
  r["abs_residual"] = e.num(rep.abs_residual());
  if (rep.tail_bound) {
    r["tail_bound"] = e.num(*rep.tail_bound);
    r["within_tail_bound"] = rep.abs_residual() <= *rep.tail_bound;
  }
  if (rep.trend) {
    r["trend"] = Json{{"coarse_terms", rep.trend->coarse_terms},
                      {"coarse_abs_residual", e.num(rep.trend->coarse_abs_residual)},
                      {"decreasing", rep.trend->decreasing}};
  }
  r["precision_bits"] = rep.bits;
  return r;
}

struct FindZerosArgs {
  std::string lo;
  std::string hi;
  std::string tol;
  std::string step;
};

Json cmd_find_zeros(RunConfig const& cfg, FindZerosArgs const& a, Emitter const& e) {
  Rational const lo = parse_number(a.lo, cfg.inexact, "--lo");
  Rational const hi = parse_number(a.hi, cfg.inexact, "--hi");
  analysis::ScanOptions opts;
  if (!a.tol.empty()) opts.tol = parse_number(a.tol, true, "--tol");
  if (!a.step.empty()) opts.step = parse_number(a.step, true, "--step");
  auto const recs = hi <= 1 ? analysis::find_zeros_lt1(lo, hi, opts) : analysis::find_zeros_gt1(lo, hi, opts);
  Json rows = Json::array();
  for (auto const& rec : recs) {
    Json row{{"kind", analysis::to_string(rec.kind)}, {"lo", mp::to_string(rec.lo)}, {"hi", mp::to_string(rec.hi)},
             {"root", e.num(rec.root)},          {"residual", e.num(rec.residual)}};
    if (rec.kind == analysis::RootKind::jump_crossing) {
      row["left_limit"] = e.num(rec.left_limit);
      row["right_limit"] = e.num(rec.right_limit);
    }
    rows.push_back(row);
  }
  std::size_t genuine = 0;
  for (auto const& rec : recs) genuine += rec.kind == analysis::RootKind::genuine_zero;
  return Json{{"command", "find-zeros"},
              {"lo", mp::to_string(lo)},
              {"hi", mp::to_string(hi)},
              {"tol", e.num(mp::to_hreal(opts.tol))},
              {"genuine_zeros", genuine},
              {"jump_crossings", recs.size() - genuine},
              {"rows", rows}};
}

struct LiArgs {
  unsigned n = 1;
  bool all = false;
};

Json cmd_li(RunConfig const& cfg, LiArgs const& a, Emitter const& e) {
  if (a.n < 1 || a.n > liconst::kMaxStieltjesOrder) {
    throw std::domain_error("li: n must lie in 1.." + std::to_string(liconst::kMaxStieltjesOrder));
  }
  auto const table = load_table(cfg);
  auto const spec = selection(cfg, table);
  auto const st = liconst::build_table(a.n);
  Json rows = Json::array();
  for (unsigned n = a.all ? 1 : a.n; n <= a.n; ++n) {
    auto const direct = zeros::li_lambda_direct(static_cast<int>(n), table, spec);
    HReal const identity = st.lambdas[n - 1];
    rows.push_back(Json{{"n", n},
                        {"direct", e.num(direct.estimate())},
                        {"direct_truncated", e.num(direct.value)},
                        {"direct_tail", e.num(direct.tail_mass)},
                        {"identity", e.num(identity)},
                        {"gap", e.num(bmp::abs(direct.estimate() - identity))}});
  }
  auto const used = zeros::li_lambda_direct(1, table, spec);
  return Json{{"command", "li"}, {"table", table_json(table)}, {"terms_used", used.terms_used}, {"rows", rows}};
}

struct StieltjesArgs {
  unsigned order = 10;
  std::string target;
};

Json cmd_stieltjes(RunConfig const&, StieltjesArgs const& a, Emitter const& e) {
  if (a.order < 1) throw std::domain_error("stieltjes: order >= 1 required");
  std::optional<HReal> target;
  if (!a.target.empty()) target = parse_real(a.target, "--target");
  auto const t = liconst::build_table(a.order, target);
  Json rows = Json::array();
  for (unsigned n = 0; n <= a.order; ++n) {
    Json row{{"n", n}, {"gamma", e.num(t.gammas[n].value)}, {"gamma_error", mp::to_string(t.gammas[n].error, 6)},
             {"eta", e.num(t.etas[n])}};
    if (n >= 1) {
      auto const& c = t.coffey[n - 1];
      row["lambda"] = e.num(t.lambdas[n - 1]);
      row["S1"] = e.num(c.S1);
      row["S2"] = e.num(c.S2);
      row["coffey_bounds_ok"] = c.bounds_ok;
    }
    rows.push_back(row);
  }
  return Json{{"command", "stieltjes"}, {"order", a.order}, {"rows", rows}};
}

Json cmd_rh_check(RunConfig const& cfg, Emitter const& e) {
  auto const table = load_table(cfg);
  auto spec = selection(cfg, table);
  spec.pair_with_reflection = !table.on_critical_line();
  auto const r = liconst::rh_statistic(table, spec);
  return Json{{"command", "rh-check"},
              {"table", table_json(table)},
              {"terms_used", r.terms_used},
              {"estimate", e.num(r.estimate)},
              {"target", e.num(r.target)},
              {"discrepancy", e.num(r.discrepancy)},
              {"tolerance", e.num(r.tolerance)},
              {"within", r.within},
              {"excess", e.num(r.excess)}};
}

struct ChowlaArgs {
  std::vector<std::uint64_t> d{1};
  bool theorem = false;
  std::uint64_t max_denominator = 10'000;
};

Json cmd_chowla(RunConfig const&, ChowlaArgs const& a, Emitter const& e) {
  Json rows = Json::array();
  for (auto d : a.d) {
    auto const r = analysis::chowla_selberg_check(d);
    auto const c = analysis::class_number_check(d);
    Json row{{"d", d},
             {"D", r.D},
             {"h", r.h},
             {"w", r.w},
             {"L1", e.num(r.L1)},
             {"L1_prime", e.num(r.L1_prime)},
             {"lhs", e.num(r.lhs)},
             {"rhs", e.num(r.rhs)},
             {"rel_error", mp::to_string(r.rel_error(), 6)},
             {"h_analytic", c.h_analytic},
             {"class_numbers_agree", c.agree()}};
    if (a.theorem) {
      auto const t = analysis::theorem_report(d, Rational(1, 100), Rational(99, 100), a.max_denominator);
      Json cands = Json::array();
      for (auto const& cand : t.candidates) {
        cands.push_back(Json{{"y", e.num(cand.y)},
                             {"x", e.num(cand.x)},
                             {"nearest", mp::to_string(cand.nearest)},
                             {"f_at_nearest", mp::to_string(cand.f_at_nearest, 6)},
                             {"vanishes", cand.vanishes}});
      }
      row["theorem"] = Json{{"window_y", mp::to_string(t.window_lo) + ".." + mp::to_string(t.window_hi)},
                            {"max_denominator", t.max_denominator},
                            {"rational_zero_found", t.rational_zero_found},
                            {"L1_prime_sign", t.L1_prime_sign},
                            {"candidates", cands}};
    }
    rows.push_back(row);
  }
  return Json{{"command", "chowla-selberg"}, {"rows", rows}};
}

struct SumArgs {
  std::string kind = "inv-rho";
  std::string x = "2";
  int n = 1;
};

Json cmd_sum(RunConfig const& cfg, SumArgs const& a, Emitter const& e) {
  auto const table = load_table(cfg);
  auto const spec = selection(cfg, table);
  Json r{{"command", "sum"}, {"kind", a.kind}, {"table", table_json(table)}};
  auto put = [&](zeros::TailedSum const& s) {
    r["terms_used"] = s.terms_used;
    r["height"] = e.num(s.height);
    r["value"] = e.num(s.value);
    r["tail_mass"] = e.num(s.tail_mass);
    r["estimate"] = e.num(s.estimate());
    if (s.tail_bound) r["tail_bound"] = e.num(*s.tail_bound);
  };
  if (a.kind == "inv-rho") {
    put(zeros::sum_inv_rho(table, spec));
  } else if (a.kind == "inv-rho-sq") {
    put(zeros::sum_inv_rho_sq(table, spec));
  } else if (a.kind == "li") {
    r["n"] = a.n;
    put(zeros::li_lambda_direct(a.n, table, spec));
  } else if (a.kind == "S") {
    Rational const x = parse_number(a.x, cfg.inexact, "--x");
    r["x"] = mp::to_string(x);
    put(zeros::S_sum(mp::to_hreal(x), table, spec));
  } else if (a.kind == "cosine") {
    Rational const x = parse_number(a.x, cfg.inexact, "--x");
    r["x"] = mp::to_string(x);
    r["terms_used"] = zeros::selection_size(table, spec);
    r["value"] = e.num(zeros::cosine_sum(mp::to_hreal(x), table, spec));
  } else {
    throw InputError("sum: unknown kind '" + a.kind + "' (expected inv-rho, inv-rho-sq, li, S or cosine)");
  }
  return r;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit formulas over zeta zeros: evaluation, verification and constants", "zeta-explicit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--precision", cfg.bits, "Working precision in bits")->check(CLI::Range(64u, 4096u));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_flag("--json", cfg.json, "Same as --format json");
  app.add_flag("--deterministic", cfg.deterministic, "Serial sums and no timing fields");
  app.add_flag("--inexact", cfg.inexact, "Accept decimal inputs (jump branches are not resolved)");
  auto add_zero_options = [&](CLI::App* sub) {
    sub->add_option("--zeros", cfg.zeros, std::string("Zero table file (default $") + kZerosEnv + ", else 100 embedded)");
    sub->add_option("--T", cfg.T, "Use zeros with ordinate <= T");
    sub->add_option("--K", cfg.K, "Use the first K zeros");
  };


  std::function<Json(Emitter const&)> action;

  EvalFArgs eval_f;
  auto* s_eval = app.add_subcommand("eval-f", "Closed-form f(x) on either side of 1");
  s_eval->add_option("--x", eval_f.x, "Point, p/q")->required();
  s_eval->callback([&] { action = [&](Emitter const& e) { return cmd_eval_f(cfg, eval_f, e); }; });

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "Zero sum against the closed form of one identity");
  s_verify->add_option("--identity", verify.identity, "von-mangoldt, ingham, cosine, S, general or selberg")->required();
  s_verify->add_option("--x", verify.x, "Point, p/q")->required();
  s_verify->add_option("--pf", verify.pf, "Partial-fraction input 'A0,A1,..|r1,r2,..' (general)");
  s_verify->add_option("--alpha", verify.alpha, "Shift alpha (selberg)");
  s_verify->add_option("--descriptor", verify.descriptor, "Descriptor file (selberg)");
  s_verify->add_option("--trend-divisor", verify.trend_divisor, "Coarse run uses terms/divisor (0 disables)");
  add_zero_options(s_verify);
  s_verify->callback([&] { action = [&](Emitter const& e) { return cmd_verify(cfg, verify, e); }; });

  FindZerosArgs fz;
  auto* s_fz = app.add_subcommand("find-zeros", "Sign changes of f on [lo, hi]");
  s_fz->add_option("--lo", fz.lo, "Lower end, p/q")->required();
  s_fz->add_option("--hi", fz.hi, "Upper end, p/q")->required();
  s_fz->add_option("--tol", fz.tol, "Bracket width (default 2^-100)");
  s_fz->add_option("--step", fz.step, "Scan grid spacing (default 1/256)");
  s_fz->callback([&] { action = [&](Emitter const& e) { return cmd_find_zeros(cfg, fz, e); }; });

  LiArgs li;
  auto* s_li = app.add_subcommand("li", "Li coefficient by zero sum and by the eta identity");
  s_li->add_option("--n", li.n, "Index n")->required();
  s_li->add_flag("--all", li.all, "Rows for 1..n");
  add_zero_options(s_li);
  s_li->callback([&] { action = [&](Emitter const& e) { return cmd_li(cfg, li, e); }; });

  StieltjesArgs st;
  auto* s_st = app.add_subcommand("stieltjes", "Stieltjes and eta constants, Li coefficients, Coffey split");
  s_st->add_option("--order", st.order, "Highest order N");
  s_st->add_option("--target", st.target, "Absolute error target for each gamma_n");
  s_st->callback([&] { action = [&](Emitter const& e) { return cmd_stieltjes(cfg, st, e); }; });

  auto* s_rh = app.add_subcommand("rh-check", "Sum of 1/|rho|^2 against 2 + gamma - log 4 pi");
  add_zero_options(s_rh);
  s_rh->callback([&] { action = [&](Emitter const& e) { return cmd_rh_check(cfg, e); }; });

  ChowlaArgs cs;
  auto* s_cs = app.add_subcommand("chowla-selberg", "L'(1, chi_-d)/L(1, chi_-d) against the Gamma product");
  s_cs->add_option("--d", cs.d, "Squarefree d (repeatable)")->expected(1, -1);
  s_cs->add_flag("--theorem", cs.theorem, "Add the zero-search report for f(pi sqrt(d) x)");
  s_cs->add_option("--max-denominator", cs.max_denominator, "Denominator bound for rational candidates");
  s_cs->callback([&] { action = [&](Emitter const& e) { return cmd_chowla(cfg, cs, e); }; });

  SumArgs sum;
  auto* s_sum = app.add_subcommand("sum", "Truncated zero sum with its tail figures");
  s_sum->add_option("--kind", sum.kind, "inv-rho, inv-rho-sq, li, S or cosine");
  s_sum->add_option("--x", sum.x, "Point for S and cosine, p/q");
  s_sum->add_option("--n", sum.n, "Index for li");
  add_zero_options(s_sum);
  s_sum->callback([&] { action = [&](Emitter const& e) { return cmd_sum(cfg, sum, e); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    mp::PrecisionScope precision(cfg.bits);
    Emitter const emitter{digits_for(cfg.bits)};
    auto const start = std::chrono::steady_clock::now();
    Json report = action(emitter);
    report["precision_bits"] = cfg.bits;
    if (!cfg.deterministic) {
      report["elapsed_s"] =
          mp::to_string(HReal(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()), 4);
    }
    render(report, cfg.output(), out);
    return kOk;
  } catch (InputError const& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (zeros::ZeroParseError const& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (std::ios_base::failure const& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (std::invalid_argument const& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (std::domain_error const& ex) {
    err << "error: " << ex.what() << "\n";
    return kDomainError;
  } catch (std::exception const& ex) {
    err << "error: " << ex.what() << "\n";
    return kDomainError;
  }
}

}  // namespace zx::cli
